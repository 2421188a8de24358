#include "schur/counting.hpp"

#include "schur/errors.hpp"
#include "schur/parallel.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace schur {

TripleList enumerate_triples(int n, const TripleRule& rule) {
    if (n < 1) throw std::invalid_argument("enumerate_triples: n must be >= 1");
    long long total = 0;
    for (int y = 1; y <= n; ++y) {
        long long d = rule.floor_ay(y);
        if (d > n - 1) break;  // d never decreases in y
        total += n - d;
    }
    if (total > 50'000'000)
        throw CapExceeded("enumerate_triples: " + std::to_string(total) +
                          " triples would not fit in memory; count without materializing");
    TripleList list;
    list.n = n;
    list.rule = rule;
    list.entries.reserve(static_cast<std::size_t>(total));
    for (int y = 1; y <= n; ++y) {
        long long d = rule.floor_ay(y);
        if (d > n - 1) break;
        for (int x = 1; x + d <= n; ++x)
            list.entries.push_back({x, y, static_cast<int>(x + d)});
    }
    return list;
}

long long count_mono(const Coloring& coloring, const TripleList& triples) {
    if (coloring.n() != triples.n)
        throw std::invalid_argument("count_mono: coloring and triple list sizes differ");
    long long total = 0;
    for (const Triple& e : triples.entries) {
        bool bx = coloring.blue(e.x);
        if (bx == coloring.blue(e.y) && bx == coloring.blue(e.z)) ++total;
    }
    return total;
}

long long count_mono(const Coloring& coloring, const TripleRule& rule) {
    const int n = coloring.n();
    long long total = 0;
    for (int y = 1; y <= n; ++y) {
        long long d = rule.floor_ay(y);
        if (d > n - 1) break;
        bool by = coloring.blue(y);
        for (int x = 1; x + d <= n; ++x)
            if (coloring.blue(x) == by && coloring.blue(static_cast<int>(x + d)) == by)
                ++total;
    }
    return total;
}

namespace {

// Word order on masks, R (0) before B (1); the lowest differing bit decides
// because bit i-1 is the i-th letter.
inline bool word_less(std::uint32_t a, std::uint32_t b) {
    std::uint32_t d = a ^ b;
    if (d == 0) return false;
    return (a & (d & -d)) == 0;
}

inline bool mono_under(std::uint32_t mask, int bx, int by, int bz) {
    std::uint32_t cx = (mask >> bx) & 1u;
    return cx == ((mask >> by) & 1u) && cx == ((mask >> bz) & 1u);
}

struct ShardOutcome {
    long long best = std::numeric_limits<long long>::max();
    std::vector<std::uint32_t> witnesses;  // word order, capped
};

}  // namespace

MinimizationResult brute_force_min(int n, const TripleRule& rule, int max_witnesses,
                                   int hard_cap, int threads) {
    if (n < 1) throw std::invalid_argument("brute_force_min: n must be >= 1");
    if (hard_cap > 30) hard_cap = 30;  // the mask walk is 32-bit
    if (n > hard_cap)
        throw CapExceeded("brute_force_min: n = " + std::to_string(n) +
                          " exceeds the search cap " + std::to_string(hard_cap));
    if (max_witnesses < 0) max_witnesses = 0;

    const TripleList list = enumerate_triples(n, rule);
    const std::vector<Triple>& entries = list.entries;

    // Triple indices per element, so a color flip recounts only the triples
    // containing the flipped element (each triple once per distinct element).
    std::vector<int> offset(static_cast<std::size_t>(n) + 2, 0);
    auto for_distinct = [](const Triple& e, auto&& fn) {
        fn(e.x);
        if (e.y != e.x) fn(e.y);
        if (e.z != e.x && e.z != e.y) fn(e.z);
    };
    for (const Triple& e : entries)
        for_distinct(e, [&](int v) { ++offset[static_cast<std::size_t>(v) + 1]; });
    for (int v = 1; v <= n; ++v) offset[static_cast<std::size_t>(v) + 1] += offset[v];
    std::vector<std::int32_t> touching(static_cast<std::size_t>(offset[static_cast<std::size_t>(n) + 1]));
    {
        std::vector<int> cursor(offset.begin(), offset.end() - 1);
        for (std::size_t idx = 0; idx < entries.size(); ++idx)
            for_distinct(entries[idx], [&](int v) {
                touching[static_cast<std::size_t>(cursor[static_cast<std::size_t>(v)]++)] =
                    static_cast<std::int32_t>(idx);
            });
    }

    // Element 1 stays red; the complement of every examined coloring has the
    // same count. High-order bits are sharded with a count fixed by n alone,
    // so the outcome is independent of the thread count.
    const int free_bits = n - 1;
    const int shard_bits = std::clamp(free_bits - 16, 0, 8);
    const int walk_bits = free_bits - shard_bits;
    const int nshards = 1 << shard_bits;

    std::vector<ShardOutcome> shards(static_cast<std::size_t>(nshards));
    parallel_for(0, nshards, threads, [&](int shard) {
        ShardOutcome& out = shards[static_cast<std::size_t>(shard)];
        auto add_witness = [&](std::uint32_t m) {
            if (max_witnesses == 0) return;
            auto& ws = out.witnesses;
            if (static_cast<int>(ws.size()) == max_witnesses) {
                if (!word_less(m, ws.back())) return;
                ws.pop_back();
            }
            ws.insert(std::lower_bound(ws.begin(), ws.end(), m, word_less), m);
        };

        std::uint32_t mask = static_cast<std::uint32_t>(shard) << (walk_bits + 1);
        long long current = 0;
        for (const Triple& e : entries)
            if (mono_under(mask, e.x - 1, e.y - 1, e.z - 1)) ++current;
        out.best = current;
        add_witness(mask);

        // Gray-code walk over the low walk_bits (mask bits 1..walk_bits).
        for (std::uint64_t g = 1; g < (std::uint64_t{1} << walk_bits); ++g) {
            int bit = std::countr_zero(g) + 1;
            std::uint32_t next = mask ^ (std::uint32_t{1} << bit);
            int element = bit + 1;
            long long delta = 0;
            for (int k = offset[static_cast<std::size_t>(element)];
                 k < offset[static_cast<std::size_t>(element) + 1]; ++k) {
                const Triple& e = entries[static_cast<std::size_t>(touching[static_cast<std::size_t>(k)])];
                delta += mono_under(next, e.x - 1, e.y - 1, e.z - 1) -
                         mono_under(mask, e.x - 1, e.y - 1, e.z - 1);
            }
            mask = next;
            current += delta;
            if (current < out.best) {
                out.best = current;
                out.witnesses.clear();
                add_witness(mask);
            } else if (current == out.best) {
                add_witness(mask);
            }
        }
    });

    MinimizationResult result;
    result.minimum = std::numeric_limits<long long>::max();
    for (const ShardOutcome& sh : shards) result.minimum = std::min(result.minimum, sh.best);
    for (const ShardOutcome& sh : shards) {
        if (sh.best != result.minimum) continue;
        for (std::uint32_t m : sh.witnesses) {
            if (static_cast<int>(result.witnesses.size()) >= max_witnesses) break;
            result.witnesses.emplace_back(n, m);
        }
    }
    result.colorings_examined = std::uint64_t{1} << free_bits;
    return result;
}

}  // namespace schur
