#pragma once
// Exact enumeration of generalized Schur triples (x, y, x + floor(a*y))
// inside {1..n}, counting of the monochromatic ones under a 2-coloring,
// and the exhaustive minimum over all 2-colorings.
//
// Triples are ordered pairs (x, y) with z = x + floor(a*y) <= n; (x, y) and
// (y, x) are distinct triples when x != y, and floor(a*y) = 0 gives z = x.

#include "schur/coloring.hpp"
#include "schur/triple_rule.hpp"

#include <cstdint>
#include <vector>

namespace schur {

struct Triple {
    int x = 0, y = 0, z = 0;
    bool operator==(const Triple&) const = default;
};

struct TripleList {
    int n = 0;
    TripleRule rule;
    std::vector<Triple> entries;  // ordered by (y, x)
};

TripleList enumerate_triples(int n, const TripleRule& rule);

long long count_mono(const Coloring& coloring, const TripleList& triples);
long long count_mono(const Coloring& coloring, const TripleRule& rule);

struct MinimizationResult {
    long long minimum = 0;
    // Minimizing colorings with element 1 red, in (shard, word) order,
    // capped at max_witnesses. The complements minimize too.
    std::vector<Coloring> witnesses;
    std::uint64_t colorings_examined = 0;
};

// Scans the 2^(n-1) colorings with element 1 red (counts are invariant
// under swapping the two colors). Throws CapExceeded when n > hard_cap.
// threads = 0 means hardware concurrency; the result does not depend on it.
MinimizationResult brute_force_min(int n, const TripleRule& rule,
                                   int max_witnesses = 16, int hard_cap = 26,
                                   int threads = 0);

}  // namespace schur
