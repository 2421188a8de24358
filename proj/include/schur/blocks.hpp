#pragma once
// Block colorings (R^s B^(t-s) R^(n-t) and R^s B^(t-s) R^(u-t) B^(n-u)),
// closed-form and summation counts of their monochromatic triples, the
// block-restricted searches, and the exact minimum formulas with their
// per-residue corrections.

#include "schur/coloring.hpp"
#include "schur/counting.hpp"
#include "schur/triple_rule.hpp"

#include <utility>
#include <vector>

namespace schur {

struct ThreeBlockColoring {
    int n = 0, s = 0, t = 0;  // 1 <= s <= t <= n
    ThreeBlockColoring(int n, int s, int t);
    Coloring expand() const;
};

struct FourBlockColoring {
    int n = 0, s = 0, t = 0, u = 0;  // 1 <= s <= t <= u <= n
    FourBlockColoring(int n, int s, int t, int u);
    Coloring expand() const;
};

// Color pattern of (x, y, z) against the blocks: 1 = first red block,
// 2 = middle blue block, 3 = trailing red block. z >= x rules out 311, 331.
enum class TripleClass { c111, c222, c113, c131, c133, c313, c333 };

const char* label(TripleClass c);  // "111", "222", ...

// Exact monochromatic count for a block coloring, any a. Linear in n.
long long mgst_block_count(const ThreeBlockColoring& blocks, const TripleRule& rule);
long long mgst_block_count(const FourBlockColoring& blocks, const TripleRule& rule);

// Closed form for a = 1 under the hypotheses t >= 2s and s >= n - t.
long long closed_block_count_a1(long long n, long long s, long long t);

// Four-sum form for integer a >= 1 under as + t >= n, t >= as, s + as <= t.
long long sum_block_count(int n, int s, int t, const TripleRule& rule);

// Closed form for a = 2, same hypotheses as sum_block_count.
long long closed_block_count_a2(long long n, long long s, long long t);

// Five-sum form for a = 1/2 under n/2 <= t <= 2n/3, t - s <= n/2, 2s <= t.
long long sum_block_count_half(int n, int s, int t);

// The five coefficient families with published exact minima, plus the
// four-block conjecture for a = 1/2.
enum class FormulaId { A1, A2, A3, A4, Half, Conjecture };

// Maps 1, 2, 3, 4, 1/2 to the matching id; throws UnsupportedCoefficient.
FormulaId formula_for(const TripleRule& rule);
TripleRule rule_for(FormulaId id);

enum class SearchMode { Full, Windowed };

struct BlockSearchResult {
    long long minimum = 0;
    std::vector<int> boundaries;  // (s, t) or (s, t, u), lexicographically
                                  // smallest among the minimizers
};

// Minimum over all 3- or 4-block colorings of {1..n}. Full mode scans every
// boundary tuple (4-block full throws CapExceeded for n > 400); windowed
// mode scans a +-window box around the predicted minimizer. threads = 0
// means hardware concurrency; results are thread-count independent.
BlockSearchResult block_search_min(int n, const TripleRule& rule, int blocks,
                                   SearchMode mode = SearchMode::Full,
                                   int window = 25, int threads = 0);

// Predicted minimizing (s0, t0) for a in {1,2,3,4,1/2}. Returned verbatim
// from the formulas; for a handful of n <= 6 the values degenerate
// (s0 = 0 or t0 < s0) and describe colorings with an empty first block.
std::pair<long long, long long> minimizer_location(int n, const TripleRule& rule);

// Exact minimum over all 2-colorings for a in {1,2,3,4,1/2}.
long long exact_min_formula(long long n, FormulaId id);
long long exact_min_formula(long long n, const TripleRule& rule);

struct ConjectureValue {
    long long value = 0;
    int s = 0, t = 0, u = 0;   // predicted four-block boundaries
    bool verified_range = false;  // true for n >= 12; below that the claim is open
};

// Conjectured global minimum for a = 1/2 with its four-block witness.
ConjectureValue conjecture_formula(int n);

// Quadratic lattice form whose nonnegativity over the integers certifies
// the a = 1 block minimizer: 5i + 5i^2 - 3j - 4ij + 3j^2.
long long minimizer_lattice_form(long long i, long long j);

struct Rat {
    long long num = 0, den = 1;
    Rat() = default;
    Rat(long long n, long long d);
    Rat operator+(const Rat& o) const;
    Rat operator-(const Rat& o) const;
    bool operator==(const Rat&) const = default;
    bool operator<(const Rat& o) const;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// M(n) decomposed as (lead n^2 + beta n)/gamma + delta[n mod modulus]
// + correction[n mod modulus], everything exact.
struct ResidueFormula {
    FormulaId id = FormulaId::A1;
    int modulus = 1;
    long long lead = 1, beta = 0, gamma = 1;
    std::vector<Rat> deltas;       // size modulus
    std::vector<int> corrections;  // size modulus
    long long evaluate(long long n) const;
    Rat delta_window() const;  // max delta - min delta, must be < 1
};

ResidueFormula residue_formula(FormulaId id);  // A1..A4, Half

}  // namespace schur
