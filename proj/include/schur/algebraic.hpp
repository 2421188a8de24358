#pragma once
// The piecewise-rational global minimum m(a) = min_{s,t} A(s, t, a), its
// minimizer (s0(a), t0(a)), and the algebraic numbers where the governing
// formula branch changes. Ten branches cover a > 0; their endpoints are
// eight polynomial roots plus a = 1.

#include <array>
#include <utility>
#include <vector>

namespace schur {

// A real algebraic number: integer polynomial (ascending coefficients) with
// exactly one sign change of p across [lo, hi].
struct AlgebraicNumber {
    std::vector<long long> poly;
    double lo = 0, hi = 0;
};

double poly_value(const std::vector<long long>& coeffs, double x);

// Bisects the isolating interval down to width <= tol (or until double
// precision is exhausted); returns the refined interval.
std::pair<double, double> refine_root(const AlgebraicNumber& r, double tol);

// Midpoint of the interval refined to 1e-12.
double root_value(const AlgebraicNumber& r);

// The branch endpoints in increasing order, k = 1..8. All but k = 8 lie in
// (0, 1); the 8th lies in (1, 2).
AlgebraicNumber breakpoint(int k);

// Ratio of integer polynomials in a, ascending coefficients.
struct RationalFn {
    std::vector<long long> num, den;
    double operator()(double a) const;
};

struct MinBranch {
    int index = 0;        // 1..10, ordered by a
    RationalFn s0, t0, m;
};

const std::array<MinBranch, 10>& min_branches();

// Branch governing the given a > 0. Inside a breakpoint's refined interval
// both neighbours are evaluated, their m values are checked to agree to
// 1e-9, and the left branch is reported.
int branch_index(double a);

// m(a), the minimum area.
double min_area_value(double a);

struct MinLocation {
    int branch = 0;          // left branch index
    double s0 = 0, t0 = 0;   // its minimizer
    // The minimizer jumps across the 4th breakpoint. Inside that
    // breakpoint's refined interval both one-sided locations are reported.
    bool two_sided = false;
    double s0_right = 0, t0_right = 0;
};

MinLocation min_area_location(double a);

}  // namespace schur
