#include "schur/algebraic.hpp"

#include "schur/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace schur {

double poly_value(const std::vector<long long>& coeffs, double x) {
    long double acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;)
        acc = acc * x + static_cast<long double>(coeffs[i]);
    return static_cast<double>(acc);
}

std::pair<double, double> refine_root(const AlgebraicNumber& r, double tol) {
    if (!(tol > 0)) throw std::invalid_argument("refine_root: tol must be positive");
    double lo = r.lo, hi = r.hi;
    double flo = poly_value(r.poly, lo);
    double fhi = poly_value(r.poly, hi);
    if (flo == 0) return {lo, lo};
    if (fhi == 0) return {hi, hi};
    if ((flo < 0) == (fhi < 0))
        throw std::invalid_argument("refine_root: no sign change across the interval");
    while (hi - lo > tol) {
        double mid = lo + (hi - lo) / 2;
        if (mid <= lo || mid >= hi) break;  // double precision exhausted
        double fm = poly_value(r.poly, mid);
        if (fm == 0) return {mid, mid};
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return {lo, hi};
}

double root_value(const AlgebraicNumber& r) {
    auto [lo, hi] = refine_root(r, 1e-12);
    return lo + (hi - lo) / 2;
}

AlgebraicNumber breakpoint(int k) {
    switch (k) {
        case 1: return {{-1, 3, 1, 1}, 0, 1};
        case 2: return {{1, 1, -9, 0, 0, 1}, 0, 1};
        case 3: return {{1, 0, -6, -1, 2}, 0, 1};
        case 4: return {{6, 5, -24, -15, 12}, 0, 1};
        case 5: return {{4, -3, -8, 4}, 0, 1};
        case 6: return {{-4, 1, 8}, 0, 1};
        case 7: return {{-1, -5, 0, 7}, 0, 1};
        case 8: return {{-3, 0, 1, 1}, 1, 2};
        default: throw std::invalid_argument("breakpoint: k must be in 1..8");
    }
}

double RationalFn::operator()(double a) const {
    return poly_value(num, a) / poly_value(den, a);
}

const std::array<MinBranch, 10>& min_branches() {
    static const std::array<MinBranch, 10> table = {{
        {1,
         {{0, -4, 1}, {-4, -1, 0, 1}},
         {{2, 4, -2}, {4, 1, 0, -1}},
         {{-4, 6, -2, 2, -1}, {-8, -2, 0, 2}}},
        {2,
         {{0, -3, 0, 1}, {-1, -8, 0, 0, 1}},
         {{-1, -5, 1, 1}, {-1, -8, 0, 0, 1}},
         {{-2, 1, -2, 1}, {-2, -16, 0, 0, 2}}},
        {3,
         {{1, 2, 0, -2}, {3, 8, 0, 0, -1}},
         {{-2, -6, 1, 2}, {-3, -8, 0, 0, 1}},
         {{-1, 0, 4, -12, 1, 0, 1}, {0, -6, -16, 0, 0, 2}}},
        {4,
         {{1, 1, -2}, {1, 6, 5, -4}},
         {{1, 4, 1, -2}, {1, 6, 5, -4}},
         {{-2, 1, 2, -9, 4}, {-2, -12, -10, 8}}},
        {5,
         {{1, 1, 0, 1}, {1, 6, 3, -4}},
         {{1, 4, 2}, {1, 6, 3, -4}},
         {{-2, 1, 0, -4, 4}, {-2, -12, -6, 8}}},
        {6,
         {{1, -1, -3}, {1, -4, -4, 4}},
         {{1, -2, -4}, {1, -4, -4, 4}},
         {{2, -5, -4, 8}, {2, -8, -8, 8}}},
        {7,
         {{1, 2}, {1, 7}},
         {{1, 6, 8}, {1, 8, 7}},
         {{2, 3, -2}, {2, 16, 14}}},
        {8,
         {{1, 2, 1}, {0, 4, 7}},
         {{1, 5, 4}, {0, 4, 7}},
         {{-1, -2, 6, 6, -7}, {0, 0, 8, 14}}},
        {9,
         {{1, 2, 1}, {3, 2, 3, 2, 1}},
         {{2, 4, 3, 1}, {3, 2, 3, 2, 1}},
         {{4, -2, -1, 0, 1}, {0, 6, 4, 6, 4, 2}}},
        {10,
         {{1, 1}, {3, 2, 1}},
         {{2, 2, 1}, {3, 2, 1}},
         {{1}, {0, 6, 4, 2}}},
    }};
    return table;
}

namespace {

// Refined intervals of the nine branch endpoints in order: the first seven
// breakpoints, then a = 1, then the eighth breakpoint.
const std::array<std::pair<double, double>, 9>& branch_ends() {
    static const std::array<std::pair<double, double>, 9> ends = [] {
        std::array<std::pair<double, double>, 9> out{};
        for (int k = 1; k <= 7; ++k)
            out[static_cast<std::size_t>(k - 1)] = refine_root(breakpoint(k), 1e-12);
        out[7] = {1.0, 1.0};
        out[8] = refine_root(breakpoint(8), 1e-12);
        return out;
    }();
    return ends;
}

struct BranchChoice {
    int left;        // 0-based row governing a (left convention)
    bool straddles;  // a lies inside an endpoint's refined interval
};

BranchChoice choose_branch(double a) {
    if (!(a > 0) || !std::isfinite(a))
        throw DomainError("min branch: a must be positive and finite");
    const auto& ends = branch_ends();
    const auto& rows = min_branches();
    for (int k = 0; k < 9; ++k) {
        auto [lo, hi] = ends[static_cast<std::size_t>(k)];
        if (a <= lo) return {k, false};
        if (a < hi) {
            // Inside the unresolved sliver both neighbours must agree on m.
            double left = rows[static_cast<std::size_t>(k)].m(a);
            double right = rows[static_cast<std::size_t>(k) + 1].m(a);
            if (std::abs(left - right) > 1e-9)
                throw std::logic_error("min branch: neighbours disagree inside an endpoint interval");
            return {k, true};
        }
    }
    return {9, false};
}

}  // namespace

int branch_index(double a) { return choose_branch(a).left + 1; }

double min_area_value(double a) {
    return min_branches()[static_cast<std::size_t>(choose_branch(a).left)].m(a);
}

MinLocation min_area_location(double a) {
    BranchChoice choice = choose_branch(a);
    const auto& rows = min_branches();
    MinLocation out;
    out.branch = choice.left + 1;
    out.s0 = rows[static_cast<std::size_t>(choice.left)].s0(a);
    out.t0 = rows[static_cast<std::size_t>(choice.left)].t0(a);
    // The minimizer location is continuous at every endpoint except the
    // fourth breakpoint, where it jumps; report both sides there.
    if (choice.straddles && choice.left == 3) {
        out.two_sided = true;
        out.s0_right = rows[static_cast<std::size_t>(choice.left) + 1].s0(a);
        out.t0_right = rows[static_cast<std::size_t>(choice.left) + 1].t0(a);
    }
    return out;
}

}  // namespace schur
