// Piecewise-rational minimum m(a): root refinement for the branch
// endpoints, printed-digit fidelity, branch selection, continuity, and the
// minimizer jump at the fourth breakpoint.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schur/algebraic.hpp"

#include <cmath>
#include <string>

using namespace schur;

namespace {

// Six-decimal rendering matches either the truncated or the rounded digits.
bool matches_six_digits(double value, const std::string& printed) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", value);  // rounded
    if (printed == buf) return true;
    double trunc = std::floor(value * 1e6) / 1e6;
    std::snprintf(buf, sizeof buf, "%.6f", trunc);
    return printed == buf;
}

}  // namespace

TEST_CASE("polynomial evaluation") {
    CHECK(poly_value({-1, 3, 1, 1}, 0.0) == doctest::Approx(-1.0));
    CHECK(poly_value({-1, 3, 1, 1}, 1.0) == doctest::Approx(4.0));
    CHECK(poly_value({0, 0, 1}, 3.0) == doctest::Approx(9.0));
    CHECK(poly_value({}, 2.0) == doctest::Approx(0.0));
}

TEST_CASE("root refinement narrows and brackets") {
    // Linear with an exactly representable root: bisection lands on it.
    AlgebraicNumber lin{{-2, 1}, 1.0, 3.0};
    auto [llo, lhi] = refine_root(lin, 1e-15);
    CHECK(llo == lhi);
    CHECK(llo == doctest::Approx(2.0));

    AlgebraicNumber sqrt2{{-2, 0, 1}, 1.0, 2.0};
    auto [lo, hi] = refine_root(sqrt2, 1e-12);
    CHECK(hi - lo <= 1e-12);
    CHECK(lo <= std::sqrt(2.0));
    CHECK(std::sqrt(2.0) <= hi);
    CHECK(root_value(sqrt2) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("breakpoints reproduce the printed six-decimal values") {
    const std::string printed[8] = {"0.295597", "0.395065", "0.405669", "0.553409",
                                    "0.622179", "0.647363", "0.931478", "1.174559"};
    for (int k = 1; k <= 8; ++k) {
        double v = root_value(breakpoint(k));
        CAPTURE(k);
        CHECK(matches_six_digits(v, printed[k - 1]));
    }
}

TEST_CASE("breakpoints are increasing and straddle 1 correctly") {
    double prev = 0;
    for (int k = 1; k <= 8; ++k) {
        double v = root_value(breakpoint(k));
        CHECK(v > prev);
        prev = v;
    }
    CHECK(root_value(breakpoint(7)) < 1.0);
    CHECK(root_value(breakpoint(8)) > 1.0);

    // The sixth breakpoint is (sqrt(129) - 1) / 16 exactly.
    CHECK(std::abs(root_value(breakpoint(6)) - (std::sqrt(129.0) - 1) / 16) <= 1e-11);
}

TEST_CASE("closed minimum values at rational coefficients") {
    CHECK(min_area_value(1.0) == doctest::Approx(1.0 / 11).epsilon(1e-12));
    CHECK(min_area_value(2.0) == doctest::Approx(1.0 / 44).epsilon(1e-12));
    CHECK(min_area_value(3.0) == doctest::Approx(1.0 / 108).epsilon(1e-12));
    CHECK(min_area_value(0.5) == doctest::Approx(15.0 / 76).epsilon(1e-12));
}

TEST_CASE("branch selection walks the endpoints") {
    CHECK(branch_index(0.1) == 1);
    CHECK(branch_index(0.3) == 2);
    CHECK(branch_index(0.4) == 3);
    CHECK(branch_index(0.5) == 4);
    CHECK(branch_index(0.6) == 5);
    CHECK(branch_index(0.63) == 6);
    CHECK(branch_index(0.7) == 7);
    CHECK(branch_index(1.0) == 8);  // left branch at the exact endpoint
    CHECK(branch_index(1.05) == 9);
    CHECK(branch_index(2.0) == 10);
    CHECK(branch_index(50.0) == 10);
}

TEST_CASE("m is continuous across every breakpoint") {
    const auto& branches = min_branches();
    double ends[9];
    for (int k = 1; k <= 7; ++k) ends[k - 1] = root_value(breakpoint(k));
    ends[7] = 1.0;
    ends[8] = root_value(breakpoint(8));
    for (int k = 0; k < 9; ++k) {
        double left = branches[k].m(ends[k]);
        double right = branches[k + 1].m(ends[k]);
        CAPTURE(k);
        CHECK(std::abs(left - right) <= 1e-9);
    }
}

TEST_CASE("the minimizer jumps only at the fourth breakpoint") {
    const auto& branches = min_branches();
    double a4 = root_value(breakpoint(4));
    double s_left = branches[3].s0(a4), s_right = branches[4].s0(a4);
    CHECK(std::abs(s_left - s_right) > 0.05);
    CHECK(std::abs(s_left - 0.18186) <= 1e-3);
    CHECK(std::abs(s_right - 0.37773) <= 1e-3);
    CHECK(std::abs(branches[3].m(a4) - branches[4].m(a4)) <= 1e-9);

    // Inside the refined isolating interval both one-sided locations are
    // reported.
    MinLocation loc = min_area_location(a4);
    CHECK(loc.two_sided);
    CHECK(std::abs(loc.s0 - s_left) <= 1e-9);
    CHECK(std::abs(loc.s0_right - s_right) <= 1e-9);

    // Away from the fourth breakpoint the location is single valued.
    CHECK_FALSE(min_area_location(0.5).two_sided);
    CHECK_FALSE(min_area_location(1.0).two_sided);
    double s0_half = min_area_location(0.5).s0;
    CHECK(s0_half == doctest::Approx(4.0 / 19).epsilon(1e-12));
    CHECK(min_area_location(0.5).t0 == doctest::Approx(12.0 / 19).epsilon(1e-12));
    CHECK(min_area_location(1.0).s0 == doctest::Approx(4.0 / 11).epsilon(1e-12));
    CHECK(min_area_location(1.0).t0 == doctest::Approx(10.0 / 11).epsilon(1e-12));
    CHECK(min_area_location(2.0).s0 == doctest::Approx(3.0 / 11).epsilon(1e-12));
    CHECK(min_area_location(2.0).t0 == doctest::Approx(10.0 / 11).epsilon(1e-12));
}

TEST_CASE("branch table spot values") {
    const auto& branches = min_branches();
    REQUIRE(branches.size() == 10);
    for (int k = 0; k < 10; ++k) CHECK(branches[k].index == k + 1);
    // Ninth branch at a = 1 gives the same values as the eighth: continuity
    // of m and of the location away from the fourth breakpoint.
    CHECK(branches[8].m(1.0) == doctest::Approx(1.0 / 11).epsilon(1e-12));
    CHECK(branches[8].s0(1.0) == doctest::Approx(4.0 / 11).epsilon(1e-12));
    CHECK(branches[9].m(2.0) == doctest::Approx(1.0 / 44).epsilon(1e-12));
}
