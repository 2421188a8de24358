// Acceptance checklist: twelve end-to-end checks covering the exhaustive
// search, the exact minimum formulas, the block searches, the continuous
// area function, its algebraic minimum, and the discrete-to-continuous
// limit. Each check prints exactly one [PASS]/[FAIL] line; the process
// exits nonzero if any check fails. All tolerances and random seeds are
// pinned here.
//
// Two checks encode expected values that the computation refutes; they are
// kept as stated and fail honestly:
//   - check 7 requires the conjectured a = 1/2 minimum for every n in
//     12..20, but the true exhaustive minimum at n = 19 is 60, one below
//     the conjectured 61 (witness RRRBBRBBBBBRRRRRRBB);
//   - check 11 pins the lattice-form zero set as {(0,0),(-1,0),(-1,-1)},
//     but the form's value at (-1,-1) is 2 and its true zero set on the box
//     is {(0,0),(0,1),(-1,0)}.

#include "schur/algebraic.hpp"
#include "schur/blocks.hpp"
#include "schur/counting.hpp"
#include "schur/errors.hpp"
#include "schur/geometry.hpp"
#include "schur/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace schur;

namespace {

constexpr double kAreaAgreementTol = 1e-9;   // closed vs. clipped area
constexpr double kMinValueTol = 1e-6;        // numeric vs. closed minimum
constexpr double kMinLocationTol = 1e-4;     // numeric vs. closed minimizer
constexpr double kBreakpointExclusion = 1e-3;  // around the 4th breakpoint
constexpr double kContinuityTol = 1e-9;      // m across branch ends
constexpr double kJumpThreshold = 0.05;      // s0 across the 4th breakpoint
constexpr double kGradientTol = 1e-5;        // closed vs. finite differences
constexpr double kThresholdValue = 1.8892;   // admissibility bisection root
constexpr double kThresholdTol = 1e-4;
constexpr double kLimitRateConstant = 5.0;   // |count/n^2 - A| <= 5/n
constexpr double kBudgetSeconds1 = 120, kBudgetSeconds4 = 600, kBudgetSeconds7 = 60;

int failures = 0;

// Runs one check, prints its line immediately, accumulates the exit status.
void criterion(int index, const std::string& label,
               const std::function<bool(std::string&)>& body) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!ok) ++failures;
    std::printf("[%s] criterion %2d (%6.2fs): %s%s%s\n", ok ? "PASS" : "FAIL", index, secs,
                label.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
}

bool matches_six_digits(double value, const std::string& printed) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", value);
    if (printed == buf) return true;
    std::snprintf(buf, sizeof buf, "%.6f", std::floor(value * 1e6) / 1e6);
    return printed == buf;
}

// 0 < s < t < 1 away from the edges, uniform.
std::pair<double, double> random_fractions(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uni(1e-3, 1.0 - 1e-3);
    double u = uni(rng), v = uni(rng);
    if (u > v) std::swap(u, v);
    return {u, v};
}

}  // namespace

int main() {
    criterion(1, "exhaustive minimum equals the a=1 formula for n <= 22", [](std::string& d) {
        auto start = std::chrono::steady_clock::now();
        for (long long n = 1; n <= 22; ++n) {
            long long brute = brute_force_min(static_cast<int>(n), TripleRule(1, 1)).minimum;
            long long formula = (n * n - 4 * n + 6) / 11;
            if (brute != formula) {
                d = "n=" + std::to_string(n) + ": " + std::to_string(brute) +
                    " != " + std::to_string(formula);
                return false;
            }
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > kBudgetSeconds1) {
            d = "exceeded the " + std::to_string(kBudgetSeconds1) + "s budget";
            return false;
        }
        return true;
    });

    criterion(2, "a=1 formula reproduces the 25 stored reference terms", [](std::string& d) {
        const ReferenceSequence& seq = a321195_prefix();
        if (seq.terms.size() != 25) {
            d = "stored prefix has " + std::to_string(seq.terms.size()) + " terms";
            return false;
        }
        for (long long n = 1; n <= 25; ++n)
            if (exact_min_formula(n, FormulaId::A1) != seq.terms[static_cast<std::size_t>(n - 1)]) {
                d = "n=" + std::to_string(n);
                return false;
            }
        return true;
    });

    criterion(3, "closed block count at (33,12,30) is 87 both ways", [](std::string& d) {
        long long closed = closed_block_count_a1(33, 12, 30);
        long long generic = mgst_block_count(ThreeBlockColoring(33, 12, 30), TripleRule(1, 1));
        if (closed != 87 || generic != 87) {
            d = "closed=" + std::to_string(closed) + " generic=" + std::to_string(generic);
            return false;
        }
        return true;
    });

    criterion(4, "a=2 formula equals the full three-block search for n <= 600",
              [](std::string& d) {
        auto start = std::chrono::steady_clock::now();
        for (int n = 1; n <= 600; ++n) {
            long long formula = exact_min_formula(n, FormulaId::A2);
            long long search = block_search_min(n, TripleRule(2, 1), 3).minimum;
            if (formula != search) {
                d = "n=" + std::to_string(n) + ": " + std::to_string(formula) +
                    " != " + std::to_string(search);
                return false;
            }
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > kBudgetSeconds4) {
            d = "exceeded the " + std::to_string(kBudgetSeconds4) + "s budget";
            return false;
        }
        return true;
    });

    criterion(5, "a=3 and a=4 formulas equal the windowed search to n=500, full to n=300",
              [](std::string& d) {
        for (TripleRule rule : {TripleRule(3, 1), TripleRule(4, 1)}) {
            for (int n = 1; n <= 500; ++n) {
                long long formula = exact_min_formula(n, rule);
                long long windowed =
                    block_search_min(n, rule, 3, SearchMode::Windowed, 25).minimum;
                if (formula != windowed) {
                    d = "a=" + rule.str() + " n=" + std::to_string(n) + ": formula " +
                        std::to_string(formula) + " != windowed " + std::to_string(windowed);
                    return false;
                }
                if (n <= 300 && block_search_min(n, rule, 3).minimum != windowed) {
                    d = "a=" + rule.str() + " n=" + std::to_string(n) + ": full != windowed";
                    return false;
                }
            }
        }
        return true;
    });

    criterion(6, "a=1/2 formula equals the full search to n=400; RBRB beats blocks at n=4",
              [](std::string& d) {
        for (int n = 1; n <= 400; ++n) {
            long long formula = exact_min_formula(n, FormulaId::Half);
            long long search = block_search_min(n, TripleRule(1, 2), 3).minimum;
            if (formula != search) {
                d = "n=" + std::to_string(n) + ": " + std::to_string(formula) +
                    " != " + std::to_string(search);
                return false;
            }
        }
        long long brute = brute_force_min(4, TripleRule(1, 2)).minimum;
        long long blocks = exact_min_formula(4, FormulaId::Half);
        if (brute != 3 || blocks != 4) {
            d = "n=4: exhaustive " + std::to_string(brute) + ", three-block " +
                std::to_string(blocks);
            return false;
        }
        return true;
    });

    criterion(7, "exhaustive a=1/2 minima match the conjectured values for 12 <= n <= 20",
              [](std::string& d) {
        auto start = std::chrono::steady_clock::now();
        MinimizationResult res11 = brute_force_min(11, TripleRule(1, 2), 4096);
        bool witness_found = false;
        for (const Coloring& w : res11.witnesses)
            if (w.word() == "RBRBBRRBRBB") witness_found = true;
        if (res11.minimum != 20 || !witness_found) {
            d = "n=11: minimum " + std::to_string(res11.minimum) +
                (witness_found ? "" : ", canonical witness missing");
            return false;
        }
        std::string mismatches;
        for (long long n = 12; n <= 20; ++n) {
            long long brute = brute_force_min(static_cast<int>(n), TripleRule(1, 2)).minimum;
            long long conjectured = (n * n + 5) / 6;
            if (brute != conjectured)
                mismatches += (mismatches.empty() ? "" : "; ") + ("n=" + std::to_string(n)) +
                              ": exhaustive " + std::to_string(brute) + " != conjectured " +
                              std::to_string(conjectured);
        }
        if (!mismatches.empty()) {
            d = mismatches;
            return false;
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > kBudgetSeconds7) {
            d = "exceeded the " + std::to_string(kBudgetSeconds7) + "s budget";
            return false;
        }
        return true;
    });

    criterion(8, "closed area and numeric minimum track the geometry (10000 + 200 samples)",
              [](std::string& d) {
        std::mt19937_64 rng(8);
        std::uniform_real_distribution<double> ua(0.02, 3.0);
        int classified = 0;
        for (int attempt = 0; attempt < 200000 && classified < 10000; ++attempt) {
            auto [s, t] = random_fractions(rng);
            double a = ua(rng);
            double closed;
            try {
                closed = area_closed_form(s, t, a);
            } catch (const UnlistedRegion&) {
                continue;
            }
            ++classified;
            double geometric = area_geometric(s, t, a);
            if (std::abs(closed - geometric) > kAreaAgreementTol) {
                std::ostringstream os;
                os << "area mismatch " << std::abs(closed - geometric) << " at (" << s << ", "
                   << t << ", " << a << ")";
                d = os.str();
                return false;
            }
        }
        if (classified < 10000) {
            d = "only " + std::to_string(classified) + " classified points";
            return false;
        }
        double a4 = root_value(breakpoint(4));
        for (int k = 0; k < 200; ++k) {
            double a = ua(rng);
            AreaMinimum numeric = minimize_area(a);
            double closed = min_area_value(a);
            if (std::abs(numeric.area - closed) > kMinValueTol) {
                std::ostringstream os;
                os << "m mismatch " << std::abs(numeric.area - closed) << " at a=" << a;
                d = os.str();
                return false;
            }
            if (std::abs(a - a4) <= kBreakpointExclusion) continue;
            MinLocation loc = min_area_location(a);
            if (std::abs(numeric.s - loc.s0) > kMinLocationTol ||
                std::abs(numeric.t - loc.t0) > kMinLocationTol) {
                std::ostringstream os;
                os << "location mismatch at a=" << a << ": numeric (" << numeric.s << ", "
                   << numeric.t << ") vs (" << loc.s0 << ", " << loc.t0 << ")";
                d = os.str();
                return false;
            }
        }
        return true;
    });

    criterion(9, "branch endpoints match their printed digits; m continuous; s0 jumps",
              [](std::string& d) {
        const std::string printed[8] = {"0.295597", "0.395065", "0.405669", "0.553409",
                                        "0.622179", "0.647363", "0.931478", "1.174559"};
        for (int k = 1; k <= 8; ++k)
            if (!matches_six_digits(root_value(breakpoint(k)), printed[k - 1])) {
                d = "endpoint " + std::to_string(k) + " prints as neither truncation nor "
                    "rounding of " + printed[k - 1];
                return false;
            }
        const auto& branches = min_branches();
        double ends[9];
        for (int k = 1; k <= 7; ++k) ends[k - 1] = root_value(breakpoint(k));
        ends[7] = 1.0;
        ends[8] = root_value(breakpoint(8));
        for (int k = 0; k < 9; ++k)
            if (std::abs(branches[k].m(ends[k]) - branches[k + 1].m(ends[k])) > kContinuityTol) {
                d = "m discontinuous across endpoint " + std::to_string(k + 1);
                return false;
            }
        double a4 = ends[3];
        if (std::abs(branches[3].s0(a4) - branches[4].s0(a4)) <= kJumpThreshold) {
            d = "s0 jump below threshold";
            return false;
        }
        return true;
    });

    criterion(10, "closed gradients match finite differences; admissibility flips at 1.8892",
              [](std::string& d) {
        std::mt19937_64 rng(10);
        std::uniform_real_distribution<double> ua(0.02, 3.0);
        for (int region : {1, 2, 7, 17}) {
            int accepted = 0;
            for (long long attempt = 0; attempt < 3000000 && accepted < 100; ++attempt) {
                auto [s, t] = random_fractions(rng);
                double a = ua(rng);
                try {
                    if (classify_region(s, t, a) != region) continue;
                    auto [gs, gt] = gradient_area(s, t, a, GradientMethod::Closed);
                    auto [ns, nt] = gradient_area(s, t, a, GradientMethod::Numeric);
                    if (std::abs(gs - ns) > kGradientTol || std::abs(gt - nt) > kGradientTol) {
                        std::ostringstream os;
                        os << "gradient mismatch on region " << region << " at (" << s << ", "
                           << t << ", " << a << ")";
                        d = os.str();
                        return false;
                    }
                    ++accepted;
                } catch (const UnlistedRegion&) {
                } catch (const OnBoundary&) {
                }
            }
            if (accepted < 100) {
                d = "region " + std::to_string(region) + ": only " + std::to_string(accepted) +
                    " interior points";
                return false;
            }
        }
        // The second catalogue piece has an interior stationary point at
        // s = a/(4a^2+2a-1), t = a(2a+1)/(4a^2+2a-1); it satisfies the
        // piece's own conditions only above a threshold. Bisect on that.
        auto admissible = [](double a) {
            double den = 4 * a * a + 2 * a - 1;
            double s = a / den, t = a * (2 * a + 1) / den;
            return a * s + t <= 1 && t >= a * s && a * t > 1 && 0 < s && s < t && t < 1;
        };
        if (admissible(1.5) || !admissible(2.0)) {
            d = "bisection bracket invalid";
            return false;
        }
        double lo = 1.5, hi = 2.0;
        for (int iter = 0; iter < 80; ++iter) {
            double mid = lo + (hi - lo) / 2;
            (admissible(mid) ? hi : lo) = mid;
        }
        if (std::abs(hi - kThresholdValue) > kThresholdTol) {
            std::ostringstream os;
            os << "threshold " << hi << " differs from " << kThresholdValue;
            d = os.str();
            return false;
        }
        double den = 4 * (hi + 0.01) * (hi + 0.01) + 2 * (hi + 0.01) - 1;
        if (classify_region((hi + 0.01) / den, (hi + 0.01) * (2 * (hi + 0.01) + 1) / den,
                            hi + 0.01) != 2) {
            d = "stationary point not in the second region just above the threshold";
            return false;
        }
        return true;
    });

    criterion(11, "lattice form nonnegative on [-100,100]^2 with the pinned zero set",
              [](std::string& d) {
        std::set<std::pair<long long, long long>> zeros;
        for (long long i = -100; i <= 100; ++i)
            for (long long j = -100; j <= 100; ++j) {
                long long v = minimizer_lattice_form(i, j);
                if (v < 0) {
                    d = "negative at (" + std::to_string(i) + ", " + std::to_string(j) + ")";
                    return false;
                }
                if (v == 0) zeros.insert({i, j});
            }
        const std::set<std::pair<long long, long long>> pinned = {{0, 0}, {-1, 0}, {-1, -1}};
        if (zeros != pinned) {
            std::ostringstream os;
            os << "zero set is {";
            bool first = true;
            for (auto [i, j] : zeros) {
                os << (first ? "" : ", ") << "(" << i << "," << j << ")";
                first = false;
            }
            os << "}, not the pinned {(0,0), (-1,0), (-1,-1)}";
            d = os.str();
            return false;
        }
        return true;
    });

    criterion(12, "block counts converge to the clipped area within 5/n", [](std::string& d) {
        std::mt19937_64 rng(12);
        for (TripleRule rule : {TripleRule(1, 1), TripleRule(2, 1), TripleRule(1, 2)}) {
            for (int k = 0; k < 50; ++k) {
                auto [sf, tf] = random_fractions(rng);
                for (int n : {200, 400, 800}) {
                    int s = static_cast<int>(std::ceil(sf * n));
                    int t = static_cast<int>(std::ceil(tf * n));
                    long long count = mgst_block_count(ThreeBlockColoring(n, s, t), rule);
                    double density = static_cast<double>(count) / (static_cast<double>(n) * n);
                    double area = area_geometric(sf, tf, rule.value());
                    if (std::abs(density - area) > kLimitRateConstant / n) {
                        std::ostringstream os;
                        os << "a=" << rule.str() << " n=" << n << " (s,t)=(" << sf << ", " << tf
                           << "): |" << density << " - " << area << "| > 5/n";
                        d = os.str();
                        return false;
                    }
                }
            }
        }
        return true;
    });

    std::printf("acceptance: %d of 12 criteria passed, %d failed\n", 12 - failures, failures);
    return failures == 0 ? 0 : 1;
}
