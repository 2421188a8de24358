#include "schur/geometry.hpp"

#include "schur/algebraic.hpp"
#include "schur/errors.hpp"
#include "schur/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace schur {

namespace {

constexpr double kVertexMerge = 1e-12;

void check_domain(double s, double t, double a) {
    if (!(a > 0) || !std::isfinite(a))
        throw DomainError("area: a must be positive and finite");
    if (!(0.0 <= s && s <= t && t <= 1.0))
        throw DomainError("area: need 0 <= s <= t <= 1");
}

}  // namespace

ConvexPolygon::ConvexPolygon(std::vector<Vec2> verts) : verts_(std::move(verts)) {}

ConvexPolygon ConvexPolygon::unit_square() {
    return ConvexPolygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

double ConvexPolygon::area() const {
    if (empty()) return 0.0;
    double twice = 0.0;
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        const Vec2& p = verts_[i];
        const Vec2& q = verts_[(i + 1) % verts_.size()];
        twice += p.x * q.y - q.x * p.y;
    }
    return std::abs(twice) / 2.0;
}

ConvexPolygon ConvexPolygon::clipped(double nx, double ny, double c) const {
    if (verts_.empty()) return {};
    std::vector<Vec2> out;
    out.reserve(verts_.size() + 1);
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        const Vec2& p = verts_[i];
        const Vec2& q = verts_[(i + 1) % verts_.size()];
        double dp = nx * p.x + ny * p.y - c;
        double dq = nx * q.x + ny * q.y - c;
        if (dp <= 0) out.push_back(p);
        if ((dp < 0 && dq > 0) || (dp > 0 && dq < 0)) {
            double w = dp / (dp - dq);
            out.push_back({p.x + w * (q.x - p.x), p.y + w * (q.y - p.y)});
        }
    }
    // drop duplicate vertices the clip can introduce
    std::vector<Vec2> merged;
    merged.reserve(out.size());
    for (const Vec2& v : out) {
        if (!merged.empty() && std::abs(v.x - merged.back().x) <= kVertexMerge &&
            std::abs(v.y - merged.back().y) <= kVertexMerge)
            continue;
        merged.push_back(v);
    }
    while (merged.size() > 1 && std::abs(merged.front().x - merged.back().x) <= kVertexMerge &&
           std::abs(merged.front().y - merged.back().y) <= kVertexMerge)
        merged.pop_back();
    return ConvexPolygon(std::move(merged));
}

std::map<TripleClass, ConvexPolygon> region_polygons(double s, double t, double a) {
    check_domain(s, t, a);
    auto lo = [&](int block) { return block == 1 ? 0.0 : block == 2 ? s : t; };
    auto hi = [&](int block) { return block == 1 ? s : block == 2 ? t : 1.0; };
    static constexpr struct {
        TripleClass cls;
        int bx, by, bz;
    } kClasses[] = {
        {TripleClass::c111, 1, 1, 1}, {TripleClass::c222, 2, 2, 2},
        {TripleClass::c113, 1, 1, 3}, {TripleClass::c131, 1, 3, 1},
        {TripleClass::c133, 1, 3, 3}, {TripleClass::c313, 3, 1, 3},
        {TripleClass::c333, 3, 3, 3},
    };
    std::map<TripleClass, ConvexPolygon> out;
    for (const auto& k : kClasses) {
        ConvexPolygon poly = ConvexPolygon::unit_square()
                                 .clipped(1, 0, hi(k.bx))
                                 .clipped(-1, 0, -lo(k.bx))
                                 .clipped(0, 1, hi(k.by))
                                 .clipped(0, -1, -lo(k.by))
                                 .clipped(1, a, hi(k.bz))
                                 .clipped(-1, -a, -lo(k.bz));
        out.emplace(k.cls, std::move(poly));
    }
    return out;
}

double area_geometric(double s, double t, double a) {
    double total = 0.0;
    for (const auto& [cls, poly] : region_polygons(s, t, a)) total += poly.area();
    return total;
}

std::array<double, 16> condition_values(double s, double t, double a) {
    check_domain(s, t, a);
    return {
        1 - a * s,          // 1
        1 - a * s - s,      // 2
        1 - a * s - t,      // 3
        t - a * s,          // 4
        t - a * s - s,      // 5
        1 - a * t,          // 6
        1 - a * t - s,      // 7
        1 - a * t - t,      // 8
        1 - a,              // 9
        1 - a - s,          // 10
        s - a,              // 11
        1 - a - t,          // 12
        t - a,              // 13
        t - a - s,          // 14
        s - a * t,          // 15
        t - a * t - s,      // 16
    };
}

ConditionVector ConditionVector::at(double s, double t, double a) {
    ConditionVector v;
    auto f = condition_values(s, t, a);
    for (int i = 0; i < 16; ++i) v.holds[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(i)] >= 0;
    return v;
}

const std::vector<AreaRegion>& region_table() {
    static const std::vector<AreaRegion> table = {
        {1,
         {{1, false}},
         {{1, 0, 2, 0}, {-2, 0, 1, 1}, {2, 0, 1, 0}, {1, 0, 0, 2}, {-2, 0, 0, 1}, {1, 0, 0, 0}}},
        {2,
         {{3, true}, {4, true}, {6, false}},
         {{2, 1, 2, 0}, {2, 0, 2, 0}, {2, 1, 1, 0}, {-4, 1, 1, 1}, {-2, 0, 1, 1}, {1, 0, 0, 2}}},
        {3,
         {{3, true}, {4, false}, {6, false}},
         {{-1, 2, 2, 0}, {2, 1, 2, 0}, {2, 0, 2, 0}, {2, 1, 1, 0}, {-2, 1, 1, 1}, {-2, 0, 1, 1}}},
        {4,
         {{2, false}, {4, true}, {6, false}},
         {{1, 0, 2, 0},
          {2, 1, 1, 0},
          {-2, 1, 1, 1},
          {-2, 0, 1, 1},
          {2, 0, 1, 0},
          {2, 0, 0, 2},
          {-2, 0, 0, 1}}},
        {5,
         {{2, false}, {4, false}, {6, true}},
         {{-1, 2, 2, 0},
          {1, 0, 2, 0},
          {2, 1, 1, 0},
          {-2, 0, 1, 1},
          {2, 0, 1, 0},
          {1, 2, 0, 2},
          {1, 0, 0, 2},
          {-2, 1, 0, 1},
          {-2, 0, 0, 1},
          {1, 0, 0, 0}}},
        {6,
         {{1, true}, {2, false}, {4, false}, {6, false}},
         {{-1, 2, 2, 0},
          {1, 0, 2, 0},
          {2, 1, 1, 0},
          {-2, 0, 1, 1},
          {2, 0, 1, 0},
          {1, 0, 0, 2},
          {-2, 0, 0, 1}}},
        {7,
         {{2, true}, {3, false}, {4, true}, {6, false}},
         {{1, 2, 2, 0},
          {2, 1, 2, 0},
          {2, 0, 2, 0},
          {-2, 1, 1, 1},
          {-2, 0, 1, 1},
          {2, 0, 0, 2},
          {-2, 0, 0, 1},
          {1, 0, 0, 0}}},
        {8,
         {{2, true}, {3, false}, {4, false}, {6, true}},
         {{2, 1, 2, 0},
          {2, 0, 2, 0},
          {-2, 0, 1, 1},
          {1, 2, 0, 2},
          {1, 0, 0, 2},
          {-2, 1, 0, 1},
          {-2, 0, 0, 1},
          {2, 0, 0, 0}}},
        {9,
         {{2, true}, {3, false}, {4, false}, {6, false}},
         {{2, 1, 2, 0}, {2, 0, 2, 0}, {-2, 0, 1, 1}, {1, 0, 0, 2}, {-2, 0, 0, 1}, {1, 0, 0, 0}}},
        {10,
         {{3, true}, {4, true}, {6, true}, {7, false}},
         {{2, 1, 2, 0},
          {2, 0, 2, 0},
          {2, 1, 1, 0},
          {-4, 1, 1, 1},
          {-2, 0, 1, 1},
          {1, 2, 0, 2},
          {1, 0, 0, 2},
          {-2, 1, 0, 1},
          {1, 0, 0, 0}}},
        {11,
         {{3, true}, {4, false}, {6, true}, {7, false}},
         {{-1, 2, 2, 0},
          {2, 1, 2, 0},
          {2, 0, 2, 0},
          {2, 1, 1, 0},
          {-2, 1, 1, 1},
          {-2, 0, 1, 1},
          {1, 2, 0, 2},
          {-2, 1, 0, 1},
          {1, 0, 0, 0}}},
        {12,
         {{4, false}, {8, true}},
         {{-1, 2, 2, 0},
          {2, 1, 2, 0},
          {1, 0, 2, 0},
          {2, 1, 1, 0},
          {-4, 1, 1, 1},
          {-2, 0, 1, 1},
          {2, 0, 1, 0},
          {1, 2, 0, 2},
          {2, 1, 0, 2},
          {1, 0, 0, 2},
          {-2, 1, 0, 1},
          {-2, 0, 0, 1},
          {1, 0, 0, 0}}},
        {13,
         {{4, false}, {7, true}, {8, false}},
         {{-1, 2, 2, 0},
          {2, 1, 2, 0},
          {1, 0, 2, 0},
          {2, 1, 1, 0},
          {-4, 1, 1, 1},
          {-2, 0, 1, 1},
          {2, 0, 1, 0}}},
        {14,
         {{4, true}, {8, true}, {9, false}},
         {{1, 2, 0, 2},
          {2, 1, 0, 2},
          {2, 0, 0, 2},
          {-6, 1, 1, 1},
          {-2, 1, 0, 1},
          {-2, 0, 1, 1},
          {-2, 0, 0, 1},
          {2, 1, 2, 0},
          {1, 0, 2, 0},
          {2, 1, 1, 0},
          {2, 0, 1, 0},
          {1, 0, 0, 0}}},
        {15,
         {{4, true}, {7, true}, {8, false}, {9, false}},
         {{2, 1, 2, 0},
          {1, 0, 2, 0},
          {2, 1, 1, 0},
          {-6, 1, 1, 1},
          {-2, 0, 1, 1},
          {2, 0, 1, 0},
          {1, 0, 0, 2}}},
        {16,
         {{2, false}, {4, true}, {6, true}, {9, false}},
         {{1, 0, 2, 0},
          {2, 1, 1, 0},
          {-2, 1, 1, 1},
          {-2, 0, 1, 1},
          {2, 0, 1, 0},
          {1, 2, 0, 2},
          {2, 0, 0, 2},
          {-2, 1, 0, 1},
          {-2, 0, 0, 1},
          {1, 0, 0, 0}}},
        {17,
         {{2, true}, {3, false}, {4, true}, {6, true}, {9, false}},
         {{1, 2, 2, 0},
          {2, 1, 2, 0},
          {2, 0, 2, 0},
          {-2, 1, 1, 1},
          {-2, 0, 1, 1},
          {1, 2, 0, 2},
          {2, 0, 0, 2},
          {-2, 1, 0, 1},
          {-2, 0, 0, 1},
          {2, 0, 0, 0}}},
    };
    return table;
}

namespace {

// Points within eps of a boundary match the closure of each side, so exact
// boundary evaluations (a = 1 for instance) still classify.
constexpr double kClassifyEps = 1e-11;

bool region_matches(const AreaRegion& region, const std::array<double, 16>& f) {
    for (auto [idx, req] : region.conditions) {
        double v = f[static_cast<std::size_t>(idx - 1)];
        if (req ? v < -kClassifyEps : v > kClassifyEps) return false;
    }
    return true;
}

double power(double base, int exp) {
    double v = 1.0;
    while (exp-- > 0) v *= base;
    return v;
}

double evaluate_terms(const std::vector<PolyTerm>& terms, double s, double t, double a) {
    double total = 0.0;
    for (const PolyTerm& term : terms)
        total += term.coef * power(a, term.da) * power(s, term.ds) * power(t, term.dt);
    return total;
}

}  // namespace

int classify_region(double s, double t, double a) {
    auto f = condition_values(s, t, a);
    int found = -1, second = -1;
    for (const AreaRegion& region : region_table()) {
        if (!region_matches(region, f)) continue;
        if (found < 0)
            found = region.index;
        else
            second = region.index;
    }
    if (found < 0)
        throw UnlistedRegion("classify_region: (" + std::to_string(s) + ", " +
                             std::to_string(t) + ", " + std::to_string(a) +
                             ") matches no catalogued region");
    if (second >= 0) {
        bool on_boundary = false;
        for (double v : f)
            if (std::abs(v) <= kClassifyEps) on_boundary = true;
        if (!on_boundary)
            throw AmbiguousRegion("classify_region: regions " + std::to_string(found) +
                                  " and " + std::to_string(second) +
                                  " both match strictly off-boundary");
    }
    return found;
}

double area_closed_form(double s, double t, double a) {
    const AreaRegion& region = region_table()[static_cast<std::size_t>(classify_region(s, t, a) - 1)];
    return evaluate_terms(region.numerator, s, t, a) / (2 * a);
}

std::pair<double, double> gradient_area(double s, double t, double a, GradientMethod method) {
    check_domain(s, t, a);
    if (method == GradientMethod::Closed) {
        const AreaRegion& region =
            region_table()[static_cast<std::size_t>(classify_region(s, t, a) - 1)];
        double gs = 0.0, gt = 0.0;
        for (const PolyTerm& term : region.numerator) {
            if (term.ds)
                gs += term.coef * term.ds * power(a, term.da) * power(s, term.ds - 1) *
                      power(t, term.dt);
            if (term.dt)
                gt += term.coef * term.dt * power(a, term.da) * power(s, term.ds) *
                      power(t, term.dt - 1);
        }
        return {gs / (2 * a), gt / (2 * a)};
    }

    const double h = 1e-6;
    // the stencil must stay inside the domain triangle
    if (s < h || t - s < h || 1 - t < h)
        throw OnBoundary("gradient_area: stencil leaves the domain");
    // and on a single polynomial piece; condition 9 has no (s,t) dependence
    auto f = condition_values(s, t, a);
    const double norm[16] = {a,
                             a + 1,
                             std::hypot(a, 1.0),
                             std::hypot(a, 1.0),
                             std::hypot(a + 1, 1.0),
                             a,
                             std::hypot(1.0, a),
                             a + 1,
                             0,
                             1,
                             1,
                             1,
                             1,
                             std::sqrt(2.0),
                             std::hypot(1.0, a),
                             std::hypot(1.0, 1.0 - a)};
    for (int i = 0; i < 16; ++i) {
        if (i == 8) continue;
        if (std::abs(f[static_cast<std::size_t>(i)]) <= h * norm[i])
            throw OnBoundary("gradient_area: within h of the boundary of condition " +
                             std::to_string(i + 1));
    }
    double gs = (area_geometric(s + h, t, a) - area_geometric(s - h, t, a)) / (2 * h);
    double gt = (area_geometric(s, t + h, a) - area_geometric(s, t - h, a)) / (2 * h);
    return {gs, gt};
}

AreaMinimum minimize_area(double a, int grid, int threads) {
    if (!(a > 0) || !std::isfinite(a)) throw DomainError("minimize_area: a must be positive");
    if (grid < 2) throw std::invalid_argument("minimize_area: grid must be >= 2");

    struct Row {
        double value = std::numeric_limits<double>::infinity();
        int j = -1;
    };
    std::vector<Row> rows(static_cast<std::size_t>(grid) + 1);
    parallel_for(0, grid + 1, threads, [&](int i) {
        Row& row = rows[static_cast<std::size_t>(i)];
        double s = static_cast<double>(i) / grid;
        for (int j = i; j <= grid; ++j) {
            double v = area_geometric(s, static_cast<double>(j) / grid, a);
            if (v < row.value) {
                row.value = v;
                row.j = j;
            }
        }
    });
    double bs = 0, bt = 0, bv = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= grid; ++i) {
        if (rows[static_cast<std::size_t>(i)].value < bv) {
            bv = rows[static_cast<std::size_t>(i)].value;
            bs = static_cast<double>(i) / grid;
            bt = static_cast<double>(rows[static_cast<std::size_t>(i)].j) / grid;
        }
    }

    // seed with the algebraic minimizer (both sides where the location jumps)
    MinLocation loc = min_area_location(a);
    auto try_point = [&](double s, double t) {
        s = std::clamp(s, 0.0, 1.0);
        t = std::clamp(t, 0.0, 1.0);
        if (s > t) return;
        double v = area_geometric(s, t, a);
        if (v < bv) {
            bv = v;
            bs = s;
            bt = t;
        }
    };
    try_point(loc.s0, loc.t0);
    if (loc.two_sided) try_point(loc.s0_right, loc.t0_right);

    // coordinate descent with step halving
    double step = 1.0 / grid;
    while (step >= 1e-9) {
        bool moved = false;
        const double moves[8][2] = {{bs - step, bt}, {bs + step, bt}, {bs, bt - step},
                                    {bs, bt + step}, {bs - step, bt - step},
                                    {bs + step, bt + step}, {bs - step, bt + step},
                                    {bs + step, bt - step}};
        for (const auto& mv : moves) {
            double s = std::clamp(mv[0], 0.0, 1.0);
            double t = std::clamp(mv[1], 0.0, 1.0);
            if (s > t) continue;
            double v = area_geometric(s, t, a);
            if (v < bv) {
                bv = v;
                bs = s;
                bt = t;
                moved = true;
            }
        }
        if (!moved) step /= 2;
    }
    return {bs, bt, bv};
}

}  // namespace schur
