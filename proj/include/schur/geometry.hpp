#pragma once
// The continuous area function A(s, t, a): in the n -> infinity limit of the
// three-block coloring with boundaries at sn and tn, the monochromatic pairs
// (x/n, y/n) fill a union of convex polygons in the unit square whose total
// area is A. Two independent evaluations are provided: exact polygon
// clipping, and a catalogue of 17 polynomial pieces selected by the sign
// pattern of 16 affine conditions.

#include "schur/blocks.hpp"

#include <array>
#include <map>
#include <utility>
#include <vector>

namespace schur {

struct BlockFractions {
    double s = 0, t = 0;  // 0 <= s <= t <= 1
};

struct Vec2 {
    double x = 0, y = 0;
};

class ConvexPolygon {
public:
    ConvexPolygon() = default;
    explicit ConvexPolygon(std::vector<Vec2> verts);

    static ConvexPolygon unit_square();

    const std::vector<Vec2>& vertices() const { return verts_; }
    bool empty() const { return verts_.size() < 3; }
    double area() const;  // shoelace, 0 for empty

    // Intersection with the half-plane nx*x + ny*y <= c. Vertices closer
    // than 1e-12 are merged.
    ConvexPolygon clipped(double nx, double ny, double c) const;

private:
    std::vector<Vec2> verts_;  // counterclockwise
};

// The polygon of each triple class at (s, t, a), including empty ones.
std::map<TripleClass, ConvexPolygon> region_polygons(double s, double t, double a);

// A(s, t, a) as the summed class areas.
double area_geometric(double s, double t, double a);

// Values of the 16 affine condition forms; condition i holds iff value >= 0.
std::array<double, 16> condition_values(double s, double t, double a);

struct ConditionVector {
    std::array<bool, 16> holds{};
    static ConditionVector at(double s, double t, double a);
};

struct PolyTerm {
    int coef = 0;
    int da = 0, ds = 0, dt = 0;  // coef * a^da * s^ds * t^dt
};

struct AreaRegion {
    int index = 0;                                   // 1..17
    std::vector<std::pair<int, bool>> conditions;    // (condition 1..16, required truth)
    std::vector<PolyTerm> numerator;                 // A = numerator / (2a)
};

const std::vector<AreaRegion>& region_table();

// Index 1..17 of the catalogued region containing (s, t, a); points within
// eps of a boundary match the region's closure. Throws UnlistedRegion when
// no catalogued combination holds (the catalogue covers part of the (s,t,a)
// space only) and AmbiguousRegion if two regions match strictly off their
// boundaries.
int classify_region(double s, double t, double a);

// Catalogue value at (s, t, a); classifies first, then evaluates the piece.
double area_closed_form(double s, double t, double a);

enum class GradientMethod { Closed, Numeric };

// (dA/ds, dA/dt). Closed differentiates the catalogued piece; Numeric uses
// central differences with h = 1e-6 on the polygon areas and throws
// OnBoundary when the stencil would cross a piece boundary.
std::pair<double, double> gradient_area(double s, double t, double a,
                                        GradientMethod method);

struct AreaMinimum {
    double s = 0, t = 0, area = 0;
};

// Global minimum of A(., ., a) over 0 <= s <= t <= 1: dense grid scan
// (default 400 intervals per axis) refined by coordinate descent with step
// halving until the step is below 1e-9, seeded additionally from the
// algebraic minimizer. Deterministic for fixed inputs.
AreaMinimum minimize_area(double a, int grid = 400, int threads = 0);

}  // namespace schur
