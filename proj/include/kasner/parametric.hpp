#pragma once

#include <vector>

#include "kasner/descent.hpp"
#include "kasner/geometry.hpp"

namespace kasner {

/// Canonical pentagon coordinates. With O the intersection of diagonals AD
/// and CE, the frame is scaled so triangle AOC has unit area; a, b locate D
/// and E on the diagonals and (c, d) are the frame coordinates of B. All
/// four must be positive; convex feasibility is checked at build time.
struct PentagonParams {
    double a = 1.0, b = 1.0, c = 1.0, d = 1.0;

    PentagonParams() = default;
    PentagonParams(double a_, double b_, double c_, double d_);
};

/// Canonical hexagon coordinates: distances of the six vertices from the
/// inner triangle M, N, P formed by the long diagonals, in units of the
/// frame edges. All six must be positive.
struct HexagonParams {
    double a = 1.0, b = 1.0, c = 1.0, d = 1.0, e = 1.0, f = 1.0;

    HexagonParams() = default;
    HexagonParams(double a_, double b_, double c_, double d_, double e_, double f_);
};

/// Symmetric functions of the hexagon parameters: S = sum, T = sum of
/// adjacent products, U = sum of skip-one products.
struct HexagonAggregates {
    double s = 0.0;
    double t = 0.0;
    double u = 0.0;
};

HexagonAggregates hexagon_aggregates(const HexagonParams& p);

/// Builds the pentagon A, B, C, D, E in the frame O = (0,0), v1 = (1,0),
/// v2 = (0,2) (unit frame wedge). Its area is a + b + c + d + ab. Throws
/// ConvexityError for infeasible parameters.
Polygon build_pentagon(const PentagonParams& p, const Tolerance& tol = {});

/// Closed-form ratio 1 - 2r + r (1 + ad + bc) / (a + b + c + d + ab);
/// matches area_ratio of the built pentagon.
double pentagon_ratio_closed(const PentagonParams& p, const KasnerParams& k);

/// The bare fraction (1 + ad + bc) / (a + b + c + d + ab).
double pentagon_ratio_fraction(const PentagonParams& p);

/// Family (n, n, 1, 1): ratio tends to the open lower bound 1 - 2r as
/// n -> infinity. Requires n >= 1.
PentagonParams pentagon_lower_family(double n);

/// Family (n, 1/n, 1, 1): ratio tends to the open upper bound 1 - r.
PentagonParams pentagon_upper_family(double n);

/// Recovers canonical parameters from a convex pentagon: O = AD x CE, then
/// a, b, c, d as wedge ratios in the (OA, OC) frame.
PentagonParams pentagon_params_of(const Polygon& pentagon, const Tolerance& tol = {});

/// Cyclically relabels a convex pentagon so the ear (A, B, C) has minimal
/// area, the labeling under which the closed-form fraction is < 1.
Polygon pentagon_min_ear_relabel(const Polygon& pentagon, const Tolerance& tol = {});

/// Builds the hexagon A..F in the frame M = (0,0), v1 = (1,0), v2 = (0,2),
/// v3 = v2 - v1. Its area is 1 + S + T.
Polygon build_hexagon(const HexagonParams& p, const Tolerance& tol = {});

/// Closed-form ratio (1 - 2r) + r (2 + S + U) / (1 + S + T).
double hexagon_ratio_closed(const HexagonParams& p, const KasnerParams& k);

/// The bare fraction (2 + S + U) / (1 + S + T).
double hexagon_ratio_fraction(const HexagonParams& p);

/// Family (1, 1, 1, 1, n, n): ratio tends to 1 - 2r. Convex for all n >= 1.
HexagonParams hexagon_lower_family(double n);

/// Family (t, ..., t): ratio tends to 1 as t -> 0. Convex for all t > 0.
HexagonParams hexagon_upper_family(double t);

/// Cyclic rotation of the parameter vector putting the smallest entry
/// first; feasibility and the aggregates S, T, U are rotation-invariant.
HexagonParams hexagon_params_min_first(const HexagonParams& p);

/// Ear areas of the parametric hexagon in closed form, starting with
/// b(1+a+c) - ac and continuing by cyclic shifts.
std::vector<double> hexagon_ear_formulas(const HexagonParams& p);

/// Extremal n-gon with ratio below 1 - 2r + eps/2 for every m: a unit-area
/// triangle with one corner of area eps^2 cut off and the cut replaced by a
/// shallow inscribed arc carrying the remaining vertices. Throws
/// ConstructionError if no sagitta keeps the polygon convex with the added
/// area below eps^2 (40 halvings tried). Emits polygons that are strictly
/// convex at abs_eps = 1e-12.
Polygon ngon_lower_construction(int n, double eps);

/// Extremal n-gon with ratio above 1 - eps for every m: a near-degenerate
/// all-equal hexagon extended one vertex at a time; each extension can only
/// increase the ratio. Returns the final n-gon, strictly convex at
/// abs_eps = 1e-12.
Polygon ngon_upper_construction(int n, double eps);

/// The full chain [hexagon seed, 7-gon, ..., n-gon] behind
/// ngon_upper_construction, for monotonicity checks.
std::vector<Polygon> ngon_upper_chain(int n, double eps);

}  // namespace kasner
