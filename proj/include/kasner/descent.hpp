#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "kasner/geometry.hpp"

namespace kasner {

/// Edge division ratio m : (1-m), with the derived quantity r = m(1-m)
/// cached. 0 < m < 1 implies 0 < r <= 1/4.
class KasnerParams {
public:
    explicit KasnerParams(double m) : m_(m), r_(m * (1.0 - m)) {
        if (!(m > 0.0) || !(m < 1.0))
            throw std::invalid_argument("KasnerParams: m must lie in (0,1)");
    }

    double m() const noexcept { return m_; }
    double r() const noexcept { return r_; }

private:
    double m_;
    double r_;
};

/// Theoretical range of the area ratio over all convex n-gons at a fixed m.
/// `attained` marks the degenerate intervals (n = 3, 4) where the ratio is
/// constant; for n >= 5 the bounds are open and approachable only.
struct BoundInterval {
    double lower = 0.0;
    double upper = 0.0;
    bool attained = false;
};

/// Per-polygon descent record.
struct RatioReport {
    int n = 0;
    double m = 0.0;
    double area_k = 0.0;
    double area_k_prime = 0.0;
    double ratio = 0.0;
    double ear_sum = 0.0;
    double lower_bound = 0.0;
    double upper_bound = 0.0;
    bool in_bounds = false;
};

/// First m-Kasner descendant: vertex B_i = A_i + m (A_{i+1} - A_i), taken in
/// the CCW vertex order. The result is convex-validated CCW and strictly
/// smaller in area. Throws ConvexityError on non-convex input.
Polygon descendant(const Polygon& k, const KasnerParams& p, const Tolerance& tol = {});

/// [K^0 = K, K^1, ..., K^t].
std::vector<Polygon> sequence(const Polygon& k, const KasnerParams& p, int t,
                              const Tolerance& tol = {});

/// Measures the descent of K once and fills a RatioReport, including the
/// theoretical interval for its vertex count. in_bounds allows tol.rel_eps
/// slack at the interval boundaries so the attained n = 3, 4 cases register
/// as inside.
RatioReport area_ratio(const Polygon& k, const KasnerParams& p, const Tolerance& tol = {});

/// Independent route to the same ratio: 1 - r * sum(ear areas) / area(K).
/// Cross-checks area_ratio without constructing the descendant.
double ear_decomposition_ratio(const Polygon& k, const KasnerParams& p,
                               const Tolerance& tol = {});

/// Constant ratios 1 - 3r (n = 3) and 1 - 2r (n = 4). No constant ratio
/// exists for n >= 5; UnsupportedError for any other n.
double closed_form_ratio(int n, const KasnerParams& p);

/// n = 3: point {1-3r}; n = 4: point {1-2r}; n = 5: open (1-2r, 1-r);
/// n >= 6: open (1-2r, 1).
BoundInterval bound_interval(int n, const KasnerParams& p);

/// Coefficients (c1, c2) = (2-5r, 1-5r+5r^2) of the three-generation
/// pentagon area recurrence  area(K'') = c1 area(K') - c2 area(K).
std::pair<double, double> pentagon_recurrence_coeffs(const KasnerParams& p);

/// |area(K'') - c1 area(K') + c2 area(K)| / area(K) for a convex pentagon;
/// zero up to rounding for every convex pentagon.
double recurrence_residual(const Polygon& k, const KasnerParams& p, const Tolerance& tol = {});

/// Distance from affine regularity, in [0, 1]: fraction of the centered
/// vertex sequence's discrete-Fourier energy lying outside harmonics 1 and
/// n-1. Exactly 0 for affine images of regular n-gons.
double affine_regularity_defect(const Polygon& k);

}  // namespace kasner
