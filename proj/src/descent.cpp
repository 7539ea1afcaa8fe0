#include "kasner/descent.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

namespace kasner {

Polygon descendant(const Polygon& k, const KasnerParams& p, const Tolerance& tol) {
    const Polygon kk = ensure_convex_validated(k, tol);
    const auto& v = kk.vertices();
    const std::size_t n = v.size();
    std::vector<Vec2> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(v[i] + p.m() * (v[(i + 1) % n] - v[i]));
    return Polygon::convex(std::move(out), tol);
}

std::vector<Polygon> sequence(const Polygon& k, const KasnerParams& p, int t,
                              const Tolerance& tol) {
    if (t < 0) throw std::invalid_argument("sequence: t must be >= 0");
    std::vector<Polygon> out;
    out.reserve(static_cast<std::size_t>(t) + 1);
    out.push_back(ensure_convex_validated(k, tol));
    for (int i = 0; i < t; ++i) out.push_back(descendant(out.back(), p, tol));
    return out;
}

RatioReport area_ratio(const Polygon& k, const KasnerParams& p, const Tolerance& tol) {
    const Polygon kk = ensure_convex_validated(k, tol);
    RatioReport rep;
    rep.n = static_cast<int>(kk.size());
    rep.m = p.m();
    rep.area_k = polygon_area(kk, tol);
    rep.area_k_prime = polygon_area(descendant(kk, p, tol), tol);
    rep.ratio = rep.area_k_prime / rep.area_k;
    double ear_sum = 0.0;
    for (double e : ear_areas(kk, tol)) ear_sum += e;
    rep.ear_sum = ear_sum;
    const BoundInterval b = bound_interval(rep.n, p);
    rep.lower_bound = b.lower;
    rep.upper_bound = b.upper;
    rep.in_bounds = rep.ratio > b.lower - tol.rel_eps && rep.ratio < b.upper + tol.rel_eps;
    return rep;
}

double ear_decomposition_ratio(const Polygon& k, const KasnerParams& p, const Tolerance& tol) {
    const Polygon kk = ensure_convex_validated(k, tol);
    double ear_sum = 0.0;
    for (double e : ear_areas(kk, tol)) ear_sum += e;
    return 1.0 - p.r() * ear_sum / polygon_area(kk, tol);
}

double closed_form_ratio(int n, const KasnerParams& p) {
    if (n == 3) return 1.0 - 3.0 * p.r();
    if (n == 4) return 1.0 - 2.0 * p.r();
    throw UnsupportedError("closed_form_ratio: constant ratio exists only for n = 3, 4");
}

BoundInterval bound_interval(int n, const KasnerParams& p) {
    if (n < 3) throw UnsupportedError("bound_interval: n must be >= 3");
    const double r = p.r();
    if (n == 3) return {1.0 - 3.0 * r, 1.0 - 3.0 * r, true};
    if (n == 4) return {1.0 - 2.0 * r, 1.0 - 2.0 * r, true};
    if (n == 5) return {1.0 - 2.0 * r, 1.0 - r, false};
    return {1.0 - 2.0 * r, 1.0, false};
}

std::pair<double, double> pentagon_recurrence_coeffs(const KasnerParams& p) {
    const double r = p.r();
    return {2.0 - 5.0 * r, 1.0 - 5.0 * r + 5.0 * r * r};
}

double recurrence_residual(const Polygon& k, const KasnerParams& p, const Tolerance& tol) {
    if (k.size() != 5) throw WrongArityError("recurrence_residual: pentagon required");
    const Polygon k0 = ensure_convex_validated(k, tol);
    const Polygon k1 = descendant(k0, p, tol);
    const Polygon k2 = descendant(k1, p, tol);
    const double d0 = polygon_area(k0, tol);
    const double d1 = polygon_area(k1, tol);
    const double d2 = polygon_area(k2, tol);
    const auto [c1, c2] = pentagon_recurrence_coeffs(p);
    return std::abs(d2 - c1 * d1 + c2 * d0) / d0;
}

double affine_regularity_defect(const Polygon& k) {
    const auto& v = k.vertices();
    const std::size_t n = v.size();
    const Vec2 c = centroid(k);

    std::vector<std::complex<double>> z;
    z.reserve(n);
    for (const Vec2& p : v) z.emplace_back(p.x - c.x, p.y - c.y);

    // O(n^2) DFT; polygons here are tiny.
    double total = 0.0;
    double kept = 0.0;
    for (std::size_t h = 0; h < n; ++h) {
        std::complex<double> coeff{0.0, 0.0};
        for (std::size_t j = 0; j < n; ++j) {
            const double ang = -2.0 * std::numbers::pi * static_cast<double>(h) *
                               static_cast<double>(j) / static_cast<double>(n);
            coeff += z[j] * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        const double energy = std::norm(coeff);
        total += energy;
        if (h == 1 || h == n - 1) kept += energy;
    }
    if (total <= 0.0) throw DegenerateError("affine_regularity_defect: all vertices coincide");
    const double defect = 1.0 - kept / total;
    return std::clamp(defect, 0.0, 1.0);
}

}  // namespace kasner
