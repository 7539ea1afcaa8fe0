#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "kasner/errors.hpp"

namespace kasner {

/// Absolute/relative tolerances used by predicates and residual checks.
struct Tolerance {
    double abs_eps = 1e-9;
    double rel_eps = 1e-9;

    Tolerance() = default;
    Tolerance(double abs_eps_, double rel_eps_) : abs_eps(abs_eps_), rel_eps(rel_eps_) {
        if (!(abs_eps > 0.0) || !(rel_eps > 0.0))
            throw std::invalid_argument("Tolerance: eps values must be strictly positive");
    }
};

/// 2D displacement with finite real coordinates.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {
        if (!std::isfinite(x) || !std::isfinite(y))
            throw std::invalid_argument("Vec2: components must be finite");
    }

    Vec2 operator+(Vec2 r) const { return {x + r.x, y + r.y}; }
    Vec2 operator-(Vec2 r) const { return {x - r.x, y - r.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    friend Vec2 operator*(double s, Vec2 v) { return {v.x * s, v.y * s}; }

    double norm() const { return std::hypot(x, y); }
};

/// Signed area of the triangle spanned by v and u: (v.x*u.y - v.y*u.x) / 2.
inline double wedge(Vec2 v, Vec2 u) { return (v.x * u.y - v.y * u.x) / 2.0; }

inline double distance(Vec2 a, Vec2 b) { return (a - b).norm(); }

/// Strict-convexity predicate on a raw CCW vertex ring: every consecutive
/// edge-pair wedge must exceed tol.abs_eps. Orientation-sensitive: a
/// clockwise ring fails.
bool is_convex_ccw(std::span<const Vec2> vertices, const Tolerance& tol = {});

/// Ordered vertex ring, normalized to counterclockwise orientation at
/// construction. A Polygon may additionally be flagged convex-validated,
/// which certifies strict convexity under the tolerance used to check it.
class Polygon {
public:
    /// Validates n >= 3, rejects consecutive vertices closer than
    /// tol.abs_eps and zero-area rings, and reverses clockwise input
    /// (recording the flip).
    explicit Polygon(std::vector<Vec2> vertices, const Tolerance& tol = {});

    /// Constructs and convex-validates in one step; throws ConvexityError
    /// if the ring is not strictly convex.
    static Polygon convex(std::vector<Vec2> vertices, const Tolerance& tol = {});

    const std::vector<Vec2>& vertices() const noexcept { return verts_; }
    std::size_t size() const noexcept { return verts_.size(); }
    Vec2 operator[](std::size_t i) const { return verts_[i]; }

    /// True when the constructor reversed a clockwise input.
    bool orientation_flipped() const noexcept { return flipped_; }
    bool convex_validated() const noexcept { return convex_validated_; }

private:
    std::vector<Vec2> verts_;
    bool flipped_ = false;
    bool convex_validated_ = false;
};

/// Returns K unchanged if already convex-validated, otherwise validates it
/// now; throws ConvexityError when the polygon is not strictly convex.
Polygon ensure_convex_validated(const Polygon& k, const Tolerance& tol = {});

/// Predicate form on a Polygon (checks the stored, CCW-normalized ring).
bool is_convex_ccw(const Polygon& k, const Tolerance& tol = {});

/// Edge vectors v_i = A_{i+1} - A_i, cyclically; they sum to zero up to
/// rounding.
std::vector<Vec2> edge_vectors(const Polygon& k);

/// Area by fan decomposition from the first vertex:
/// sum of wedge(A_i - A_0, A_{i+1} - A_0). Positive for the stored CCW ring.
/// Throws DegenerateError when |area| < tol.abs_eps.
double polygon_area(const Polygon& k, const Tolerance& tol = {});

/// Vertex centroid (arithmetic mean of the vertices); this is the quantity
/// preserved by Kasner descent, not the area centroid.
Vec2 centroid(const Polygon& k);

/// Ear areas of a convex polygon. ears[i] is the area of the triangle
/// (A_i, A_{i+1}, A_{i+2}), i.e. the ear cut off at vertex A_{i+1}.
/// Throws ConvexityError unless K is convex (validated on the fly if the
/// flag is unset).
std::vector<double> ear_areas(const Polygon& k, const Tolerance& tol = {});

/// Largest pairwise vertex distance.
double diameter(const Polygon& k);

/// Cyclic relabeling: vertex i of the result is vertex (i + shift) mod n.
/// Relabeling does not move points; a convex-validated input is re-validated
/// under `tol` so the flag carries over.
Polygon rotate_labels(const Polygon& k, std::size_t shift, const Tolerance& tol = {});

/// Polygon with vertex `index` removed. For strictly convex input the
/// result is strictly convex again and is returned convex-validated.
Polygon remove_vertex(const Polygon& k, std::size_t index, const Tolerance& tol = {});

}  // namespace kasner
