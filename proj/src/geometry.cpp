#include "kasner/geometry.hpp"

#include <algorithm>
#include <utility>

namespace kasner {

namespace {

// Fan decomposition from vertices[0]; positive for CCW rings.
double signed_area(std::span<const Vec2> vs) {
    const std::size_t n = vs.size();
    double a = 0.0;
    for (std::size_t i = 1; i + 1 < n; ++i)
        a += wedge(vs[i] - vs[0], vs[i + 1] - vs[0]);
    return a;
}

}  // namespace

bool is_convex_ccw(std::span<const Vec2> vertices, const Tolerance& tol) {
    const std::size_t n = vertices.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 e0 = vertices[(i + 1) % n] - vertices[i];
        const Vec2 e1 = vertices[(i + 2) % n] - vertices[(i + 1) % n];
        if (!(wedge(e0, e1) > tol.abs_eps)) return false;
    }
    return true;
}

Polygon::Polygon(std::vector<Vec2> vertices, const Tolerance& tol) : verts_(std::move(vertices)) {
    const std::size_t n = verts_.size();
    if (n < 3) throw std::invalid_argument("Polygon: need at least 3 vertices");
    for (std::size_t i = 0; i < n; ++i) {
        if (distance(verts_[i], verts_[(i + 1) % n]) <= tol.abs_eps)
            throw DegenerateError("Polygon: consecutive vertices coincide within tolerance");
    }
    const double a = signed_area(verts_);
    if (std::abs(a) < tol.abs_eps)
        throw DegenerateError("Polygon: area below tolerance, orientation undefined");
    if (a < 0.0) {
        std::reverse(verts_.begin(), verts_.end());
        flipped_ = true;
    }
}

Polygon Polygon::convex(std::vector<Vec2> vertices, const Tolerance& tol) {
    Polygon p(std::move(vertices), tol);
    if (!is_convex_ccw(std::span<const Vec2>(p.verts_), tol))
        throw ConvexityError("Polygon: not strictly convex");
    p.convex_validated_ = true;
    return p;
}

Polygon ensure_convex_validated(const Polygon& k, const Tolerance& tol) {
    if (k.convex_validated()) return k;
    return Polygon::convex(k.vertices(), tol);
}

bool is_convex_ccw(const Polygon& k, const Tolerance& tol) {
    return is_convex_ccw(std::span<const Vec2>(k.vertices()), tol);
}

std::vector<Vec2> edge_vectors(const Polygon& k) {
    const auto& v = k.vertices();
    const std::size_t n = v.size();
    std::vector<Vec2> edges;
    edges.reserve(n);
    for (std::size_t i = 0; i < n; ++i) edges.push_back(v[(i + 1) % n] - v[i]);
    return edges;
}

double polygon_area(const Polygon& k, const Tolerance& tol) {
    const double a = signed_area(std::span<const Vec2>(k.vertices()));
    if (std::abs(a) < tol.abs_eps) throw DegenerateError("polygon_area: degenerate polygon");
    return a;
}

Vec2 centroid(const Polygon& k) {
    double sx = 0.0, sy = 0.0;
    for (const Vec2& v : k.vertices()) {
        sx += v.x;
        sy += v.y;
    }
    const double n = static_cast<double>(k.size());
    return {sx / n, sy / n};
}

std::vector<double> ear_areas(const Polygon& k, const Tolerance& tol) {
    const Polygon kk = ensure_convex_validated(k, tol);
    const auto edges = edge_vectors(kk);
    const std::size_t n = edges.size();
    std::vector<double> ears;
    ears.reserve(n);
    for (std::size_t i = 0; i < n; ++i) ears.push_back(wedge(edges[i], edges[(i + 1) % n]));
    return ears;
}

double diameter(const Polygon& k) {
    const auto& v = k.vertices();
    double best = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) best = std::max(best, distance(v[i], v[j]));
    return best;
}

Polygon rotate_labels(const Polygon& k, std::size_t shift, const Tolerance& tol) {
    const auto& v = k.vertices();
    const std::size_t n = v.size();
    std::vector<Vec2> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(v[(i + shift) % n]);
    if (k.convex_validated()) return Polygon::convex(std::move(out), tol);
    return Polygon(std::move(out), tol);
}

Polygon remove_vertex(const Polygon& k, std::size_t index, const Tolerance& tol) {
    const auto& v = k.vertices();
    if (v.size() < 4) throw WrongArityError("remove_vertex: result would not be a polygon");
    if (index >= v.size()) throw std::out_of_range("remove_vertex: index out of range");
    std::vector<Vec2> out;
    out.reserve(v.size() - 1);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (i != index) out.push_back(v[i]);
    return Polygon::convex(std::move(out), tol);
}

}  // namespace kasner
