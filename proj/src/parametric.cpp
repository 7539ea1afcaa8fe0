#include "kasner/parametric.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <initializer_list>
#include <numbers>
#include <string>

namespace kasner {

namespace {

void require_positive(std::initializer_list<double> values, const char* what) {
    for (double v : values)
        if (!(v > 0.0)) throw std::invalid_argument(std::string(what) + ": parameters must be positive");
}

std::array<double, 5> pentagon_ear_formulas(const PentagonParams& p) {
    return {p.c + p.d - 1.0,        // ABC
            p.a - p.a * p.d + p.c,  // BCD
            p.a * p.b + p.a,        // CDE
            p.a * p.b + p.b,        // DEA
            p.b - p.b * p.c + p.d}; // EAB
}

void require_pentagon_feasible(const PentagonParams& p) {
    for (double ear : pentagon_ear_formulas(p))
        if (!(ear > 0.0)) throw ConvexityError("pentagon parameters are not convex-feasible");
}

void require_hexagon_feasible(const HexagonParams& p) {
    for (double ear : hexagon_ear_formulas(p))
        if (!(ear > 0.0)) throw ConvexityError("hexagon parameters are not convex-feasible");
}

// Intersection of lines (p0, p1) and (q0, q1).
Vec2 line_intersection(Vec2 p0, Vec2 p1, Vec2 q0, Vec2 q1) {
    const Vec2 dp = p1 - p0;
    const Vec2 dq = q1 - q0;
    const double denom = wedge(dp, dq);
    if (denom == 0.0) throw DegenerateError("line_intersection: parallel lines");
    const double s = wedge(q0 - p0, dq) / denom;
    return p0 + s * dp;
}

}  // namespace

PentagonParams::PentagonParams(double a_, double b_, double c_, double d_)
    : a(a_), b(b_), c(c_), d(d_) {
    require_positive({a, b, c, d}, "PentagonParams");
}

HexagonParams::HexagonParams(double a_, double b_, double c_, double d_, double e_, double f_)
    : a(a_), b(b_), c(c_), d(d_), e(e_), f(f_) {
    require_positive({a, b, c, d, e, f}, "HexagonParams");
}

HexagonAggregates hexagon_aggregates(const HexagonParams& p) {
    HexagonAggregates agg;
    agg.s = p.a + p.b + p.c + p.d + p.e + p.f;
    agg.t = p.a * p.b + p.b * p.c + p.c * p.d + p.d * p.e + p.e * p.f + p.f * p.a;
    agg.u = p.a * p.c + p.b * p.d + p.c * p.e + p.d * p.f + p.e * p.a + p.f * p.b;
    return agg;
}

Polygon build_pentagon(const PentagonParams& p, const Tolerance& tol) {
    require_pentagon_feasible(p);
    // Frame: O = (0,0), v1 = OA = (1,0), v2 = OC = (0,2), so v1 ^ v2 = 1.
    const Vec2 a_pt{1.0, 0.0};
    const Vec2 b_pt{p.c, 2.0 * p.d};
    const Vec2 c_pt{0.0, 2.0};
    const Vec2 d_pt{-p.a, 0.0};
    const Vec2 e_pt{0.0, -2.0 * p.b};
    return Polygon::convex({a_pt, b_pt, c_pt, d_pt, e_pt}, tol);
}

double pentagon_ratio_fraction(const PentagonParams& p) {
    return (1.0 + p.a * p.d + p.b * p.c) / (p.a + p.b + p.c + p.d + p.a * p.b);
}

double pentagon_ratio_closed(const PentagonParams& p, const KasnerParams& k) {
    require_pentagon_feasible(p);
    const double r = k.r();
    return 1.0 - 2.0 * r + r * pentagon_ratio_fraction(p);
}

PentagonParams pentagon_lower_family(double n) {
    if (!(n >= 1.0)) throw std::invalid_argument("pentagon_lower_family: n must be >= 1");
    return {n, n, 1.0, 1.0};
}

PentagonParams pentagon_upper_family(double n) {
    if (!(n >= 1.0)) throw std::invalid_argument("pentagon_upper_family: n must be >= 1");
    return {n, 1.0 / n, 1.0, 1.0};
}

PentagonParams pentagon_params_of(const Polygon& pentagon, const Tolerance& tol) {
    if (pentagon.size() != 5) throw WrongArityError("pentagon_params_of: pentagon required");
    const Polygon k = ensure_convex_validated(pentagon, tol);
    const auto& v = k.vertices();
    const Vec2 a_pt = v[0], b_pt = v[1], c_pt = v[2], d_pt = v[3], e_pt = v[4];
    const Vec2 o = line_intersection(a_pt, d_pt, c_pt, e_pt);
    const Vec2 v1 = a_pt - o;
    const Vec2 v2 = c_pt - o;
    const double omega = wedge(v1, v2);
    if (omega == 0.0) throw DegenerateError("pentagon_params_of: collapsed frame");
    // DO = a v1, EO = b v2, OB = c v1 + d v2; all read off as wedge ratios.
    const double a = wedge(o - d_pt, v2) / omega;
    const double b = wedge(v1, o - e_pt) / omega;
    const double c = wedge(b_pt - o, v2) / omega;
    const double d = wedge(v1, b_pt - o) / omega;
    return {a, b, c, d};
}

Polygon pentagon_min_ear_relabel(const Polygon& pentagon, const Tolerance& tol) {
    if (pentagon.size() != 5) throw WrongArityError("pentagon_min_ear_relabel: pentagon required");
    const Polygon k = ensure_convex_validated(pentagon, tol);
    const auto ears = ear_areas(k, tol);
    const std::size_t best =
        static_cast<std::size_t>(std::min_element(ears.begin(), ears.end()) - ears.begin());
    return rotate_labels(k, best, tol);
}

Polygon build_hexagon(const HexagonParams& p, const Tolerance& tol) {
    require_hexagon_feasible(p);
    // Frame: M = (0,0), N = M + v1, P = M + v2 with v1 = (1,0), v2 = (0,2),
    // v3 = v2 - v1; the inner triangle MNP has unit area.
    const Vec2 v1{1.0, 0.0};
    const Vec2 v2{0.0, 2.0};
    const Vec2 v3 = v2 - v1;
    const Vec2 m{0.0, 0.0};
    const Vec2 n = m + v1;
    const Vec2 pp = m + v2;
    const Vec2 a_pt = m - p.a * v1;
    const Vec2 b_pt = m - p.b * v2;
    const Vec2 c_pt = n - p.c * v3;
    const Vec2 d_pt = n + p.d * v1;
    const Vec2 e_pt = pp + p.e * v2;
    const Vec2 f_pt = pp + p.f * v3;
    return Polygon::convex({a_pt, b_pt, c_pt, d_pt, e_pt, f_pt}, tol);
}

double hexagon_ratio_fraction(const HexagonParams& p) {
    const HexagonAggregates agg = hexagon_aggregates(p);
    return (2.0 + agg.s + agg.u) / (1.0 + agg.s + agg.t);
}

double hexagon_ratio_closed(const HexagonParams& p, const KasnerParams& k) {
    require_hexagon_feasible(p);
    const double r = k.r();
    return (1.0 - 2.0 * r) + r * hexagon_ratio_fraction(p);
}

HexagonParams hexagon_lower_family(double n) {
    if (!(n >= 1.0)) throw std::invalid_argument("hexagon_lower_family: n must be >= 1");
    return {1.0, 1.0, 1.0, 1.0, n, n};
}

HexagonParams hexagon_upper_family(double t) {
    if (!(t > 0.0)) throw std::invalid_argument("hexagon_upper_family: t must be > 0");
    return {t, t, t, t, t, t};
}

HexagonParams hexagon_params_min_first(const HexagonParams& p) {
    const std::array<double, 6> vals{p.a, p.b, p.c, p.d, p.e, p.f};
    const std::size_t k =
        static_cast<std::size_t>(std::min_element(vals.begin(), vals.end()) - vals.begin());
    std::array<double, 6> out{};
    for (std::size_t i = 0; i < 6; ++i) out[i] = vals[(i + k) % 6];
    return {out[0], out[1], out[2], out[3], out[4], out[5]};
}

std::vector<double> hexagon_ear_formulas(const HexagonParams& p) {
    const std::array<double, 6> v{p.a, p.b, p.c, p.d, p.e, p.f};
    std::vector<double> ears;
    ears.reserve(6);
    // ear(ABC) = b(1+a+c) - ac, then cyclic shifts.
    for (std::size_t i = 0; i < 6; ++i) {
        const double lo = v[i], mid = v[(i + 1) % 6], hi = v[(i + 2) % 6];
        ears.push_back(mid * (1.0 + lo + hi) - lo * hi);
    }
    return ears;
}

namespace {

// Both extremal constructions promise strict convexity at this threshold.
const Tolerance kConstructionTol{1e-12, 1e-12};

}  // namespace

Polygon ngon_lower_construction(int n, double eps) {
    const Tolerance& tol = kConstructionTol;
    if (n < 6) throw std::invalid_argument("ngon_lower_construction: n must be >= 6");
    if (!(eps > 0.0 && eps < 1.0))
        throw std::invalid_argument("ngon_lower_construction: eps must lie in (0,1)");

    // Unit-area base triangle M A1 A2; the corner at M of area eps^2 is cut
    // by taking An, A3 at fraction eps along M A1, M A2.
    const Vec2 m{0.0, 0.0};
    const Vec2 a1{2.0, 0.0};
    const Vec2 a2{0.0, 1.0};
    const Vec2 an = m + eps * (a1 - m);
    const Vec2 a3 = m + eps * (a2 - m);

    const Vec2 chord = an - a3;
    const double chord_len = chord.norm();
    const Vec2 chord_mid = a3 + 0.5 * chord;
    // Unit normal to the chord pointing toward the cut corner M.
    Vec2 toward_m{-chord.y / chord_len, chord.x / chord_len};
    if ((m - chord_mid).x * toward_m.x + (m - chord_mid).y * toward_m.y < 0.0)
        toward_m = -1.0 * toward_m;

    double sagitta = eps * eps / (2.0 * chord_len);
    for (int retry = 0; retry <= 40; ++retry, sagitta *= 0.5) {
        const double radius = (chord_len * chord_len / 4.0 + sagitta * sagitta) / (2.0 * sagitta);
        const Vec2 center = chord_mid - (radius - sagitta) * toward_m;
        const double theta3 = std::atan2(a3.y - center.y, a3.x - center.x);
        const double thetan = std::atan2(an.y - center.y, an.x - center.x);
        double span = thetan - theta3;
        // The inscribed arc is shallow, so the short way around is correct.
        if (span > std::numbers::pi) span -= 2.0 * std::numbers::pi;
        if (span < -std::numbers::pi) span += 2.0 * std::numbers::pi;

        std::vector<Vec2> verts;
        verts.reserve(static_cast<std::size_t>(n));
        verts.push_back(a1);
        verts.push_back(a2);
        verts.push_back(a3);
        const int segments = n - 3;
        for (int j = 1; j < segments; ++j) {
            const double ang = theta3 + span * static_cast<double>(j) / segments;
            verts.push_back(center + Vec2{radius * std::cos(ang), radius * std::sin(ang)});
        }
        verts.push_back(an);

        try {
            Polygon poly = Polygon::convex(std::move(verts), tol);
            // Keep the bulge area below the cut: total area must stay < 1.
            if (polygon_area(poly, tol) < 1.0) return poly;
        } catch (const Error&) {
            // fall through to the next halving
        }
    }
    throw ConstructionError("ngon_lower_construction: no sagitta met convexity and area");
}

namespace {

// Ratio deficit of the all-equal hexagon at the worst division ratio
// (r = 1/4): 1 - ratio = (1/4) * 6t(1+t) / (1 + 6t + 6t^2).
double hexagon_seed_deficit(double t) {
    return 0.25 * 6.0 * t * (1.0 + t) / (1.0 + 6.0 * t + 6.0 * t * t);
}

Polygon append_upper_vertex(const Polygon& q, const Tolerance& tol) {
    const std::size_t nn = q.size();
    const auto edges = edge_vectors(q);

    // Relabel so the wedge of the next-to-last edge with the first is
    // positive; guaranteed to exist for a convex polygon. The largest such
    // wedge gives the most numerical headroom.
    std::size_t shift = nn;
    double best = 0.0;
    for (std::size_t k = 0; k < nn; ++k) {
        const double w = wedge(edges[(k + nn - 2) % nn], edges[k]);
        if (w > best) {
            best = w;
            shift = k;
        }
    }
    if (shift == nn)
        throw ConstructionError("ngon_upper_construction: no relabeling with positive wedge");

    const Polygon labeled = rotate_labels(q, shift, tol);
    const auto e = edge_vectors(labeled);
    const double a_n1 = wedge(e[nn - 1], e[0]);       // last edge ^ first edge
    const double a_nm1_1 = wedge(e[nn - 2], e[0]);    // next-to-last ^ first
    const double lambda = 0.5 * std::min(0.5, a_n1 / (a_n1 + a_nm1_1));

    std::vector<Vec2> verts = labeled.vertices();
    const Vec2 tip = verts.back() + lambda * (e[nn - 2] + e[nn - 1]);
    verts.push_back(tip);
    return Polygon::convex(std::move(verts), tol);
}

}  // namespace

std::vector<Polygon> ngon_upper_chain(int n, double eps) {
    const Tolerance& tol = kConstructionTol;
    if (n < 6) throw std::invalid_argument("ngon_upper_construction: n must be >= 6");
    if (!(eps > 0.0 && eps < 1.0))
        throw std::invalid_argument("ngon_upper_construction: eps must lie in (0,1)");

    // Seed hexagon: bisect for the largest all-equal parameter whose ratio
    // exceeds 1 - eps/2 at every m, leaving slack for the appended chain.
    const double target = eps / 4.0;
    double t = 1.0;
    if (hexagon_seed_deficit(t) > target) {
        double lo = 0.0, hi = 1.0;
        for (int it = 0; it < 80; ++it) {
            const double mid = 0.5 * (lo + hi);
            (hexagon_seed_deficit(mid) <= target ? lo : hi) = mid;
        }
        t = lo;
    }
    if (!(t > 0.0)) throw ConstructionError("ngon_upper_construction: seed bisection collapsed");

    std::vector<Polygon> chain;
    chain.push_back(build_hexagon(hexagon_upper_family(t), tol));
    while (static_cast<int>(chain.back().size()) < n)
        chain.push_back(append_upper_vertex(chain.back(), tol));
    return chain;
}

Polygon ngon_upper_construction(int n, double eps) {
    return ngon_upper_chain(n, eps).back();
}

}  // namespace kasner
