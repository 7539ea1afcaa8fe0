#include "kasner/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace kasner {

namespace {

// splitmix64, used to derive independent per-attempt seeds.
std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Uniform double in [0,1); avoids std::uniform_real_distribution so the
// byte-identical determinism contract holds across standard libraries.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t k) { return rng() % k; }

template <typename T>
void shuffle_fy(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[bounded(rng, i)]);
}

// Turns one sorted coordinate multiset into n signed components summing to
// zero: interior values go to one of two monotone chains at random, and the
// descending chain contributes negated differences.
std::vector<double> paired_components(std::vector<double> sorted, std::mt19937_64& rng) {
    const std::size_t n = sorted.size();
    std::vector<double> comps;
    comps.reserve(n);
    double last_up = sorted.front();
    double last_down = sorted.front();
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (bounded(rng, 2) == 0) {
            comps.push_back(sorted[i] - last_up);
            last_up = sorted[i];
        } else {
            comps.push_back(last_down - sorted[i]);
            last_down = sorted[i];
        }
    }
    comps.push_back(sorted.back() - last_up);
    comps.push_back(last_down - sorted.back());
    return comps;
}

}  // namespace

Polygon random_convex_polygon(const SamplerConfig& cfg) {
    if (cfg.n < 3) throw std::invalid_argument("random_convex_polygon: n must be >= 3");
    if (!(cfg.scale > 0.0)) throw std::invalid_argument("random_convex_polygon: scale must be > 0");
    const std::size_t n = static_cast<std::size_t>(cfg.n);
    const Tolerance strict{1e-12, 1e-12};

    for (std::uint64_t attempt = 0; attempt < 100; ++attempt) {
        std::mt19937_64 rng(mix(cfg.seed + attempt * 0x9e3779b97f4a7c15ull));

        std::vector<double> xs(n), ys(n);
        for (double& x : xs) x = uniform01(rng);
        for (double& y : ys) y = uniform01(rng);
        std::sort(xs.begin(), xs.end());
        std::sort(ys.begin(), ys.end());

        std::vector<double> xc = paired_components(std::move(xs), rng);
        std::vector<double> yc = paired_components(std::move(ys), rng);
        shuffle_fy(yc, rng);

        std::vector<Vec2> edges;
        edges.reserve(n);
        for (std::size_t i = 0; i < n; ++i) edges.push_back({xc[i], yc[i]});
        std::sort(edges.begin(), edges.end(),
                  [](Vec2 a, Vec2 b) { return std::atan2(a.y, a.x) < std::atan2(b.y, b.x); });

        std::vector<Vec2> verts;
        verts.reserve(n);
        Vec2 cur{0.0, 0.0};
        for (std::size_t i = 0; i < n; ++i) {
            verts.push_back(cur);
            cur = cur + edges[i];
        }

        // Center on the vertex centroid, then apply stretch and scale.
        double sx = 0.0, sy = 0.0;
        for (Vec2 v : verts) {
            sx += v.x;
            sy += v.y;
        }
        sx /= static_cast<double>(n);
        sy /= static_cast<double>(n);
        for (Vec2& v : verts)
            v = Vec2{(v.x - sx) * cfg.scale * cfg.anisotropy, (v.y - sy) * cfg.scale};

        try {
            return Polygon::convex(std::move(verts), strict);
        } catch (const Error&) {
            continue;
        }
    }
    throw RetryExhaustedError("random_convex_polygon: no strictly convex sample in 100 attempts");
}

}  // namespace kasner
