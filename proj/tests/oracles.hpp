#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// calls into the library: quaternions are plain doubled-coordinate arrays
// and every search is exhaustive.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using Quad = std::array<std::int64_t, 4>;

inline bool same_parity(const Quad& x) {
    return ((x[0] ^ x[1]) & 1) == 0 && ((x[0] ^ x[2]) & 1) == 0 && ((x[0] ^ x[3]) & 1) == 0;
}

/// Product through the left-regular 4×4 matrix of x.
inline Quad mul(const Quad& x, const Quad& y) {
    const std::int64_t a = x[0], b = x[1], c = x[2], d = x[3];
    const std::int64_t m[4][4] = {{a, -b, -c, -d}, {b, a, -d, c}, {c, d, a, -b}, {d, -c, b, a}};
    Quad out{};
    for (int r = 0; r < 4; ++r) {
        std::int64_t s = 0;
        for (int k = 0; k < 4; ++k) s += m[r][k] * y[k];
        out[r] = s / 2;
    }
    return out;
}

inline Quad conj(const Quad& x) { return {x[0], -x[1], -x[2], -x[3]}; }

inline std::int64_t norm4(const Quad& x) { return x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3]; }

/// All doubled vectors of quaternion norm n, by scanning the full cube.
inline std::vector<Quad> elements_of_norm(std::int64_t n) {
    std::int64_t m = 0;
    while ((m + 1) * (m + 1) <= 4 * n) ++m;
    std::vector<Quad> out;
    for (std::int64_t a = -m; a <= m; ++a)
        for (std::int64_t b = -m; b <= m; ++b)
            for (std::int64_t c = -m; c <= m; ++c)
                for (std::int64_t d = -m; d <= m; ++d) {
                    const Quad x{a, b, c, d};
                    if (same_parity(x) && norm4(x) == 4 * n) out.push_back(x);
                }
    return out;
}

inline const std::vector<Quad>& units() {
    static const std::vector<Quad> u = elements_of_norm(1);
    return u;
}

/// True iff a = x·d for some Hurwitz integer x.
inline bool right_divides(const Quad& d, const Quad& a) {
    const std::int64_t n = norm4(d) / 4;
    Quad t = mul(a, conj(d));
    for (auto& v : t) {
        if (v % n != 0) return false;
        v /= n;
    }
    return same_parity(t);
}

inline Quad orbit_min(const Quad& h) {
    Quad best = mul(units().front(), h);
    for (const Quad& u : units()) best = std::min(best, mul(u, h));
    return best;
}

/// Number of left-unit orbits among elements of norm n.
inline std::size_t count_classes(std::int64_t n) {
    std::set<Quad> reps;
    for (const Quad& h : elements_of_norm(n)) reps.insert(orbit_min(h));
    return reps.size();
}

inline std::vector<Quad> class_reps(std::int64_t n) {
    std::set<Quad> reps;
    for (const Quad& h : elements_of_norm(n)) reps.insert(orbit_min(h));
    return {reps.begin(), reps.end()};
}

/// P' for PQ = Q'P': the least norm-p element right-dividing PQ. All 24
/// left associates of P' divide, so the minimum is the class minimum.
inline Quad metacommute(const Quad& P, const Quad& Q, std::int64_t p) {
    const Quad pq = mul(P, Q);
    std::optional<Quad> best;
    for (const Quad& x : elements_of_norm(p))
        if (right_divides(x, pq) && (!best || x < *best)) best = x;
    return *best;
}

/// Projective points of x²+y²+z² = 0, scaled so the first nonzero entry is 1.
inline std::vector<std::array<std::int64_t, 3>> conic(std::int64_t p) {
    std::set<std::array<std::int64_t, 3>> pts;
    for (std::int64_t x = 0; x < p; ++x)
        for (std::int64_t y = 0; y < p; ++y)
            for (std::int64_t z = 0; z < p; ++z) {
                if (x == 0 && y == 0 && z == 0) continue;
                if ((x * x + y * y + z * z) % p != 0) continue;
                const std::int64_t lead = x ? x : y ? y : z;
                std::int64_t inv = 1;
                while ((lead * inv) % p != 1) ++inv;
                pts.insert({x * inv % p, y * inv % p, z * inv % p});
            }
    return {pts.begin(), pts.end()};
}

/// Element orders in PGL₂(F_p): least k with A^k scalar.
inline std::map<std::int64_t, std::int64_t> projective_orders(std::int64_t p) {
    using M = std::array<std::int64_t, 4>;
    auto mm = [p](const M& x, const M& y) {
        return M{(x[0] * y[0] + x[1] * y[2]) % p, (x[0] * y[1] + x[1] * y[3]) % p,
                 (x[2] * y[0] + x[3] * y[2]) % p, (x[2] * y[1] + x[3] * y[3]) % p};
    };
    std::map<std::int64_t, std::int64_t> out;
    for (std::int64_t e = 0; e < p * p * p * p; ++e) {
        const M a{e % p, e / p % p, e / (p * p) % p, e / (p * p * p)};
        const std::int64_t lead = a[0] ? a[0] : a[1] ? a[1] : a[2] ? a[2] : a[3];
        if (lead != 1 || (a[0] * a[3] - a[1] * a[2]) % p == 0) continue;
        M pw = a;
        std::int64_t k = 1;
        while (!(pw[1] == 0 && pw[2] == 0 && pw[0] == pw[3])) {
            pw = mm(pw, a);
            ++k;
        }
        ++out[k];
    }
    return out;
}

} // namespace oracle
