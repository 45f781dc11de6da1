#include "hurwitz/metacomm.hpp"

#include "hurwitz/errors.hpp"
#include "hurwitz/modp.hpp"
#include "hurwitz/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace hurwitz {

namespace {

void require_coprime(std::int64_t p, const HurwitzInt& Q) {
    const std::int64_t q = norm(Q);
    if (q == 0 || q % p == 0)
        throw CoprimalityError("N(Q) = " + std::to_string(q) + " is not coprime to p = " + std::to_string(p));
}


} // namespace

MetaQuery MetaQuery::make(std::int64_t p, const HurwitzInt& Q) {
    require_odd_prime(p);
    require_coprime(p, Q);
    return {p, Q, norm(Q), reduce(Q, p).is_scalar()};
}

PrimeClass meta_divide(const PrimeClass& cls, const HurwitzInt& Q) {
    const std::int64_t p = cls.p();
    require_coprime(p, Q);
    const HurwitzInt pq = cls.rep() * Q;
    const PrimeClass image(gcrd(pq, HurwitzInt::from_integer(p)));
    if (image.p() != p || !exact_right_quotient(pq, image.rep()))
        throw InvariantViolation("metacommutation divisor does not right-divide PQ");
    return image;
}

PrimeClass meta_conj(const PrimeClass& cls, const HurwitzInt& Q) {
    const std::int64_t p = cls.p();
    require_odd_prime(p);
    require_coprime(p, Q);
    const QuotQuat qbar = reduce(Q, p);
    const QuotQuat t = trace_zero_rep(cls).as_pure();
    return conic_to_prime(ConicPoint::from_pure(inverse(qbar) * t * qbar));
}

HurwitzInt meta_cofactor(const PrimeClass& cls, const HurwitzInt& Q, const PrimeClass& image) {
    const HurwitzInt pq = cls.rep() * Q;
    auto cofactor = exact_scalar_quotient(pq * conj(image.rep()), image.p());
    if (!cofactor || (*cofactor) * image.rep() != pq)
        throw InvariantViolation("P·Q·conj(P')/p is not a Hurwitz integer");
    return *cofactor;
}

Permutation meta_permutation(const MetaQuery& query) {
    const std::int64_t p = query.p;
    require_coprime(p, query.Q);
    Permutation perm{p, conic_points(p), {}};
    const TwoSquareRep rep = two_square_rep(p);
    const FpMat2 action = phi(reduce(query.Q, p), rep);

    std::map<ProjPoint, std::size_t> by_proj;
    std::vector<ProjPoint> proj;
    for (std::size_t idx = 0; idx < perm.ground.size(); ++idx) {
        proj.push_back(conic_to_proj(perm.ground[idx], rep));
        if (!by_proj.emplace(proj.back(), idx).second)
            throw InvariantViolation("conic to projective line map is not injective");
    }
    perm.images.reserve(proj.size());
    for (const ProjPoint& pt : proj) {
        auto it = by_proj.find(pgl2_act(pt, action));
        if (it == by_proj.end()) throw InvariantViolation("projective image outside the ground set");
        perm.images.push_back(it->second);
    }
    return perm;
}

PermReport analyze(const Permutation& perm) {
    const std::size_t n = perm.images.size();
    PermReport report;
    std::vector<bool> seen(n, false);
    std::size_t even_cycles = 0;
    for (std::size_t start = 0; start < n; ++start) {
        if (seen[start]) continue;
        std::vector<std::size_t> cycle;
        for (std::size_t cur = start; !seen[cur]; cur = perm.images.at(cur)) {
            seen[cur] = true;
            cycle.push_back(cur);
        }
        if (cycle.size() % 2 == 0) ++even_cycles;
        if (cycle.size() == 1) {
            ++report.fixed_count;
        } else {
            report.cycle_lengths.push_back(cycle.size());
            report.cycles.push_back(std::move(cycle));
        }
    }
    std::sort(report.cycle_lengths.begin(), report.cycle_lengths.end());
    report.sign = even_cycles % 2 == 0 ? 1 : -1;
    report.uniform_length = report.cycle_lengths.empty() ||
                            report.cycle_lengths.front() == report.cycle_lengths.back();
    return report;
}

Prediction predict(const MetaQuery& query) {
    if (!is_rational_prime(query.q))
        throw NonPrimeNorm("predictions need N(Q) prime, got " + std::to_string(query.q));
    const std::int64_t p = query.p;
    const std::int64_t tr = trace(query.Q);
    Prediction out;
    out.sign = legendre(query.q, p);
    out.fixed = query.central ? p + 1 : 1 + legendre(tr * tr - 4 * query.q, p);
    return out;
}

std::int64_t order_count(std::int64_t k, std::int64_t p) {
    require_odd_prime(p);
    if (k <= 1) throw Error("order_count needs k > 1");
    if (k == p) return p * p - 1;
    std::int64_t count = 0;
    if ((p + 1) % k == 0) count += totient(k) * p * (p - 1) / 2;
    if ((p - 1) % k == 0) count += totient(k) * p * (p + 1) / 2;
    return count;
}

std::map<std::int64_t, std::int64_t> pgl2_order_census(std::int64_t p) {
    require_odd_prime(p);
    if (p > 13) throw ScaleLimit("projective group census is limited to p <= 13");

    std::vector<ProjPoint> line{ProjPoint(Fp(0, p), Fp(1, p))};
    for (std::int64_t m = 0; m < p; ++m) line.emplace_back(Fp(1, p), Fp(m, p));
    std::map<ProjPoint, std::size_t> index;
    for (std::size_t i = 0; i < line.size(); ++i) index.emplace(line[i], i);

    std::map<std::int64_t, std::int64_t> census;
    for (std::int64_t a1 = 0; a1 < p; ++a1)
        for (std::int64_t a2 = 0; a2 < p; ++a2)
            for (std::int64_t a3 = 0; a3 < p; ++a3)
                for (std::int64_t a4 = 0; a4 < p; ++a4) {
                    // One representative per scalar class: first nonzero entry is 1.
                    const std::int64_t lead = a1 != 0 ? a1 : a2 != 0 ? a2 : a3 != 0 ? a3 : a4;
                    if (lead != 1) continue;
                    const FpMat2 a = FpMat2::from_ints(a1, a2, a3, a4, p);
                    if (mat2_det(a).is_zero()) continue;
                    Permutation perm{p, {}, {}};
                    for (const ProjPoint& pt : line) perm.images.push_back(index.at(pgl2_act(pt, a)));
                    const PermReport report = analyze(perm);
                    std::int64_t order = 1;
                    for (std::size_t len : report.cycle_lengths)
                        order = std::lcm(order, static_cast<std::int64_t>(len));
                    ++census[order];
                }
    return census;
}

} // namespace hurwitz
