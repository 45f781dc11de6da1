#pragma once

// The metacommutation map P ↦ P' defined by PQ = Q'P', computed three ways:
//   - meta_divide: P' is the class of gcrd(PQ, p) (division algorithm),
//   - meta_conj: t_P' = Q̄⁻¹ t_P Q̄ in H/pH,
//   - meta_permutation: the right action of phi(Q̄) on P¹(F_p).
// plus cycle analytics and the closed forms for sign, fixed points and the
// element-order census of the projective group.

#include "hurwitz/geometry.hpp"
#include "hurwitz/quaternion.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

namespace hurwitz {

/// A metacommuting element Q against primes of norm p.
struct MetaQuery {
    std::int64_t p = 0;
    HurwitzInt Q;
    std::int64_t q = 0;    ///< N(Q)
    bool central = false;  ///< Q̄ lies in F_p

    /// Validates p (odd prime) and gcd(N(Q), p) = 1; throws CoprimalityError otherwise.
    static MetaQuery make(std::int64_t p, const HurwitzInt& Q);
};

PrimeClass meta_divide(const PrimeClass& cls, const HurwitzInt& Q);
PrimeClass meta_conj(const PrimeClass& cls, const HurwitzInt& Q);

/// Q' = P·Q·conj(P')/p, so that P·Q = Q'·P' holds exactly for the
/// representatives. Throws InvariantViolation if the quotient is not exact.
HurwitzInt meta_cofactor(const PrimeClass& cls, const HurwitzInt& Q, const PrimeClass& image);

/// A permutation of the conic points, indexed by their lexicographic order.
struct Permutation {
    std::int64_t p = 0;
    std::vector<ConicPoint> ground;
    std::vector<std::size_t> images;  ///< ground[i] ↦ ground[images[i]]
};

Permutation meta_permutation(const MetaQuery& query);

struct PermReport {
    int sign = 1;
    std::size_t fixed_count = 0;
    std::vector<std::size_t> cycle_lengths;  ///< non-trivial cycles only, ascending
    bool uniform_length = true;
    std::vector<std::vector<std::size_t>> cycles;  ///< non-trivial cycles, each led by its least index
};

PermReport analyze(const Permutation& perm);

struct Prediction {
    int sign = 1;
    std::int64_t fixed = 0;
};

/// Legendre-symbol predictions for sign and fixed points; needs N(Q) prime
/// (throws NonPrimeNorm otherwise).
Prediction predict(const MetaQuery& query);

/// Number of elements of order k > 1 in the projective group over F_p. When k
/// divides both p+1 and p-1 (only k = 2) the two branch counts are added.
std::int64_t order_count(std::int64_t k, std::int64_t p);

/// Element orders of the projective group tallied by brute force over all
/// p(p²-1) elements acting on P¹. Throws ScaleLimit above p = 13.
std::map<std::int64_t, std::int64_t> pgl2_order_census(std::int64_t p);

} // namespace hurwitz
