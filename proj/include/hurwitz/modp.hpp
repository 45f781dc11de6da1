#pragma once

// The quotient algebra H/pH for odd p and its splitting into 2×2 matrices
// over F_p. Every value carries its modulus; mixing moduli throws
// ModulusMismatch.

#include "hurwitz/quaternion.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>

namespace hurwitz {

/// An element of F_p, stored as its least non-negative residue.
class Fp {
public:
    Fp() = default;
    /// n mod p for any integer n; p must be ≥ 2 and below 2^31.
    Fp(std::int64_t n, std::int64_t p);

    std::int64_t value() const { return value_; }
    std::int64_t modulus() const { return modulus_; }
    bool is_zero() const { return value_ == 0; }

    /// Multiplicative inverse; throws DivideByZero for 0.
    Fp inverse() const;
    Fp pow(std::uint64_t e) const;

    friend Fp operator+(Fp x, Fp y);
    friend Fp operator-(Fp x, Fp y);
    friend Fp operator-(Fp x);
    friend Fp operator*(Fp x, Fp y);
    friend Fp operator/(Fp x, Fp y) { return x * y.inverse(); }

    friend auto operator<=>(const Fp&, const Fp&) = default;

private:
    std::int64_t value_ = 0;
    std::int64_t modulus_ = 0;
};

std::ostream& operator<<(std::ostream& os, Fp x);

/// Element c1 + ci·i + cj·j + ck·k of H/pH.
struct QuotQuat {
    Fp c1, ci, cj, ck;

    static QuotQuat zero(std::int64_t p) { return {Fp(0, p), Fp(0, p), Fp(0, p), Fp(0, p)}; }
    static QuotQuat scalar(Fp s) { return {s, Fp(0, s.modulus()), Fp(0, s.modulus()), Fp(0, s.modulus())}; }

    std::int64_t modulus() const { return c1.modulus(); }
    bool is_zero() const { return c1.is_zero() && ci.is_zero() && cj.is_zero() && ck.is_zero(); }
    /// True when the i, j, k coordinates vanish (a central element).
    bool is_scalar() const { return ci.is_zero() && cj.is_zero() && ck.is_zero(); }
    std::array<Fp, 4> coords() const { return {c1, ci, cj, ck}; }

    friend bool operator==(const QuotQuat&, const QuotQuat&) = default;
};

QuotQuat operator+(const QuotQuat& x, const QuotQuat& y);
QuotQuat operator-(const QuotQuat& x, const QuotQuat& y);
QuotQuat operator*(const QuotQuat& x, const QuotQuat& y);
QuotQuat operator*(Fp s, const QuotQuat& x);
QuotQuat conj(const QuotQuat& x);
Fp norm(const QuotQuat& x);
Fp trace(const QuotQuat& x);
/// conj(x)/N(x); throws DivideByZero when N(x) ≡ 0.
QuotQuat inverse(const QuotQuat& x);

/// Reduction of a Hurwitz integer mod p, folding the halves with 2⁻¹.
QuotQuat reduce(const HurwitzInt& h, std::int64_t p);

/// Row-major [[a1, a2], [a3, a4]] over F_p.
struct FpMat2 {
    Fp a1, a2, a3, a4;

    static FpMat2 identity(std::int64_t p) { return {Fp(1, p), Fp(0, p), Fp(0, p), Fp(1, p)}; }
    static FpMat2 from_ints(std::int64_t a1, std::int64_t a2, std::int64_t a3, std::int64_t a4, std::int64_t p) {
        return {Fp(a1, p), Fp(a2, p), Fp(a3, p), Fp(a4, p)};
    }

    std::int64_t modulus() const { return a1.modulus(); }
    std::array<Fp, 4> entries() const { return {a1, a2, a3, a4}; }

    friend bool operator==(const FpMat2&, const FpMat2&) = default;
};

FpMat2 operator+(const FpMat2& m, const FpMat2& n);
FpMat2 operator*(const FpMat2& m, const FpMat2& n);
FpMat2 operator*(Fp s, const FpMat2& m);
Fp mat2_det(const FpMat2& m);
Fp mat2_trace(const FpMat2& m);
/// Throws SingularMatrix when the determinant vanishes.
FpMat2 mat2_inv(const FpMat2& m);
std::ostream& operator<<(std::ostream& os, const FpMat2& m);

/// A pair with a² + b² ≡ −1 (mod p).
struct TwoSquareRep {
    Fp a, b;
    std::int64_t modulus() const { return a.modulus(); }
    friend bool operator==(const TwoSquareRep&, const TwoSquareRep&) = default;
};

/// Smallest a ≥ 0 for which −1 − a² is a square, then the smallest root b ≥ 0.
TwoSquareRep two_square_rep(std::int64_t p);

/// The splitting isomorphism H/pH → M₂(F_p) determined by (a, b):
///   1 ↦ I,  i ↦ [[a, −b], [−b, −a]],  j ↦ [[0, 1], [−1, 0]],  k ↦ [[b, a], [a, −b]].
FpMat2 phi(const QuotQuat& g, const TwoSquareRep& rep);

/// Inverse of phi, by solving the 4×4 linear system in the images of 1, i, j, k.
QuotQuat phi_inv(const FpMat2& m, const TwoSquareRep& rep);

/// Legendre symbol (n/p) for odd prime p, from a table of squares.
int legendre(std::int64_t n, std::int64_t p);

} // namespace hurwitz
