#pragma once

// Exact arithmetic in the Hurwitz order Z[i, j, (1+i+j+k)/2].
//
// Elements are stored in doubled coordinates: the value (A + Bi + Cj + Dk)/2
// with A, B, C, D all even (Lipschitz part) or all odd (half-integer part).
// Every operation is exact; intermediate products are overflow-checked.

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hurwitz {

class HurwitzInt {
public:
    using Coord = std::int64_t;

    /// The zero quaternion.
    constexpr HurwitzInt() = default;

    /// (a + bi + cj + dk)/2; throws ParityError unless a ≡ b ≡ c ≡ d (mod 2).
    static HurwitzInt make(Coord a, Coord b, Coord c, Coord d);
    static HurwitzInt make(const std::array<Coord, 4>& doubled) {
        return make(doubled[0], doubled[1], doubled[2], doubled[3]);
    }
    /// The rational integer n.
    static HurwitzInt from_integer(Coord n);

    static HurwitzInt one() { return from_integer(1); }
    static HurwitzInt i() { return make(0, 2, 0, 0); }
    static HurwitzInt j() { return make(0, 0, 2, 0); }
    static HurwitzInt k() { return make(0, 0, 0, 2); }
    /// (1 + i + j + k)/2
    static HurwitzInt omega() { return make(1, 1, 1, 1); }

    // Doubled coordinates.
    constexpr Coord a2() const { return a_; }
    constexpr Coord b2() const { return b_; }
    constexpr Coord c2() const { return c_; }
    constexpr Coord d2() const { return d_; }
    constexpr std::array<Coord, 4> doubled() const { return {a_, b_, c_, d_}; }

    constexpr bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }
    /// True when all four components are integers (the Lipschitz suborder).
    constexpr bool is_lipschitz() const { return (a_ & 1) == 0; }

    // Lexicographic on (A, B, C, D); used for canonical representatives.
    friend constexpr auto operator<=>(const HurwitzInt&, const HurwitzInt&) = default;

    friend HurwitzInt operator+(const HurwitzInt& x, const HurwitzInt& y);
    friend HurwitzInt operator-(const HurwitzInt& x, const HurwitzInt& y);
    friend HurwitzInt operator-(const HurwitzInt& x);
    /// Hamilton product.
    friend HurwitzInt operator*(const HurwitzInt& x, const HurwitzInt& y);

private:
    constexpr HurwitzInt(Coord a, Coord b, Coord c, Coord d) : a_(a), b_(b), c_(c), d_(d) {}

    Coord a_ = 0;
    Coord b_ = 0;
    Coord c_ = 0;
    Coord d_ = 0;
};

HurwitzInt conj(const HurwitzInt& x);
std::int64_t norm(const HurwitzInt& x);
/// x + conj(x), i.e. twice the real part; an integer for every Hurwitz element.
std::int64_t trace(const HurwitzInt& x);

/// The 24 units, sorted lexicographically by doubled coordinates.
const std::vector<HurwitzInt>& units();

/// Every Hurwitz integer of norm n, sorted lexicographically.
std::vector<HurwitzInt> elements_of_norm(std::int64_t n);

struct DivMod {
    HurwitzInt quotient;
    HurwitzInt remainder;
};

/// a = quotient·b + remainder with N(remainder) < N(b).
///
/// The quotient is a Hurwitz point nearest to a·b⁻¹ = a·conj(b)/N(b); among
/// the 16 integer and 16 half-integer lattice corners around the target,
/// equal distances resolve to the lexicographically least doubled coordinates.
DivMod right_divmod(const HurwitzInt& a, const HurwitzInt& b);

/// Greatest common right divisor by the right-division Euclidean loop,
/// returned as the canonical left-associate. Throws ZeroInput if both are 0.
HurwitzInt gcrd(const HurwitzInt& a, const HurwitzInt& b);

/// x with a = x·d, if such a Hurwitz integer exists.
std::optional<HurwitzInt> exact_right_quotient(const HurwitzInt& a, const HurwitzInt& d);

/// h/n for a nonzero rational integer n, if the result is a Hurwitz integer.
std::optional<HurwitzInt> exact_scalar_quotient(const HurwitzInt& h, std::int64_t n);

/// Lexicographic minimum of the left-unit orbit {u·h}. Throws ZeroInput for 0.
HurwitzInt canonical_rep(const HurwitzInt& h);

/// True iff N(h) is a rational prime.
bool is_prime(const HurwitzInt& h);

/// A left-associate class of Hurwitz primes, held by its canonical representative.
class PrimeClass {
public:
    /// Canonicalizes h; throws NonPrimeNorm unless N(h) is prime.
    explicit PrimeClass(const HurwitzInt& h);

    const HurwitzInt& rep() const { return rep_; }
    std::int64_t p() const { return p_; }

    friend auto operator<=>(const PrimeClass& x, const PrimeClass& y) { return x.rep_ <=> y.rep_; }
    friend bool operator==(const PrimeClass& x, const PrimeClass& y) { return x.rep_ == y.rep_; }

private:
    HurwitzInt rep_;
    std::int64_t p_;
};

/// All p+1 classes of primes of norm p (p an odd prime), sorted by representative.
std::vector<PrimeClass> primes_of_norm(std::int64_t p);

/// "[A,B,C,D]" in doubled coordinates.
std::string to_string(const HurwitzInt& h);
std::ostream& operator<<(std::ostream& os, const HurwitzInt& h);

} // namespace hurwitz
