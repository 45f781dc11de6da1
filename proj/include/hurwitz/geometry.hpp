#pragma once

// The conic x² + y² + z² = 0 in P²(F_p), its bijection with prime classes of
// norm p, and its identification with P¹(F_p) through the splitting map.

#include "hurwitz/modp.hpp"
#include "hurwitz/quaternion.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace hurwitz {

/// A point (x : y : z) of the conic, scaled so its first nonzero coordinate is 1.
class ConicPoint {
public:
    /// Normalizes; throws InvariantViolation if the point is zero or off the conic.
    ConicPoint(Fp x, Fp y, Fp z);

    /// The point carried by a nonzero pure element xi + yj + zk of H/pH.
    static ConicPoint from_pure(const QuotQuat& t);

    Fp x() const { return x_; }
    Fp y() const { return y_; }
    Fp z() const { return z_; }
    std::int64_t modulus() const { return x_.modulus(); }

    /// xi + yj + zk in H/pH.
    QuotQuat as_pure() const;
    /// xi + yj + zk as a Hurwitz integer with coordinates in [0, p).
    HurwitzInt lift() const;

    friend auto operator<=>(const ConicPoint&, const ConicPoint&) = default;

private:
    Fp x_, y_, z_;
};

/// "x:y:z"
std::string to_string(const ConicPoint& c);

/// A point of P¹(F_p) in one of the forms ⟨0,1⟩ or ⟨1,m⟩.
class ProjPoint {
public:
    /// Canonicalizes ⟨x,y⟩; throws InvariantViolation for ⟨0,0⟩.
    ProjPoint(Fp x, Fp y);

    Fp x() const { return x_; }
    Fp y() const { return y_; }

    friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;

private:
    Fp x_, y_;
};

/// "[x,y]"
std::string to_string(const ProjPoint& pt);

/// All p+1 conic points, sorted lexicographically. Throws UnsupportedPrime for p = 2.
std::vector<ConicPoint> conic_points(std::int64_t p);

/// The unique trace-zero line t_P in the reduced left ideal (H/pH)·P̄, as a conic point.
ConicPoint trace_zero_rep(const PrimeClass& cls);

/// Inverse of trace_zero_rep: the class of gcrd(lift(c), p).
PrimeClass conic_to_prime(const ConicPoint& c);

/// Reads the row space of the nilpotent matrix phi(xi + yj + zk) as a point of P¹.
ProjPoint conic_to_proj(const ConicPoint& c, const TwoSquareRep& rep);

/// Right action ⟨x,y⟩ ∗ A = ⟨a1·x + a3·y, a2·x + a4·y⟩. Throws SingularMatrix.
ProjPoint pgl2_act(const ProjPoint& pt, const FpMat2& a);

} // namespace hurwitz
