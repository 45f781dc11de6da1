#include "hurwitz/modp.hpp"

#include "hurwitz/errors.hpp"
#include "hurwitz/numtheory.hpp"

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace hurwitz {

namespace {

std::int64_t common_modulus(std::int64_t p, std::int64_t q) {
    if (p != q)
        throw ModulusMismatch("operands reduced modulo " + std::to_string(p) + " and " + std::to_string(q));
    return p;
}

} // namespace

Fp::Fp(std::int64_t n, std::int64_t p) : value_(0), modulus_(p) {
    if (p < 2 || p >= (std::int64_t{1} << 31)) throw UnsupportedPrime("modulus out of range: " + std::to_string(p));
    value_ = mod_floor(n, p);
}

Fp Fp::inverse() const {
    if (value_ == 0) throw DivideByZero("zero has no inverse modulo " + std::to_string(modulus_));
    // Extended Euclid on (value, modulus).
    std::int64_t r0 = modulus_, r1 = value_, s0 = 0, s1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        r0 = std::exchange(r1, r0 - q * r1);
        s0 = std::exchange(s1, s0 - q * s1);
    }
    if (r0 != 1) throw DivideByZero("value not invertible modulo " + std::to_string(modulus_));
    return Fp(s0, modulus_);
}

Fp Fp::pow(std::uint64_t e) const {
    Fp result(1, modulus_);
    Fp base = *this;
    while (e != 0) {
        if (e & 1U) result = result * base;
        base = base * base;
        e >>= 1U;
    }
    return result;
}

Fp operator+(Fp x, Fp y) { return Fp(x.value_ + y.value_, common_modulus(x.modulus_, y.modulus_)); }
Fp operator-(Fp x, Fp y) { return Fp(x.value_ - y.value_, common_modulus(x.modulus_, y.modulus_)); }
Fp operator-(Fp x) { return Fp(-x.value_, x.modulus_); }
Fp operator*(Fp x, Fp y) { return Fp(x.value_ * y.value_, common_modulus(x.modulus_, y.modulus_)); }

std::ostream& operator<<(std::ostream& os, Fp x) { return os << x.value(); }

QuotQuat operator+(const QuotQuat& x, const QuotQuat& y) {
    return {x.c1 + y.c1, x.ci + y.ci, x.cj + y.cj, x.ck + y.ck};
}

QuotQuat operator-(const QuotQuat& x, const QuotQuat& y) {
    return {x.c1 - y.c1, x.ci - y.ci, x.cj - y.cj, x.ck - y.ck};
}

QuotQuat operator*(const QuotQuat& x, const QuotQuat& y) {
    return {
        x.c1 * y.c1 - x.ci * y.ci - x.cj * y.cj - x.ck * y.ck,
        x.c1 * y.ci + x.ci * y.c1 + x.cj * y.ck - x.ck * y.cj,
        x.c1 * y.cj - x.ci * y.ck + x.cj * y.c1 + x.ck * y.ci,
        x.c1 * y.ck + x.ci * y.cj - x.cj * y.ci + x.ck * y.c1,
    };
}

QuotQuat operator*(Fp s, const QuotQuat& x) { return {s * x.c1, s * x.ci, s * x.cj, s * x.ck}; }

QuotQuat conj(const QuotQuat& x) { return {x.c1, -x.ci, -x.cj, -x.ck}; }

Fp norm(const QuotQuat& x) { return x.c1 * x.c1 + x.ci * x.ci + x.cj * x.cj + x.ck * x.ck; }

Fp trace(const QuotQuat& x) { return x.c1 + x.c1; }

QuotQuat inverse(const QuotQuat& x) {
    const Fp n = norm(x);
    if (n.is_zero()) throw DivideByZero("element of H/pH with zero norm is not invertible");
    return n.inverse() * conj(x);
}

QuotQuat reduce(const HurwitzInt& h, std::int64_t p) {
    require_odd_prime(p);
    const Fp half = Fp(2, p).inverse();
    return {half * Fp(h.a2(), p), half * Fp(h.b2(), p), half * Fp(h.c2(), p), half * Fp(h.d2(), p)};
}

FpMat2 operator+(const FpMat2& m, const FpMat2& n) { return {m.a1 + n.a1, m.a2 + n.a2, m.a3 + n.a3, m.a4 + n.a4}; }

FpMat2 operator*(const FpMat2& m, const FpMat2& n) {
    return {
        m.a1 * n.a1 + m.a2 * n.a3,
        m.a1 * n.a2 + m.a2 * n.a4,
        m.a3 * n.a1 + m.a4 * n.a3,
        m.a3 * n.a2 + m.a4 * n.a4,
    };
}

FpMat2 operator*(Fp s, const FpMat2& m) { return {s * m.a1, s * m.a2, s * m.a3, s * m.a4}; }

Fp mat2_det(const FpMat2& m) { return m.a1 * m.a4 - m.a2 * m.a3; }

Fp mat2_trace(const FpMat2& m) { return m.a1 + m.a4; }

FpMat2 mat2_inv(const FpMat2& m) {
    const Fp det = mat2_det(m);
    if (det.is_zero()) throw SingularMatrix("matrix has zero determinant modulo " + std::to_string(m.modulus()));
    return det.inverse() * FpMat2{m.a4, -m.a2, -m.a3, m.a1};
}

std::ostream& operator<<(std::ostream& os, const FpMat2& m) {
    return os << "[[" << m.a1 << ',' << m.a2 << "],[" << m.a3 << ',' << m.a4 << "]]";
}

TwoSquareRep two_square_rep(std::int64_t p) {
    require_odd_prime(p);
    // root[s] holds the least r ≥ 0 with r² ≡ s, or -1 if s is a non-residue.
    std::vector<std::int64_t> root(static_cast<std::size_t>(p), -1);
    for (std::int64_t r = p - 1; r >= 0; --r) root[static_cast<std::size_t>(r * r % p)] = r;
    for (std::int64_t a = 0; a < p; ++a) {
        const std::int64_t target = mod_floor(-1 - a * a, p);
        const std::int64_t b = root[static_cast<std::size_t>(target)];
        if (b >= 0) return {Fp(a, p), Fp(b, p)};
    }
    throw InvariantViolation("no two-square representation of -1 modulo " + std::to_string(p));
}

FpMat2 phi(const QuotQuat& g, const TwoSquareRep& rep) {
    common_modulus(g.modulus(), rep.modulus());
    const Fp& a = rep.a;
    const Fp& b = rep.b;
    return {
        g.c1 + g.ci * a + g.ck * b,
        g.cj + g.ck * a - g.ci * b,
        -g.cj + g.ck * a - g.ci * b,
        g.c1 - g.ci * a - g.ck * b,
    };
}

QuotQuat phi_inv(const FpMat2& m, const TwoSquareRep& rep) {
    const std::int64_t p = common_modulus(m.modulus(), rep.modulus());

    // Augmented system: column t holds the entries of phi(e_t), last column the target.
    std::array<std::array<Fp, 5>, 4> sys{};
    for (std::size_t t = 0; t < 4; ++t) {
        QuotQuat basis = QuotQuat::zero(p);
        std::array<Fp*, 4> slots{&basis.c1, &basis.ci, &basis.cj, &basis.ck};
        *slots[t] = Fp(1, p);
        const std::array<Fp, 4> col = phi(basis, rep).entries();
        for (std::size_t row = 0; row < 4; ++row) sys[row][t] = col[row];
    }
    const std::array<Fp, 4> rhs = m.entries();
    for (std::size_t row = 0; row < 4; ++row) sys[row][4] = rhs[row];

    for (std::size_t col = 0; col < 4; ++col) {
        std::size_t pivot = col;
        while (pivot < 4 && sys[pivot][col].is_zero()) ++pivot;
        if (pivot == 4) throw InvariantViolation("splitting map is not bijective");
        std::swap(sys[col], sys[pivot]);
        const Fp scale = sys[col][col].inverse();
        for (Fp& e : sys[col]) e = e * scale;
        for (std::size_t row = 0; row < 4; ++row) {
            if (row == col || sys[row][col].is_zero()) continue;
            const Fp factor = sys[row][col];
            for (std::size_t c = 0; c < 5; ++c) sys[row][c] = sys[row][c] - factor * sys[col][c];
        }
    }
    return {sys[0][4], sys[1][4], sys[2][4], sys[3][4]};
}

int legendre(std::int64_t n, std::int64_t p) {
    require_odd_prime(p);
    const std::int64_t r = mod_floor(n, p);
    if (r == 0) return 0;
    std::vector<bool> square(static_cast<std::size_t>(p), false);
    for (std::int64_t x = 1; x < p; ++x) square[static_cast<std::size_t>(x * x % p)] = true;
    return square[static_cast<std::size_t>(r)] ? 1 : -1;
}

} // namespace hurwitz
