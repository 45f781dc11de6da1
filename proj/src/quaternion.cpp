#include "hurwitz/quaternion.hpp"

#include "hurwitz/errors.hpp"
#include "hurwitz/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

namespace hurwitz {

namespace {

using Coord = HurwitzInt::Coord;
__extension__ using Wide = __int128;

Coord checked_add(Coord x, Coord y) {
    Coord r;
    if (__builtin_add_overflow(x, y, &r)) throw OverflowError("quaternion coordinate overflow in addition");
    return r;
}

Coord checked_sub(Coord x, Coord y) {
    Coord r;
    if (__builtin_sub_overflow(x, y, &r)) throw OverflowError("quaternion coordinate overflow in subtraction");
    return r;
}

Coord checked_mul(Coord x, Coord y) {
    Coord r;
    if (__builtin_mul_overflow(x, y, &r)) throw OverflowError("quaternion coordinate overflow in product");
    return r;
}

Coord dot4(Coord x0, Coord y0, Coord x1, Coord y1, Coord x2, Coord y2, Coord x3, Coord y3) {
    return checked_add(checked_add(checked_mul(x0, y0), checked_mul(x1, y1)),
                       checked_add(checked_mul(x2, y2), checked_mul(x3, y3)));
}

Coord isqrt(Coord n) {
    auto r = static_cast<Coord>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

} // namespace

HurwitzInt HurwitzInt::make(Coord a, Coord b, Coord c, Coord d) {
    const bool parity = (a & 1) != 0;
    if (((b & 1) != 0) != parity || ((c & 1) != 0) != parity || ((d & 1) != 0) != parity) {
        std::ostringstream msg;
        msg << "doubled coordinates [" << a << ',' << b << ',' << c << ',' << d
            << "] must all be even or all be odd";
        throw ParityError(msg.str());
    }
    return HurwitzInt(a, b, c, d);
}

HurwitzInt HurwitzInt::from_integer(Coord n) { return HurwitzInt(checked_mul(2, n), 0, 0, 0); }

HurwitzInt operator+(const HurwitzInt& x, const HurwitzInt& y) {
    // Sum of two elements of the order stays in the order, so the parity
    // invariant is preserved without re-checking.
    return HurwitzInt(checked_add(x.a_, y.a_), checked_add(x.b_, y.b_), checked_add(x.c_, y.c_),
                      checked_add(x.d_, y.d_));
}

HurwitzInt operator-(const HurwitzInt& x, const HurwitzInt& y) {
    return HurwitzInt(checked_sub(x.a_, y.a_), checked_sub(x.b_, y.b_), checked_sub(x.c_, y.c_),
                      checked_sub(x.d_, y.d_));
}

HurwitzInt operator-(const HurwitzInt& x) { return HurwitzInt() - x; }

HurwitzInt operator*(const HurwitzInt& x, const HurwitzInt& y) {
    // Hamilton product of the doubled vectors is 4·(xy); halve to get 2·(xy).
    const Coord r = dot4(x.a_, y.a_, -x.b_, y.b_, -x.c_, y.c_, -x.d_, y.d_);
    const Coord i = dot4(x.a_, y.b_, x.b_, y.a_, x.c_, y.d_, -x.d_, y.c_);
    const Coord j = dot4(x.a_, y.c_, -x.b_, y.d_, x.c_, y.a_, x.d_, y.b_);
    const Coord k = dot4(x.a_, y.d_, x.b_, y.c_, -x.c_, y.b_, x.d_, y.a_);
    if ((r | i | j | k) & 1) throw InvariantViolation("Hurwitz order not closed under product");
    return HurwitzInt::make(r / 2, i / 2, j / 2, k / 2);
}

HurwitzInt conj(const HurwitzInt& x) { return HurwitzInt::make(x.a2(), -x.b2(), -x.c2(), -x.d2()); }

std::int64_t norm(const HurwitzInt& x) {
    const Coord sum = dot4(x.a2(), x.a2(), x.b2(), x.b2(), x.c2(), x.c2(), x.d2(), x.d2());
    return sum / 4;
}

std::int64_t trace(const HurwitzInt& x) { return x.a2(); }

const std::vector<HurwitzInt>& units() {
    static const std::vector<HurwitzInt> all = elements_of_norm(1);
    return all;
}

std::vector<HurwitzInt> elements_of_norm(std::int64_t n) {
    std::vector<HurwitzInt> out;
    if (n < 0) return out;
    if (n == 0) return {HurwitzInt()};
    const Coord target = checked_mul(4, n);
    const Coord bound = isqrt(target);
    for (Coord a = -bound; a <= bound; ++a) {
        const Coord ra = target - a * a;
        const Coord bb = isqrt(ra);
        for (Coord b = -bb; b <= bb; ++b) {
            if (((a ^ b) & 1) != 0) continue;
            const Coord rb = ra - b * b;
            const Coord cb = isqrt(rb);
            for (Coord c = -cb; c <= cb; ++c) {
                if (((a ^ c) & 1) != 0) continue;
                const Coord rc = rb - c * c;
                const Coord d = isqrt(rc);
                if (d * d != rc || ((a ^ d) & 1) != 0) continue;
                out.push_back(HurwitzInt::make(a, b, c, -d));
                if (d != 0) out.push_back(HurwitzInt::make(a, b, c, d));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

DivMod right_divmod(const HurwitzInt& a, const HurwitzInt& b) {
    if (b.is_zero()) throw DivideByZero("right division by the zero quaternion");

    // Target quotient in doubled coordinates is num/nb, num = doubled(a·conj(b)).
    const HurwitzInt prod = a * conj(b);
    const std::array<Coord, 4> num = prod.doubled();
    const Coord nb = norm(b);

    // Per coordinate: two even and two odd doubled values bracketing num/nb.
    std::array<std::array<Coord, 2>, 4> even{}, odd{};
    for (std::size_t t = 0; t < 4; ++t) {
        const Coord e = 2 * floor_div(num[t], 2 * nb);
        const Coord o = 2 * floor_div(num[t] - nb, 2 * nb) + 1;
        even[t] = {e, e + 2};
        odd[t] = {o, o + 2};
    }

    std::optional<HurwitzInt> best;
    Wide best_dist = 0;
    auto consider = [&](const std::array<std::array<Coord, 2>, 4>& corners) {
        for (unsigned mask = 0; mask < 16; ++mask) {
            std::array<Coord, 4> cand{};
            Wide dist = 0;
            for (std::size_t t = 0; t < 4; ++t) {
                cand[t] = corners[t][(mask >> t) & 1U];
                const Wide delta = static_cast<Wide>(cand[t]) * nb - num[t];
                dist += delta * delta;
            }
            const HurwitzInt q = HurwitzInt::make(cand);
            if (!best || dist < best_dist || (dist == best_dist && q < *best)) {
                best = q;
                best_dist = dist;
            }
        }
    };
    consider(even);
    consider(odd);

    const HurwitzInt remainder = a - (*best) * b;
    if (norm(remainder) >= nb) throw InvariantViolation("division remainder not smaller than divisor");
    return {*best, remainder};
}

HurwitzInt gcrd(const HurwitzInt& a, const HurwitzInt& b) {
    if (a.is_zero() && b.is_zero()) throw ZeroInput("gcrd of two zero quaternions");
    HurwitzInt x = a;
    HurwitzInt y = b;
    while (!y.is_zero()) {
        HurwitzInt r = right_divmod(x, y).remainder;
        x = y;
        y = r;
    }
    return canonical_rep(x);
}

std::optional<HurwitzInt> exact_scalar_quotient(const HurwitzInt& h, std::int64_t n) {
    if (n == 0) throw DivideByZero("division of a quaternion by zero");
    std::array<Coord, 4> d = h.doubled();
    for (Coord& c : d) {
        if (c % n != 0) return std::nullopt;
        c /= n;
    }
    if (((d[0] ^ d[1]) | (d[0] ^ d[2]) | (d[0] ^ d[3])) & 1) return std::nullopt;
    return HurwitzInt::make(d);
}

std::optional<HurwitzInt> exact_right_quotient(const HurwitzInt& a, const HurwitzInt& d) {
    if (d.is_zero()) throw DivideByZero("right division by the zero quaternion");
    // a = x·d  <=>  x = a·conj(d)/N(d)
    return exact_scalar_quotient(a * conj(d), norm(d));
}

HurwitzInt canonical_rep(const HurwitzInt& h) {
    if (h.is_zero()) throw ZeroInput("zero has no associate class");
    HurwitzInt best = units().front() * h;
    for (const HurwitzInt& u : units()) best = std::min(best, u * h);
    return best;
}

bool is_prime(const HurwitzInt& h) { return is_rational_prime(norm(h)); }

PrimeClass::PrimeClass(const HurwitzInt& h) : rep_(), p_(norm(h)) {
    if (!is_rational_prime(p_))
        throw NonPrimeNorm("norm of " + to_string(h) + " is " + std::to_string(p_) + ", not prime");
    rep_ = canonical_rep(h);
}

std::vector<PrimeClass> primes_of_norm(std::int64_t p) {
    require_odd_prime(p);
    std::vector<PrimeClass> classes;
    for (const HurwitzInt& h : elements_of_norm(p)) {
        if (canonical_rep(h) == h) classes.emplace_back(h);
    }
    std::sort(classes.begin(), classes.end());
    if (classes.size() != static_cast<std::size_t>(p + 1))
        throw InvariantViolation("expected p+1 prime classes of norm " + std::to_string(p));
    return classes;
}

std::string to_string(const HurwitzInt& h) {
    std::ostringstream os;
    os << h;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const HurwitzInt& h) {
    return os << '[' << h.a2() << ',' << h.b2() << ',' << h.c2() << ',' << h.d2() << ']';
}

} // namespace hurwitz
