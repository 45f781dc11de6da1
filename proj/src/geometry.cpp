#include "hurwitz/geometry.hpp"

#include "hurwitz/errors.hpp"
#include "hurwitz/numtheory.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>
#include <utility>

namespace hurwitz {

ConicPoint::ConicPoint(Fp x, Fp y, Fp z) {
    if ((x * x + y * y + z * z).value() != 0) throw InvariantViolation("point is not on the conic");
    const Fp lead = !x.is_zero() ? x : !y.is_zero() ? y : z;
    if (lead.is_zero()) throw InvariantViolation("zero vector is not a projective point");
    const Fp s = lead.inverse();
    x_ = s * x;
    y_ = s * y;
    z_ = s * z;
}

ConicPoint ConicPoint::from_pure(const QuotQuat& t) {
    if (!t.c1.is_zero()) throw InvariantViolation("conic points come from pure quaternions");
    return ConicPoint(t.ci, t.cj, t.ck);
}

QuotQuat ConicPoint::as_pure() const { return {Fp(0, modulus()), x_, y_, z_}; }

HurwitzInt ConicPoint::lift() const { return HurwitzInt::make(0, 2 * x_.value(), 2 * y_.value(), 2 * z_.value()); }

std::string to_string(const ConicPoint& c) {
    std::ostringstream os;
    os << c.x() << ':' << c.y() << ':' << c.z();
    return os.str();
}

ProjPoint::ProjPoint(Fp x, Fp y) {
    if (x.is_zero()) {
        if (y.is_zero()) throw InvariantViolation("zero vector is not a projective point");
        x_ = x;
        y_ = Fp(1, y.modulus());
    } else {
        x_ = Fp(1, x.modulus());
        y_ = y / x;
    }
}

std::string to_string(const ProjPoint& pt) {
    std::ostringstream os;
    os << '[' << pt.x() << ',' << pt.y() << ']';
    return os.str();
}

std::vector<ConicPoint> conic_points(std::int64_t p) {
    require_odd_prime(p);
    std::vector<ConicPoint> out;
    auto visit = [&](std::int64_t x, std::int64_t y, std::int64_t z) {
        if ((x * x + y * y + z * z) % p == 0) out.emplace_back(Fp(x, p), Fp(y, p), Fp(z, p));
    };
    visit(0, 0, 1);
    for (std::int64_t z = 0; z < p; ++z) visit(0, 1, z);
    for (std::int64_t y = 0; y < p; ++y)
        for (std::int64_t z = 0; z < p; ++z) visit(1, y, z);
    std::sort(out.begin(), out.end());
    if (out.size() != static_cast<std::size_t>(p + 1))
        throw InvariantViolation("conic over F_" + std::to_string(p) + " does not have p+1 points");
    return out;
}

namespace {

// Reduced row echelon basis of the span of the given vectors in F_p^4.
std::vector<QuotQuat> span_basis(const std::vector<QuotQuat>& gens) {
    std::vector<std::array<Fp, 4>> rows;
    for (const QuotQuat& g : gens) rows.push_back(g.coords());
    std::size_t rank = 0;
    for (std::size_t col = 0; col < 4 && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const Fp scale = rows[rank][col].inverse();
        for (Fp& e : rows[rank]) e = e * scale;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            const Fp factor = rows[r][col];
            for (std::size_t c = 0; c < 4; ++c) rows[r][c] = rows[r][c] - factor * rows[rank][c];
        }
        ++rank;
    }
    std::vector<QuotQuat> basis;
    for (std::size_t r = 0; r < rank; ++r) basis.push_back({rows[r][0], rows[r][1], rows[r][2], rows[r][3]});
    return basis;
}

} // namespace

ConicPoint trace_zero_rep(const PrimeClass& cls) {
    const std::int64_t p = cls.p();
    require_odd_prime(p);
    const QuotQuat pbar = reduce(cls.rep(), p);
    const Fp one(1, p), zero(0, p);

    // The left ideal is spanned by 1·P̄, i·P̄, j·P̄, k·P̄ and has dimension 2.
    const std::vector<QuotQuat> ideal = span_basis({
        pbar,
        QuotQuat{zero, one, zero, zero} * pbar,
        QuotQuat{zero, zero, one, zero} * pbar,
        QuotQuat{zero, zero, zero, one} * pbar,
    });
    if (ideal.size() != 2) throw InvariantViolation("reduced prime ideal is not two-dimensional");

    const Fp t0 = trace(ideal[0]);
    const Fp t1 = trace(ideal[1]);
    QuotQuat t = t0.is_zero() ? ideal[0] : t1.is_zero() ? ideal[1] : t1 * ideal[0] - t0 * ideal[1];
    if (!norm(t).is_zero()) throw InvariantViolation("trace-zero element of prime ideal has nonzero norm");
    return ConicPoint::from_pure(t);
}

PrimeClass conic_to_prime(const ConicPoint& c) {
    const std::int64_t p = c.modulus();
    const HurwitzInt d = gcrd(c.lift(), HurwitzInt::from_integer(p));
    if (norm(d) != p) throw InvariantViolation("gcrd of conic lift and p does not have norm p");
    return PrimeClass(d);
}

ProjPoint conic_to_proj(const ConicPoint& c, const TwoSquareRep& rep) {
    const FpMat2 m = phi(c.as_pure(), rep);
    // Members of D: trace zero, determinant zero, nonzero.
    if (!mat2_trace(m).is_zero() || !mat2_det(m).is_zero())
        throw InvariantViolation("image of a conic point is not a trace-zero nilpotent matrix");
    if (m.a3.is_zero()) {
        if (!m.a4.is_zero() || m.a2.is_zero()) throw InvariantViolation("degenerate nilpotent image");
        return ProjPoint(Fp(0, c.modulus()), Fp(1, c.modulus()));
    }
    return ProjPoint(m.a3, m.a4);
}

ProjPoint pgl2_act(const ProjPoint& pt, const FpMat2& a) {
    if (mat2_det(a).is_zero()) throw SingularMatrix("projective action needs an invertible matrix");
    return ProjPoint(a.a1 * pt.x() + a.a3 * pt.y(), a.a2 * pt.x() + a.a4 * pt.y());
}

} // namespace hurwitz
