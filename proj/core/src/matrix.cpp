#include "dcoset/matrix.hpp"

#include <vector>

#include "intmath.hpp"
#include "lattice.hpp"

namespace dcoset {

using detail::Col;
using detail::divexact;
using detail::lcm;

Mat2::Mat2(FieldElement a, FieldElement b, FieldElement c, FieldElement d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    check_same_ring(a_.ring(), b_.ring());
    check_same_ring(a_.ring(), c_.ring());
    check_same_ring(a_.ring(), d_.ring());
}

Mat2 Mat2::identity(const Ring& ring) {
    return Mat2(FieldElement::one(ring), FieldElement::zero(ring), FieldElement::zero(ring),
                FieldElement::one(ring));
}

Mat2 Mat2::from_ring_elements(const RingElement& a, const RingElement& b, const RingElement& c,
                              const RingElement& d) {
    return Mat2(FieldElement(a), FieldElement(b), FieldElement(c), FieldElement(d));
}

FieldElement Mat2::det() const { return a_ * d_ - b_ * c_; }

Mat2 Mat2::operator*(const Mat2& o) const {
    check_same_ring(ring(), o.ring());
    return Mat2(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_, c_ * o.a_ + d_ * o.c_,
                c_ * o.b_ + d_ * o.d_);
}

Mat2 Mat2::inverse() const {
    FieldElement dt = det();
    if (dt.is_zero()) throw std::domain_error("Mat2::inverse: determinant is zero");
    return Mat2(d_ / dt, -b_ / dt, -c_ / dt, a_ / dt);
}

bool Mat2::is_zero() const {
    return a_.is_zero() && b_.is_zero() && c_.is_zero() && d_.is_zero();
}

bool Mat2::is_integral() const {
    return a_.is_integral() && b_.is_integral() && c_.is_integral() && d_.is_integral();
}

bool Mat2::operator<(const Mat2& o) const {
    auto key = [](const FieldElement& e) {
        return std::array<const Int*, 3>{&e.den(), &e.num().x(), &e.num().y()};
    };
    for (auto [lhs, rhs] : {std::pair{&a_, &o.a_}, {&b_, &o.b_}, {&c_, &o.c_}, {&d_, &o.d_}}) {
        auto kl = key(*lhs), kr = key(*rhs);
        for (int i = 0; i < 3; ++i) {
            int c = cmp(*kl[i], *kr[i]);
            if (c != 0) return c < 0;
        }
    }
    return false;
}

MembershipFlags classify(const Mat2& m) {
    bool integral = m.is_integral();
    if (!integral) return {false, false, false};
    FieldElement dt = m.det();
    bool in_i = !dt.is_zero();
    bool in_u = in_i && dt.as_ring_element().is_unit();
    return {true, in_i, in_u};
}

CosetInvariants invariants(const Mat2& m) {
    if (!m.is_integral()) throw std::domain_error("invariants: matrix is not integral");
    if (m.is_zero()) throw std::domain_error("invariants: zero matrix");
    const Ring& ring = m.ring();

    FractionalIdeal delta1 =
        FractionalIdeal::from_generators(ring, {m.a(), m.b(), m.c(), m.d()});
    std::optional<FractionalIdeal> g;
    if (!(m.a().is_zero() && m.c().is_zero()))
        g = FractionalIdeal::from_generators(ring, {m.a(), m.c()});

    FieldElement dt = m.det();
    if (dt.is_zero()) return CosetInvariants{1, delta1, {}, {}, {}, g};

    FractionalIdeal delta2 = FractionalIdeal::principal(dt);
    FractionalIdeal d1_inv = delta1.inverse();
    FractionalIdeal e2 = delta2 * d1_inv;
    FractionalIdeal f2 = e2 * d1_inv;
    if (!delta1.divides(e2))
        throw std::logic_error("invariants: elementary divisor chain violated");
    if (g && (!delta1.divides(*g) || !g->divides(delta2)))
        throw std::logic_error("invariants: delta1 | g | delta2 violated");
    return CosetInvariants{2, delta1, delta2, e2, f2, g};
}

bool same_right_coset(const Mat2& a, const Mat2& b) {
    check_same_ring(a.ring(), b.ring());
    auto fa = classify(a), fb = classify(b);
    if (!fa.in_i || !fb.in_i) throw std::domain_error("same_right_coset: inputs must be in I");
    return classify(b * a.inverse()).in_u;
}

bool same_double_coset(const Mat2& a, const Mat2& b) {
    check_same_ring(a.ring(), b.ring());
    CosetInvariants ia = invariants(a), ib = invariants(b);
    if (ia.rank != ib.rank) throw std::domain_error("same_double_coset: mixed ranks");
    if (ia.rank == 2) return ia.delta1 == ib.delta1 && *ia.delta2 == *ib.delta2;
    if (!ia.g || !ib.g)
        throw std::domain_error("same_double_coset: rank-1 input with zero first column");
    return ia.delta1 == ib.delta1 && *ia.g == *ib.g;
}

namespace {

// s, t in g^-1 with s*a + t*b = 1, where g = a*o + b*o.
std::pair<FieldElement, FieldElement> bezout_in_inverse(const RingElement& a,
                                                        const RingElement& b) {
    const Ring& ring = a.ring();
    if (b.is_zero()) return {FieldElement(a).inverse(), FieldElement::zero(ring)};
    if (a.is_zero()) return {FieldElement::zero(ring), FieldElement(b).inverse()};

    if (ring.is_z()) {
        auto e = detail::gcd_ext(a.x(), b.x());
        return {FieldElement(RingElement(ring, e.s), e.g), FieldElement(RingElement(ring, e.t), e.g)};
    }

    FractionalIdeal g = FractionalIdeal::from_generators(ring, {FieldElement(a), FieldElement(b)});
    FractionalIdeal ginv = g.inverse();
    FractionalIdeal ia = FractionalIdeal::principal(a) * ginv;
    FractionalIdeal ib = FractionalIdeal::principal(b) * ginv;
    // a*g^-1 + b*g^-1 = o: express 1 in the column lattice of both ideals
    Int m = lcm(ia.den(), ib.den());
    Int as = divexact(m, ia.den()), bs = divexact(m, ib.den());
    std::vector<Col> cols{Col{ia.basis00() * as, Int(0)}, Col{ia.basis01() * as, ia.basis11() * as},
                          Col{ib.basis00() * bs, Int(0)},
                          Col{ib.basis01() * bs, ib.basis11() * bs}};
    auto coeffs = detail::express_in_cols(cols, Col{m, Int(0)});
    if (!coeffs) throw std::logic_error("complete_unimodular: unit not reachable in g*g^-1");

    FieldElement w1(RingElement(ring, ia.basis00(), 0) * (*coeffs)[0] +
                        RingElement(ring, ia.basis01(), ia.basis11()) * (*coeffs)[1],
                    ia.den());
    FieldElement w2(RingElement(ring, ib.basis00(), 0) * (*coeffs)[2] +
                        RingElement(ring, ib.basis01(), ib.basis11()) * (*coeffs)[3],
                    ib.den());
    return {w1 / FieldElement(a), w2 / FieldElement(b)};
}

// C = (a, -t; b, s) with det 1, the column completion of (a, b).
Mat2 column_completion(const RingElement& a, const RingElement& b) {
    auto [s, t] = bezout_in_inverse(a, b);
    return Mat2(FieldElement(a), -t, FieldElement(b), s);
}

}  // namespace

Mat2 complete_unimodular(const RingElement& a, const RingElement& b, const RingElement& c,
                         const RingElement& d) {
    const Ring& ring = a.ring();
    check_same_ring(ring, b.ring());
    check_same_ring(ring, c.ring());
    check_same_ring(ring, d.ring());

    if (a.is_zero() && b.is_zero()) {
        if (!c.is_zero() || !d.is_zero())
            throw std::domain_error("complete_unimodular: zero pair with nonzero target");
        return Mat2::identity(ring);
    }
    if (c.is_zero() && d.is_zero())
        throw std::domain_error("complete_unimodular: nonzero pair with zero target");

    FractionalIdeal gab =
        FractionalIdeal::from_generators(ring, {FieldElement(a), FieldElement(b)});
    FractionalIdeal gcd_cd =
        FractionalIdeal::from_generators(ring, {FieldElement(c), FieldElement(d)});
    if (gab != gcd_cd)
        throw std::domain_error("complete_unimodular: generator ideals differ");

    Mat2 cab = column_completion(a, b);
    Mat2 ccd = column_completion(c, d);
    // cab has det 1, so its inverse is the adjugate
    Mat2 cab_inv(cab.d(), -cab.b(), -cab.c(), cab.a());
    Mat2 r = ccd * cab_inv;

    if (!classify(r).in_u || r.det() != FieldElement::one(ring))
        throw std::logic_error("complete_unimodular: result is not special unimodular");
    FieldElement ra = r.a() * FieldElement(a) + r.b() * FieldElement(b);
    FieldElement rc = r.c() * FieldElement(a) + r.d() * FieldElement(b);
    if (ra != FieldElement(c) || rc != FieldElement(d))
        throw std::logic_error("complete_unimodular: image mismatch");
    return r;
}

}  // namespace dcoset
