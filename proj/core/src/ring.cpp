#include "dcoset/ring.hpp"

#include "intmath.hpp"

namespace dcoset {

using detail::divexact;
using detail::divisible;
using detail::gcd;
using detail::mod_pos;

Ring Ring::integers() { return Ring(OmegaKind::none, Int(0), Int(0)); }

Ring Ring::quadratic(const Int& d) {
    if (d == 0 || d == 1) throw std::domain_error("Ring::quadratic: d must not be 0 or 1");
    for (const auto& [p, e] : detail::factor_integer(abs(d)))
        if (e > 1) throw std::domain_error("Ring::quadratic: d must be squarefree");
    Int m = mod_pos(d, Int(4));
    if (m == 1) return Ring(OmegaKind::half, d, divexact(d - 1, Int(4)));
    return Ring(OmegaKind::sqrt, d, d);
}

const Int& Ring::d() const {
    if (is_z()) throw std::domain_error("Ring::d: the ring Z has no d");
    return d_;
}

const Int& Ring::omega_sq_c0() const {
    if (is_z()) throw std::domain_error("Ring::omega_sq_c0: invalid for Z");
    return omega_sq_c0_;
}

Int Ring::discriminant() const {
    if (is_z()) throw std::domain_error("Ring::discriminant: invalid for Z");
    return kind_ == OmegaKind::half ? d_ : Int(4 * d_);
}

std::string Ring::str() const {
    if (is_z()) return "Z";
    return "Q(sqrt," + d_.get_str() + ")";
}

void check_same_ring(const Ring& a, const Ring& b) {
    if (a != b) throw std::domain_error("ring descriptor mismatch");
}

RingElement::RingElement(Ring ring, Int x, Int y)
    : ring_(std::move(ring)), x_(std::move(x)), y_(std::move(y)) {
    if (ring_.is_z() && y_ != 0)
        throw std::domain_error("RingElement: omega coordinate must vanish over Z");
}

RingElement RingElement::operator+(const RingElement& o) const {
    check_same_ring(ring_, o.ring_);
    return RingElement(ring_, x_ + o.x_, y_ + o.y_);
}

RingElement RingElement::operator-(const RingElement& o) const {
    check_same_ring(ring_, o.ring_);
    return RingElement(ring_, x_ - o.x_, y_ - o.y_);
}

RingElement RingElement::operator*(const RingElement& o) const {
    check_same_ring(ring_, o.ring_);
    if (ring_.is_z()) return RingElement(ring_, x_ * o.x_);
    // (x1 + y1 w)(x2 + y2 w) with w^2 = c0 + c1 w
    Int cross = x_ * o.y_ + y_ * o.x_;
    Int yy = y_ * o.y_;
    Int x = x_ * o.x_ + yy * ring_.omega_sq_c0();
    Int y = cross + (ring_.omega_sq_c1() ? yy : Int(0));
    return RingElement(ring_, std::move(x), std::move(y));
}

RingElement RingElement::operator-() const { return RingElement(ring_, -x_, -y_); }

RingElement RingElement::operator*(const Int& k) const {
    return RingElement(ring_, x_ * k, y_ * k);
}

RingElement RingElement::conj() const {
    if (ring_.is_z()) return *this;
    if (ring_.omega_kind() == OmegaKind::sqrt) return RingElement(ring_, x_, -y_);
    return RingElement(ring_, x_ + y_, -y_);  // conj(w) = 1 - w
}

Int RingElement::norm() const {
    if (ring_.is_z()) return x_;
    if (ring_.omega_kind() == OmegaKind::sqrt) return x_ * x_ - ring_.d() * y_ * y_;
    return x_ * x_ + x_ * y_ - ring_.omega_sq_c0() * y_ * y_;
}

Int RingElement::trace() const {
    if (ring_.omega_kind() == OmegaKind::half) return 2 * x_ + y_;
    return 2 * x_;
}

bool RingElement::is_unit() const { return abs(norm()) == 1; }

RingElement RingElement::omega(const Ring& ring) {
    if (ring.is_z()) throw std::domain_error("RingElement::omega: invalid for Z");
    return RingElement(ring, 0, 1);
}

std::optional<RingElement> try_divide(const RingElement& u, const RingElement& v) {
    check_same_ring(u.ring(), v.ring());
    if (v.is_zero()) throw std::domain_error("try_divide: division by zero");
    if (u.ring().is_z()) {
        if (!divisible(u.x(), v.x())) return std::nullopt;
        return RingElement(u.ring(), divexact(u.x(), v.x()));
    }
    RingElement w = u * v.conj();
    Int n = v.norm();
    if (!divisible(w.x(), n) || !divisible(w.y(), n)) return std::nullopt;
    return RingElement(u.ring(), divexact(w.x(), n), divexact(w.y(), n));
}

FieldElement::FieldElement(RingElement num, Int den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::domain_error("FieldElement: zero denominator");
    if (den_ < 0) {
        den_ = -den_;
        num_ = -num_;
    }
    Int g = gcd(gcd(num_.x(), num_.y()), den_);
    if (g > 1) {
        num_ = RingElement(num_.ring(), divexact(num_.x(), g), divexact(num_.y(), g));
        den_ = divexact(den_, g);
    }
}

RingElement FieldElement::as_ring_element() const {
    if (den_ != 1) throw std::domain_error("FieldElement: not integral");
    return num_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    return FieldElement(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    return FieldElement(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    return FieldElement(num_ * o.num_, den_ * o.den_);
}

FieldElement FieldElement::operator-() const { return FieldElement(-num_, den_); }

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw std::domain_error("FieldElement::inverse: zero element");
    if (ring().is_z()) return FieldElement(RingElement(ring(), den_), num_.x());
    return FieldElement(num_.conj() * den_, num_.norm());
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    return *this * o.inverse();
}

}  // namespace dcoset
