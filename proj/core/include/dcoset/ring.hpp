#pragma once

// Exact arithmetic in o = Z + Z*omega (the ring of integers of Q(sqrt(d))
// for squarefree d, with Z as the degenerate case) and in its fraction
// field K. All values are immutable; operations are pure.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace dcoset {

using Int = mpz_class;
using Rat = mpq_class;

enum class OmegaKind {
    none,  // the ring Z; omega coordinates are identically zero
    sqrt,  // omega = sqrt(d), d = 2, 3 mod 4
    half,  // omega = (1 + sqrt(d))/2, d = 1 mod 4
};

class Ring {
public:
    static Ring integers();
    // Maximal order of Q(sqrt(d)); d must be squarefree and not 0 or 1.
    static Ring quadratic(const Int& d);

    bool is_z() const { return kind_ == OmegaKind::none; }
    OmegaKind omega_kind() const { return kind_; }
    const Int& d() const;

    // omega^2 = omega_sq_c0() + omega_sq_c1() * omega
    const Int& omega_sq_c0() const;
    int omega_sq_c1() const { return kind_ == OmegaKind::half ? 1 : 0; }

    // Field discriminant: d for d = 1 mod 4, else 4d.
    Int discriminant() const;

    bool operator==(const Ring& other) const {
        return kind_ == other.kind_ && d_ == other.d_;
    }
    bool operator!=(const Ring& other) const { return !(*this == other); }

    std::string str() const;  // "Z" or "Q(sqrt,d)"

private:
    Ring(OmegaKind kind, Int d, Int c0) : kind_(kind), d_(std::move(d)), omega_sq_c0_(std::move(c0)) {}

    OmegaKind kind_;
    Int d_;
    Int omega_sq_c0_;
};

void check_same_ring(const Ring& a, const Ring& b);

// Element x + y*omega of o. For the Z descriptor y is always zero.
class RingElement {
public:
    RingElement(Ring ring, Int x, Int y = 0);

    const Ring& ring() const { return ring_; }
    const Int& x() const { return x_; }
    const Int& y() const { return y_; }

    bool is_zero() const { return x_ == 0 && y_ == 0; }

    RingElement operator+(const RingElement& o) const;
    RingElement operator-(const RingElement& o) const;
    RingElement operator*(const RingElement& o) const;
    RingElement operator-() const;
    RingElement operator*(const Int& k) const;
    bool operator==(const RingElement& o) const {
        return ring_ == o.ring_ && x_ == o.x_ && y_ == o.y_;
    }
    bool operator!=(const RingElement& o) const { return !(*this == o); }

    RingElement conj() const;

    // Field norm u * conj(u) as a rational integer. For the Z descriptor
    // the norm is the (signed) element itself; absolute values are applied
    // at the ideal level.
    Int norm() const;
    Int trace() const;
    bool is_unit() const;

    static RingElement zero(const Ring& ring) { return RingElement(ring, 0); }
    static RingElement one(const Ring& ring) { return RingElement(ring, 1); }
    static RingElement omega(const Ring& ring);

private:
    Ring ring_;
    Int x_, y_;
};

// Exact division in o: w with u = v * w, if it exists.
std::optional<RingElement> try_divide(const RingElement& u, const RingElement& v);

// Element of K = Frac(o), stored as num/den in lowest terms with den > 0:
// no rational prime divides den together with both coordinates of num.
class FieldElement {
public:
    explicit FieldElement(RingElement num, Int den = 1);

    const Ring& ring() const { return num_.ring(); }
    const RingElement& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integral() const { return den_ == 1; }
    // Requires den == 1.
    RingElement as_ring_element() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inverse() const;
    bool operator==(const FieldElement& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    static FieldElement zero(const Ring& ring) { return FieldElement(RingElement::zero(ring)); }
    static FieldElement one(const Ring& ring) { return FieldElement(RingElement::one(ring)); }

private:
    RingElement num_;
    Int den_;
};

}  // namespace dcoset
