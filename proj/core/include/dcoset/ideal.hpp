#pragma once

// Fractional ideals of o as Z-lattices in canonical Hermite normal form:
// sums, products, inverses, norms, prime factorization, residue
// transversals, CRT and strong generators.

#include <string>
#include <utility>
#include <vector>

#include "dcoset/ring.hpp"

namespace dcoset {

struct PrimeFactor;

// Full-rank Z-lattice in K over the basis {1, omega}, stored as an upper
// triangular column HNF [[b00, b01], [0, b11]] with positive diagonal and
// 0 <= b01 < b00, together with a positive denominator; the gcd of all
// basis entries and the denominator is 1. Two ideals are equal iff their
// stored fields are identical. For the Z descriptor the lattice
// degenerates to (b00/den)*Z with b01 = 0 and b11 = den.
class FractionalIdeal {
public:
    static FractionalIdeal unit_ideal(const Ring& ring);
    static FractionalIdeal from_generators(const Ring& ring, const std::vector<FieldElement>& gens);
    static FractionalIdeal principal(const FieldElement& g);
    static FractionalIdeal principal(const RingElement& g);
    // Raw HNF constructor; validates canonical form and o-module closure.
    static FractionalIdeal from_hnf(const Ring& ring, Int b00, Int b01, Int b11, Int den);

    const Ring& ring() const { return ring_; }
    const Int& basis00() const { return b00_; }
    const Int& basis01() const { return b01_; }
    const Int& basis11() const { return b11_; }
    const Int& den() const { return den_; }

    bool is_integral() const { return den_ == 1; }
    bool is_unit_ideal() const;

    // |det(basis)| / den^2; equals |o/a| for integral a.
    Rat norm() const;

    bool contains(const FieldElement& e) const;
    bool contains(const RingElement& e) const { return contains(FieldElement(e)); }
    // this | other, i.e. other is contained in this.
    bool divides(const FractionalIdeal& other) const;

    FractionalIdeal operator+(const FractionalIdeal& o) const;  // lattice sum = ideal gcd
    FractionalIdeal operator*(const FractionalIdeal& o) const;
    FractionalIdeal inverse() const;
    FractionalIdeal pow(long e) const;

    std::vector<PrimeFactor> factor() const;

    bool operator==(const FractionalIdeal& o) const {
        return ring_ == o.ring_ && b00_ == o.b00_ && b01_ == o.b01_ && b11_ == o.b11_ &&
               den_ == o.den_;
    }
    bool operator!=(const FractionalIdeal& o) const { return !(*this == o); }
    // Canonical ordering for deterministic enumeration; same ring assumed.
    bool operator<(const FractionalIdeal& o) const;

    std::string str() const;

private:
    FractionalIdeal(Ring ring, Int b00, Int b01, Int b11, Int den);

    Ring ring_;
    Int b00_, b01_, b11_, den_;
};

struct PrimeFactor {
    FractionalIdeal prime;  // maximal ideal
    long exponent;          // v_p of the factored ideal, nonzero
    Int residue_norm;       // N(p), either p or p^2
    Int above;              // rational prime below p
};

// v_p(a) for a prime ideal p (works for fractional a).
long valuation(const FractionalIdeal& a, const FractionalIdeal& prime);

// All integral divisors of an integral ideal, canonically ordered.
std::vector<FractionalIdeal> divisors(const FractionalIdeal& a);

// Transversal of a/b for b contained in a; exactly N(b)/N(a) elements,
// pairwise incongruent mod b, in Smith-normal-form coordinate
// lexicographic order.
std::vector<FieldElement> residue_transversal(const FractionalIdeal& a, const FractionalIdeal& b);

// Solves x = r_i mod m_i for pairwise coprime integral moduli; returns the
// canonical representative inside a fundamental domain of the product.
RingElement crt_solve(const std::vector<std::pair<RingElement, FractionalIdeal>>& congruences);

// Element a of the integral ideal a_ideal with a*o + m = a_ideal, for
// a_ideal | m; equivalently v_p(a) = v_p(a_ideal) for every p | m.
RingElement strong_generator(const FractionalIdeal& a_ideal, const FractionalIdeal& m);

}  // namespace dcoset
