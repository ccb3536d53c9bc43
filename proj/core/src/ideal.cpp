#include "dcoset/ideal.hpp"

#include <algorithm>
#include <array>

#include "intmath.hpp"
#include "lattice.hpp"

namespace dcoset {

using detail::Col;
using detail::divexact;
using detail::divisible;
using detail::gcd;
using detail::gcd_ext;
using detail::lcm;
using detail::mod_pos;

namespace {

// omega * (x + y*omega) in coordinates.
Col omega_mul(const Ring& ring, const Int& x, const Int& y) {
    return Col{ring.omega_sq_c0() * y, x + (ring.omega_sq_c1() ? y : Int(0))};
}

}  // namespace

FractionalIdeal::FractionalIdeal(Ring ring, Int b00, Int b01, Int b11, Int den)
    : ring_(std::move(ring)),
      b00_(std::move(b00)),
      b01_(std::move(b01)),
      b11_(std::move(b11)),
      den_(std::move(den)) {
    Int g = gcd(gcd(b00_, b01_), gcd(b11_, den_));
    if (g > 1) {
        b00_ = divexact(b00_, g);
        b01_ = divexact(b01_, g);
        b11_ = divexact(b11_, g);
        den_ = divexact(den_, g);
    }
    b01_ = mod_pos(b01_, b00_);
}

FractionalIdeal FractionalIdeal::unit_ideal(const Ring& ring) {
    return FractionalIdeal(ring, 1, 0, 1, 1);
}

bool FractionalIdeal::is_unit_ideal() const {
    return b00_ == 1 && b01_ == 0 && b11_ == 1 && den_ == 1;
}

FractionalIdeal FractionalIdeal::from_generators(const Ring& ring,
                                                 const std::vector<FieldElement>& gens) {
    Int den(1);
    std::vector<FieldElement> nonzero;
    for (const auto& g : gens) {
        check_same_ring(ring, g.ring());
        if (g.is_zero()) continue;
        nonzero.push_back(g);
        den = lcm(den, g.den());
    }
    if (nonzero.empty())
        throw std::domain_error("FractionalIdeal::from_generators: all generators zero");

    if (ring.is_z()) {
        Int n(0);
        for (const auto& g : nonzero) n = gcd(n, g.num().x() * divexact(den, g.den()));
        n = abs(n);
        return FractionalIdeal(ring, n, 0, den, den);
    }

    std::vector<Col> cols;
    cols.reserve(2 * nonzero.size());
    for (const auto& g : nonzero) {
        Int scale = divexact(den, g.den());
        Int x = g.num().x() * scale, y = g.num().y() * scale;
        cols.push_back(Col{x, y});
        cols.push_back(omega_mul(ring, x, y));
    }
    auto h = detail::hnf2(cols);
    if (!h) throw std::logic_error("FractionalIdeal::from_generators: rank-deficient lattice");
    return FractionalIdeal(ring, h->a, h->b, h->c, den);
}

FractionalIdeal FractionalIdeal::principal(const FieldElement& g) {
    return from_generators(g.ring(), {g});
}

FractionalIdeal FractionalIdeal::principal(const RingElement& g) {
    return principal(FieldElement(g));
}

FractionalIdeal FractionalIdeal::from_hnf(const Ring& ring, Int b00, Int b01, Int b11, Int den) {
    if (b00 <= 0 || b11 <= 0 || den <= 0 || b01 < 0 || b01 >= b00)
        throw std::domain_error("FractionalIdeal::from_hnf: not in canonical HNF");
    Int g = gcd(gcd(b00, b01), gcd(b11, den));
    if (g != 1) throw std::domain_error("FractionalIdeal::from_hnf: content not reduced");
    FractionalIdeal result(ring, std::move(b00), std::move(b01), std::move(b11), std::move(den));
    if (ring.is_z()) {
        if (result.b01_ != 0 || result.b11_ != result.den_)
            throw std::domain_error("FractionalIdeal::from_hnf: not a Z ideal lattice");
        return result;
    }
    detail::Hnf2 h{result.b00_, result.b01_, result.b11_};
    Col w1 = omega_mul(ring, result.b00_, Int(0));
    Col w2 = omega_mul(ring, result.b01_, result.b11_);
    if (!detail::hnf_contains(h, w1.x, w1.y) || !detail::hnf_contains(h, w2.x, w2.y))
        throw std::domain_error("FractionalIdeal::from_hnf: lattice is not an o-module");
    return result;
}

Rat FractionalIdeal::norm() const {
    Rat n(abs(b00_ * b11_), den_ * den_);
    n.canonicalize();
    return n;
}

bool FractionalIdeal::contains(const FieldElement& e) const {
    check_same_ring(ring_, e.ring());
    if (e.is_zero()) return true;
    Int m = lcm(den_, e.den());
    Int escale = divexact(m, e.den());
    Int lscale = divexact(m, den_);
    Int x = e.num().x() * escale, y = e.num().y() * escale;
    if (ring_.is_z()) return y == 0 && divisible(x, b00_ * lscale);
    detail::Hnf2 h{b00_ * lscale, b01_ * lscale, b11_ * lscale};
    return detail::hnf_contains(h, x, y);
}

bool FractionalIdeal::divides(const FractionalIdeal& o) const {
    check_same_ring(ring_, o.ring_);
    if (ring_.is_z()) return divisible(o.b00_ * den_, b00_ * o.den_);
    Int m = lcm(den_, o.den_);
    Int tscale = divexact(m, den_), oscale = divexact(m, o.den_);
    detail::Hnf2 h{b00_ * tscale, b01_ * tscale, b11_ * tscale};
    return detail::hnf_contains(h, o.b00_ * oscale, Int(0)) &&
           detail::hnf_contains(h, o.b01_ * oscale, o.b11_ * oscale);
}

FractionalIdeal FractionalIdeal::operator+(const FractionalIdeal& o) const {
    check_same_ring(ring_, o.ring_);
    Int m = lcm(den_, o.den_);
    Int ts = divexact(m, den_), os = divexact(m, o.den_);
    if (ring_.is_z()) {
        Int n = gcd(b00_ * ts, o.b00_ * os);
        return FractionalIdeal(ring_, n, 0, m, m);
    }
    std::vector<Col> cols{Col{b00_ * ts, Int(0)}, Col{b01_ * ts, b11_ * ts},
                          Col{o.b00_ * os, Int(0)}, Col{o.b01_ * os, o.b11_ * os}};
    auto h = detail::hnf2(cols);
    if (!h) throw std::logic_error("FractionalIdeal::operator+: rank-deficient sum");
    return FractionalIdeal(ring_, h->a, h->b, h->c, m);
}

FractionalIdeal FractionalIdeal::operator*(const FractionalIdeal& o) const {
    check_same_ring(ring_, o.ring_);
    if (ring_.is_z()) {
        Int n = b00_ * o.b00_;
        Int m = den_ * o.den_;
        return FractionalIdeal(ring_, n, 0, m, m);
    }
    RingElement u1(ring_, b00_, 0), u2(ring_, b01_, b11_);
    RingElement v1(ring_, o.b00_, 0), v2(ring_, o.b01_, o.b11_);
    std::vector<Col> cols;
    for (const auto& p : {u1 * v1, u1 * v2, u2 * v1, u2 * v2}) cols.push_back(Col{p.x(), p.y()});
    auto h = detail::hnf2(cols);
    if (!h) throw std::logic_error("FractionalIdeal::operator*: rank-deficient product");
    return FractionalIdeal(ring_, h->a, h->b, h->c, den_ * o.den_);
}

FractionalIdeal FractionalIdeal::inverse() const {
    if (ring_.is_z()) return FractionalIdeal(ring_, den_, 0, b00_, b00_);
    // a^-1 = conj(a) / N(a), valid in the maximal order
    std::vector<Col> cols;
    for (const auto& v : {RingElement(ring_, b00_, 0), RingElement(ring_, b01_, b11_)}) {
        RingElement c = v.conj();
        cols.push_back(Col{c.x(), c.y()});
        Col w = omega_mul(ring_, c.x(), c.y());
        cols.push_back(w);
    }
    auto h = detail::hnf2(cols);
    if (!h) throw std::logic_error("FractionalIdeal::inverse: rank-deficient conjugate");
    Rat n = norm();  // scale conj(a)/den by 1/N(a)
    FractionalIdeal result(ring_, h->a * n.get_den(), h->b * n.get_den(), h->c * n.get_den(),
                           den_ * n.get_num());
    if (!(*this * result).is_unit_ideal())
        throw std::logic_error("FractionalIdeal::inverse: product is not the unit ideal");
    return result;
}

FractionalIdeal FractionalIdeal::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    FractionalIdeal result = unit_ideal(ring_);
    FractionalIdeal base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

bool FractionalIdeal::operator<(const FractionalIdeal& o) const {
    if (den_ != o.den_) return den_ < o.den_;
    if (b00_ != o.b00_) return b00_ < o.b00_;
    if (b11_ != o.b11_) return b11_ < o.b11_;
    return b01_ < o.b01_;
}

std::string FractionalIdeal::str() const {
    return "[[" + b00_.get_str() + "," + b01_.get_str() + "],[0," + b11_.get_str() + "]]/" +
           den_.get_str();
}

namespace {

// Distinct prime ideals above a rational prime p, with N(p).
struct PrimeAbove {
    FractionalIdeal prime;
    Int residue_norm;
};

std::vector<PrimeAbove> primes_above(const Ring& ring, const Int& p) {
    const RingElement w = RingElement::omega(ring);
    const RingElement pe(ring, p);
    auto gen2 = [&](const Int& r) {
        return FractionalIdeal::from_generators(
            ring, {FieldElement(pe), FieldElement(w - RingElement(ring, r))});
    };
    const Int d = ring.d();
    if (ring.omega_kind() == OmegaKind::sqrt) {
        if (p == 2) {
            // x^2 - d = (x - d)^2 mod 2: always ramified
            return {{gen2(mod_pos(d, p)), p}};
        }
        Int a = mod_pos(d, p);
        if (a == 0) return {{gen2(Int(0)), p}};
        auto r = detail::sqrt_mod_prime(a, p);
        if (!r) return {{FractionalIdeal::principal(pe), p * p}};
        if (*r == p - *r) return {{gen2(*r), p}};
        return {{gen2(*r), p}, {gen2(p - *r), p}};
    }
    // omega = (1 + sqrt(d))/2, minimal polynomial x^2 - x - (d-1)/4
    if (p == 2) {
        if (mod_pos(ring.omega_sq_c0(), Int(2)) == 0)
            return {{gen2(Int(0)), p}, {gen2(Int(1)), p}};   // d = 1 mod 8
        return {{FractionalIdeal::principal(pe), p * p}};  // d = 5 mod 8
    }
    Int disc = mod_pos(d, p);
    Int inv2;
    mpz_invert(inv2.get_mpz_t(), Int(2).get_mpz_t(), p.get_mpz_t());
    if (disc == 0) return {{gen2(mod_pos(inv2, p)), p}};
    auto s = detail::sqrt_mod_prime(disc, p);
    if (!s) return {{FractionalIdeal::principal(pe), p * p}};
    Int r1 = mod_pos((1 + *s) * inv2, p);
    Int r2 = mod_pos((1 - *s) * inv2, p);
    if (r1 == r2) return {{gen2(r1), p}};
    return {{gen2(r1), p}, {gen2(r2), p}};
}

// Valuation of an integral ideal at a prime, by exact divide-out.
long valuation_integral(const FractionalIdeal& a, const FractionalIdeal& prime,
                        const FractionalIdeal& prime_inv) {
    long e = 0;
    FractionalIdeal cur = a;
    while (prime.divides(cur)) {
        cur = cur * prime_inv;
        ++e;
    }
    return e;
}

void merge_factor(std::vector<PrimeFactor>& out, const FractionalIdeal& prime, long exponent,
                  const Int& residue_norm, const Int& above) {
    if (exponent == 0) return;
    for (auto& f : out) {
        if (f.prime == prime) {
            f.exponent += exponent;
            return;
        }
    }
    out.push_back(PrimeFactor{prime, exponent, residue_norm, above});
}

void factor_integral_into(std::vector<PrimeFactor>& out, const FractionalIdeal& a, long sign) {
    const Ring& ring = a.ring();
    if (ring.is_z()) {
        for (const auto& [p, e] : detail::factor_integer(a.basis00()))
            merge_factor(out, FractionalIdeal::principal(RingElement(ring, p)), sign * e, p, p);
        return;
    }
    Rat n = a.norm();
    for (const auto& [p, e] : detail::factor_integer(n.get_num())) {
        long seen = 0;
        for (const auto& pa : primes_above(ring, p)) {
            long v = valuation_integral(a, pa.prime, pa.prime.inverse());
            if (v == 0) continue;
            long deg = (pa.residue_norm == p) ? 1 : 2;
            seen += v * deg;
            merge_factor(out, pa.prime, sign * v, pa.residue_norm, p);
        }
        if (seen != e)
            throw std::logic_error("FractionalIdeal::factor: valuations do not match the norm");
    }
}

}  // namespace

std::vector<PrimeFactor> FractionalIdeal::factor() const {
    std::vector<PrimeFactor> out;
    FractionalIdeal numerator(ring_, b00_, b01_, b11_, 1);
    if (ring_.is_z()) numerator = FractionalIdeal(ring_, b00_, 0, 1, 1);
    factor_integral_into(out, numerator, +1);
    if (den_ != 1)
        factor_integral_into(out, principal(RingElement(ring_, den_)), -1);
    std::erase_if(out, [](const PrimeFactor& f) { return f.exponent == 0; });
    std::sort(out.begin(), out.end(), [](const PrimeFactor& a, const PrimeFactor& b) {
        if (a.above != b.above) return a.above < b.above;
        return a.prime < b.prime;
    });
    return out;
}

long valuation(const FractionalIdeal& a, const FractionalIdeal& prime) {
    FractionalIdeal numerator(a.ring().is_z()
                                  ? FractionalIdeal::from_hnf(a.ring(), a.basis00(), 0, 1, 1)
                                  : FractionalIdeal::from_hnf(a.ring(), a.basis00(), a.basis01(),
                                                              a.basis11(), 1));
    FractionalIdeal prime_inv = prime.inverse();
    long v = valuation_integral(numerator, prime, prime_inv);
    if (a.den() != 1)
        v -= valuation_integral(FractionalIdeal::principal(RingElement(a.ring(), a.den())), prime,
                                prime_inv);
    return v;
}

std::vector<FractionalIdeal> divisors(const FractionalIdeal& a) {
    if (!a.is_integral()) throw std::domain_error("divisors: ideal must be integral");
    auto factors = a.factor();
    std::vector<FractionalIdeal> out{FractionalIdeal::unit_ideal(a.ring())};
    for (const auto& f : factors) {
        std::vector<FractionalIdeal> next;
        FractionalIdeal power = FractionalIdeal::unit_ideal(a.ring());
        for (long e = 0; e <= f.exponent; ++e) {
            for (const auto& d : out) next.push_back(d * power);
            if (e < f.exponent) power = power * f.prime;
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<FieldElement> residue_transversal(const FractionalIdeal& a, const FractionalIdeal& b) {
    check_same_ring(a.ring(), b.ring());
    if (!a.divides(b)) throw std::domain_error("residue_transversal: b is not contained in a");
    const Ring& ring = a.ring();
    Int m = lcm(a.den(), b.den());
    Int as = divexact(m, a.den()), bs = divexact(m, b.den());

    std::vector<FieldElement> out;
    if (ring.is_z()) {
        Int na = a.basis00() * as, nb = b.basis00() * bs;
        Int count = divexact(nb, na);
        for (Int i(0); i < count; ++i) out.emplace_back(RingElement(ring, na * i), m);
        return out;
    }

    std::array<Int, 4> ma{a.basis00() * as, a.basis01() * as, Int(0), a.basis11() * as};
    std::array<Int, 4> mb{b.basis00() * bs, b.basis01() * bs, Int(0), b.basis11() * bs};
    // x = ma^-1 * mb, integral by containment
    Int det = ma[0] * ma[3];
    std::array<Int, 4> adj{ma[3], -ma[1], Int(0), ma[0]};
    std::array<Int, 4> prod = detail::mat_mul2(adj, mb);
    std::array<Int, 4> x;
    for (int i = 0; i < 4; ++i) x[i] = divexact(prod[i], det);

    auto snf = detail::snf2(x);
    std::array<Int, 4> c = detail::mat_mul2(ma, snf.u_inv);
    for (Int i(0); i < snf.s1; ++i)
        for (Int j(0); j < snf.s2; ++j)
            out.emplace_back(RingElement(ring, c[0] * i + c[1] * j, c[2] * i + c[3] * j), m);
    return out;
}

namespace {

// Canonical representative of x modulo an integral ideal lattice.
RingElement reduce_mod(const RingElement& x, const FractionalIdeal& mod) {
    const Ring& ring = x.ring();
    if (ring.is_z()) return RingElement(ring, mod_pos(x.x(), mod.basis00()));
    Int y = mod_pos(x.y(), mod.basis11());
    Int k = divexact(x.y() - y, mod.basis11());
    Int xr = mod_pos(x.x() - k * mod.basis01(), mod.basis00());
    return RingElement(ring, xr, y);
}

}  // namespace

RingElement crt_solve(const std::vector<std::pair<RingElement, FractionalIdeal>>& congruences) {
    if (congruences.empty()) throw std::domain_error("crt_solve: no congruences");
    const Ring ring = congruences.front().second.ring();
    FractionalIdeal product = FractionalIdeal::unit_ideal(ring);
    for (std::size_t i = 0; i < congruences.size(); ++i) {
        check_same_ring(ring, congruences[i].first.ring());
        if (!congruences[i].second.is_integral())
            throw std::domain_error("crt_solve: moduli must be integral");
        for (std::size_t j = i + 1; j < congruences.size(); ++j)
            if (!(congruences[i].second + congruences[j].second).is_unit_ideal())
                throw std::domain_error("crt_solve: moduli are not pairwise coprime");
        product = product * congruences[i].second;
    }

    RingElement x = RingElement::zero(ring);
    if (ring.is_z()) {
        Int acc(0), m(1);
        for (const auto& [r, mod] : congruences) {
            const Int& n = mod.basis00();
            auto e = gcd_ext(m, n);
            // acc' = acc + m * s * (r - acc) mod m*n
            acc = mod_pos(acc + m * e.s * (r.x() - acc), m * n);
            m *= n;
        }
        x = RingElement(ring, acc);
    } else {
        for (std::size_t i = 0; i < congruences.size(); ++i) {
            FractionalIdeal rest = FractionalIdeal::unit_ideal(ring);
            for (std::size_t j = 0; j < congruences.size(); ++j)
                if (j != i) rest = rest * congruences[j].second;
            // 1 = u + v with u in m_i, v in rest; e_i = v = 1 mod m_i
            const FractionalIdeal& mi = congruences[i].second;
            std::vector<Col> cols{Col{mi.basis00(), Int(0)}, Col{mi.basis01(), mi.basis11()},
                                  Col{rest.basis00(), Int(0)}, Col{rest.basis01(), rest.basis11()}};
            auto coeffs = detail::express_in_cols(cols, Col{Int(1), Int(0)});
            if (!coeffs) throw std::logic_error("crt_solve: unit not reachable in sum lattice");
            RingElement v = RingElement(ring, rest.basis00(), 0) * (*coeffs)[2] +
                            RingElement(ring, rest.basis01(), rest.basis11()) * (*coeffs)[3];
            x = x + congruences[i].first * v;
        }
    }
    x = reduce_mod(x, product);
    for (const auto& [r, mod] : congruences)
        if (!mod.contains(x - r)) throw std::logic_error("crt_solve: witness fails a congruence");
    return x;
}

RingElement strong_generator(const FractionalIdeal& a_ideal, const FractionalIdeal& m) {
    check_same_ring(a_ideal.ring(), m.ring());
    if (!a_ideal.is_integral() || !m.is_integral())
        throw std::domain_error("strong_generator: ideals must be integral");
    if (!a_ideal.divides(m)) throw std::domain_error("strong_generator: a must divide m");
    const Ring& ring = a_ideal.ring();

    auto factors = m.factor();
    if (factors.empty()) return RingElement::one(ring);

    std::vector<std::pair<RingElement, FractionalIdeal>> congruences;
    for (const auto& f : factors) {
        long u = valuation_integral(a_ideal, f.prime, f.prime.inverse());
        FractionalIdeal pu = f.prime.pow(u);
        FractionalIdeal pu1 = pu * f.prime;
        RingElement local(ring, pu.basis00(), 0);
        if (pu1.contains(local)) {
            if (ring.is_z()) throw std::logic_error("strong_generator: no local generator");
            local = RingElement(ring, pu.basis01(), pu.basis11());
            if (pu1.contains(local))
                throw std::logic_error("strong_generator: no local generator in basis");
        }
        congruences.emplace_back(local, pu1);
    }
    RingElement result = crt_solve(congruences);
    if (!(FractionalIdeal::principal(result) + m == a_ideal))
        throw std::logic_error("strong_generator: postcondition failed");
    return result;
}

}  // namespace dcoset
