#include "dcoset/coset.hpp"

#include <algorithm>

#include "intmath.hpp"

namespace dcoset {

using detail::divexact;
using detail::divisible;
using detail::isqrt;

namespace {

Int as_integer(const Rat& value, const char* what) {
    if (value.get_den() != 1) throw std::logic_error(std::string(what) + ": non-integral count");
    return value.get_num();
}

CosetInvariants invariants_in_i(const Mat2& m, const char* what) {
    if (!classify(m).in_i) throw std::domain_error(std::string(what) + ": matrix is not in I");
    return invariants(m);
}

}  // namespace

Int mu_ideal(const Mat2& m, const FractionalIdeal& a) {
    auto inv = invariants_in_i(m, "mu_ideal");
    if (!a.is_integral()) throw std::domain_error("mu_ideal: ideal is not integral");
    const FractionalIdeal& d1 = inv.delta1;
    const FractionalIdeal& d2 = *inv.delta2;
    FractionalIdeal upper = d2 * d1.inverse();
    if (!d1.divides(a) || !a.divides(upper)) return 0;

    FractionalIdeal split = (a * d1.inverse()) + (upper * a.inverse());
    Rat value = d2.norm() / (a.norm() * d1.norm());
    for (const auto& f : split.factor()) {
        Rat factor(f.residue_norm - 1, f.residue_norm);
        factor.canonicalize();
        value *= factor;
    }
    return as_integer(value, "mu_ideal");
}

Int mu_total(const Mat2& m) {
    auto inv = invariants_in_i(m, "mu_total");
    Rat value = inv.f2->norm();
    for (const auto& f : inv.f2->factor()) {
        Rat factor(f.residue_norm + 1, f.residue_norm);
        factor.canonicalize();
        value *= factor;
    }
    Int result = as_integer(value, "mu_total");
    if (result <= 0) throw std::logic_error("mu_total: non-positive count");
    return result;
}

namespace {

// Shared setup for a first-column ideal a of m:
// a = strong generator, q = a*aid^-1, bid = aid^-1 * delta2, and the
// canonical transversal of q / q*bid.
struct ColumnData {
    RingElement a;
    FractionalIdeal q, bid, qb;
    std::vector<FieldElement> transversal;
    std::string transversal_id;
};

ColumnData column_data(const Ring& ring, const FractionalIdeal& aid, const FractionalIdeal& d2) {
    ColumnData out{strong_generator(aid, d2), FractionalIdeal::unit_ideal(ring),
                   FractionalIdeal::unit_ideal(ring), FractionalIdeal::unit_ideal(ring),
                   {},
                   {}};
    FractionalIdeal aid_inv = aid.inverse();
    out.q = FractionalIdeal::principal(out.a) * aid_inv;
    out.bid = aid_inv * d2;
    out.qb = out.q * out.bid;
    out.transversal = residue_transversal(out.q, out.qb);
    out.transversal_id = out.q.str() + "/" + out.qb.str();
    return out;
}

Mat2 normal_form_matrix(const RingElement& a, const RingElement& b, const FieldElement& c) {
    const Ring& ring = a.ring();
    FieldElement cm1 = c - FieldElement::one(ring);
    FieldElement lower_right = FieldElement(b) * c / FieldElement(a);
    Mat2 m(FieldElement(a), cm1, FieldElement(b), lower_right);
    if (!m.is_integral()) throw std::logic_error("normal form representative is not integral");
    return m;
}

}  // namespace

NormalFormWitness normal_form(const Mat2& m) {
    auto inv = invariants_in_i(m, "normal_form");
    const Ring& ring = m.ring();
    RingElement b = m.det().as_ring_element();
    ColumnData data = column_data(ring, *inv.g, *inv.delta2);
    const RingElement& a = data.a;

    // P1: carry the first column to (a, b)
    Mat2 p1 = complete_unimodular(m.a().as_ring_element(), m.c().as_ring_element(), a, b);
    Mat2 w = p1 * m;

    // P2/P3: unit scaling to determinant b, corrected back to first
    // column (a, b) by a CRT-chosen determinant-1 matrix.
    RingElement det_w = w.det().as_ring_element();
    auto eps_opt = try_divide(b, det_w);
    if (!eps_opt || !eps_opt->is_unit())
        throw std::logic_error("normal_form: determinant is not a unit multiple of b");
    RingElement eps = *eps_opt;
    if (eps != RingElement::one(ring)) {
        Mat2 p2(FieldElement(eps), FieldElement::zero(ring), FieldElement::zero(ring),
                FieldElement::one(ring));
        w = p2 * w;
        RingElement eps_inv = *try_divide(RingElement::one(ring), eps);
        RingElement p = crt_solve({{eps_inv, data.bid}, {RingElement::one(ring), data.q}});
        FieldElement fa(a), fb(b), fp(p), feps(eps), one = FieldElement::one(ring);
        Mat2 p3(fp, fa / fb * (one - feps * fp), fb / fa * (fp - one),
                feps + one - feps * fp);
        if (!p3.is_integral() || p3.det() != one)
            throw std::logic_error("normal_form: invalid CRT correction matrix");
        w = p3 * w;
    }

    // w = (a, r; b, s) with det b; locate the unique c with
    // 1 + r = c mod q*bid.
    FieldElement one = FieldElement::one(ring);
    FieldElement one_plus_r = one + w.b();
    const FieldElement* chosen = nullptr;
    for (const auto& c : data.transversal) {
        if (data.qb.contains(one_plus_r - c)) {
            if (chosen) throw std::logic_error("normal_form: transversal is not a transversal");
            chosen = &c;
        }
    }
    if (!chosen) throw std::logic_error("normal_form: no matching transversal element");
    const FieldElement& c = *chosen;

    // P4 recorrects the second column exactly.
    FieldElement fa(a), fb(b);
    FieldElement r = w.b(), s = w.d();
    Mat2 p4(fa / fb * s - c + one, fa / fb * (c - r - one), s - fb / fa * c, c - r);
    if (!p4.is_integral() || p4.det() != one)
        throw std::logic_error("normal_form: invalid final correction matrix");
    Mat2 result = p4 * w;

    Mat2 expected = normal_form_matrix(a, b, c);
    if (result != expected) throw std::logic_error("normal_form: chain did not reach normal form");
    if (!same_right_coset(expected, m))
        throw std::logic_error("normal_form: representative left the right coset");
    return NormalFormWitness{a, b, c, data.transversal_id, expected};
}

NormalFormWitness normal_form_search(const Mat2& m) {
    auto inv = invariants_in_i(m, "normal_form_search");
    const Ring& ring = m.ring();
    RingElement b = m.det().as_ring_element();
    ColumnData data = column_data(ring, *inv.g, *inv.delta2);
    for (const auto& c : data.transversal) {
        Mat2 candidate = normal_form_matrix(data.a, b, c);
        if (same_right_coset(candidate, m))
            return NormalFormWitness{data.a, b, c, data.transversal_id, candidate};
    }
    throw std::logic_error("normal_form_search: no transversal element matches");
}

std::vector<Mat2> decompose_deterministic(const Mat2& m) {
    auto inv = invariants_in_i(m, "decompose_deterministic");
    const Ring& ring = m.ring();
    RingElement b = m.det().as_ring_element();
    const FieldElement one = FieldElement::one(ring);

    std::vector<Mat2> out;
    for (const auto& shift : divisors(*inv.f2)) {
        FractionalIdeal aid = inv.delta1 * shift;
        ColumnData data = column_data(ring, aid, *inv.delta2);
        FractionalIdeal q_inv_bid = data.q.inverse() * data.bid;
        for (const auto& c : data.transversal) {
            FractionalIdeal acc = aid;
            FieldElement cm1 = c - one;
            if (!cm1.is_zero()) acc = acc + FractionalIdeal::principal(cm1);
            if (!c.is_zero()) acc = acc + FractionalIdeal::principal(c) * q_inv_bid;
            if (acc == inv.delta1) out.push_back(normal_form_matrix(data.a, b, c));
        }
    }
    if (Int(out.size()) != mu_total(m))
        throw std::logic_error("decompose_deterministic: count does not match mu");
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Mat2> hermite_transversal_z(const Int& n) {
    if (n < 1) throw std::domain_error("hermite_transversal_z: n must be positive");
    if (n > 1000000) throw std::domain_error("hermite_transversal_z: n exceeds the oracle cap");
    const Ring ring = Ring::integers();
    std::vector<Mat2> out;
    for (Int a(1); a <= n; ++a) {
        if (!divisible(n, a)) continue;
        Int d = divexact(n, a);
        for (Int b(0); b < d; ++b)
            out.push_back(Mat2::from_ring_elements(RingElement(ring, a), RingElement(ring, b),
                                                   RingElement::zero(ring), RingElement(ring, d)));
    }
    return out;
}

Int congruence_index(const RingElement& m) {
    if (m.is_zero()) throw std::domain_error("congruence_index: m must be nonzero");
    FractionalIdeal mo = FractionalIdeal::principal(m);
    Rat value = mo.norm();
    for (const auto& f : mo.factor()) {
        Rat factor(f.residue_norm + 1, f.residue_norm);
        factor.canonicalize();
        value *= factor;
    }
    Int result = as_integer(value, "congruence_index");

    // [U : U0[m]] = mu(diag(1, m)), per the conjugation identity.
    const Ring& ring = m.ring();
    Mat2 a = Mat2::from_ring_elements(RingElement::one(ring), RingElement::zero(ring),
                                      RingElement::zero(ring), m);
    if (result != mu_total(a))
        throw std::logic_error("congruence_index: disagrees with the coset count");
    return result;
}

namespace {

// Whether a prime ideal with residue norm q is principal; exact search for
// a generator of absolute norm q. Inert primes are principal by
// construction; imaginary quadratic searches are bounded by the definite
// norm form, real quadratic ones by a fundamental Pell unit.
bool prime_is_principal(const FractionalIdeal& prime, const Int& q) {
    const Ring& ring = prime.ring();
    if (ring.is_z()) return true;
    if (prime.basis01() == 0 && prime.basis00() == prime.basis11()) return true;  // p*o, inert

    const Int& d = ring.d();
    auto check = [&](const Int& x, const Int& y) {
        RingElement cand(ring, x, y);
        return abs(cand.norm()) == q && prime.contains(cand);
    };

    if (d < 0) {
        // definite form: finitely many (x, y) with |N| = q
        Int ymax;
        if (ring.omega_kind() == OmegaKind::sqrt)
            ymax = isqrt(q / (-d)) + 1;
        else
            ymax = isqrt(4 * q / (-d)) + 1;
        for (Int y(-ymax); y <= ymax; ++y) {
            Int xmax = isqrt(q + abs(d) * y * y) + 2;
            for (Int x(-xmax); x <= xmax; ++x)
                if (check(x, y)) return true;
        }
        return false;
    }

    // real quadratic: any generator can be unit-shifted into the window
    // sqrt(q) <= |embedding| <= eps*sqrt(q) with eps a fundamental Pell unit
    auto [pu, pv] = detail::pell_fundamental(d);
    Int sq = isqrt(q) + 1;
    Int eps_bound = pu + pv * (isqrt(d) + 1) + 1;
    Int emb_bound = (eps_bound + 1) * sq + 1;
    Int sqrt_d_floor = isqrt(d);
    Int ymax = divexact(2 * emb_bound, sqrt_d_floor) + 2;
    for (Int y(-ymax); y <= ymax; ++y) {
        Int xmax = emb_bound + (abs(y) + 1) * (sqrt_d_floor + 1) + 2;
        for (Int x(-xmax); x <= xmax; ++x)
            if (check(x, y)) return true;
    }
    return false;
}

}  // namespace

Int newman_count(const RingElement& d_elem) {
    if (d_elem.is_zero()) throw std::domain_error("newman_count: element must be nonzero");
    FractionalIdeal ideal = FractionalIdeal::principal(d_elem);
    Int result(1);
    for (const auto& f : ideal.factor()) {
        if (!prime_is_principal(f.prime, f.residue_norm))
            throw std::domain_error(
                "newman_count: a prime ideal factor has no prime-element generator");
        Int power;
        mpz_pow_ui(power.get_mpz_t(), f.residue_norm.get_mpz_t(),
                   static_cast<unsigned long>(f.exponent + 1));
        result *= divexact(power - 1, f.residue_norm - 1);
    }
    return result;
}

}  // namespace dcoset
