#include "dcoset/hecke.hpp"

#include <algorithm>

#include "intmath.hpp"

namespace dcoset {

using detail::splitmix64;

DoubleCosetKey coset_key(const Mat2& m) {
    if (!classify(m).in_i) throw std::domain_error("coset_key: matrix is not in I");
    auto inv = invariants(m);
    return DoubleCosetKey{inv.delta1, *inv.f2};
}

namespace {

// Deterministic helper stream: splitmix64 over a per-position state.
class Stream {
public:
    Stream(std::uint64_t seed, std::uint64_t position)
        : state_(splitmix64(seed ^ splitmix64(position + 0x51ed2701a2b9e4d5ULL))) {}

    std::uint64_t next() {
        state_ = splitmix64(state_);
        return state_;
    }

    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    Int coordinate(int height) {
        return Int(static_cast<long>(below(2 * static_cast<std::uint64_t>(height) + 1)) -
                   static_cast<long>(height));
    }

    RingElement element(const Ring& ring, int height) {
        Int x = coordinate(height);
        Int y = ring.is_z() ? Int(0) : coordinate(height);
        return RingElement(ring, std::move(x), std::move(y));
    }

private:
    std::uint64_t state_;
};

Mat2 elementary_upper(const Ring& ring, const RingElement& x) {
    return Mat2(FieldElement::one(ring), FieldElement(x), FieldElement::zero(ring),
                FieldElement::one(ring));
}

Mat2 elementary_lower(const Ring& ring, const RingElement& x) {
    return Mat2(FieldElement::one(ring), FieldElement::zero(ring), FieldElement(x),
                FieldElement::one(ring));
}

Mat2 sign_matrix(const Ring& ring, bool flip1, bool flip2) {
    auto pick = [&](bool flip) {
        return flip ? -FieldElement::one(ring) : FieldElement::one(ring);
    };
    return Mat2(pick(flip1), FieldElement::zero(ring), FieldElement::zero(ring), pick(flip2));
}

Mat2 completion_factor(const Ring& ring, Stream& stream, int height) {
    const RingElement one = RingElement::one(ring);
    const RingElement zero = RingElement::zero(ring);
    for (int attempt = 0; attempt < 64; ++attempt) {
        RingElement c = stream.element(ring, height);
        RingElement d = stream.element(ring, height);
        if (c.is_zero() && d.is_zero()) continue;
        FractionalIdeal g =
            FractionalIdeal::from_generators(ring, {FieldElement(c), FieldElement(d)});
        if (!g.is_unit_ideal()) continue;
        return complete_unimodular(c, d, one, zero);
    }
    return Mat2::identity(ring);
}

}  // namespace

Mat2 sample_unimodular(const Ring& ring, const SamplerConfig& cfg, std::uint64_t position) {
    Stream stream(cfg.seed, position);
    Mat2 word = Mat2::identity(ring);
    if (cfg.word_length <= 0) return word;
    std::uint64_t length = stream.below(static_cast<std::uint64_t>(cfg.word_length) + 1);
    int kinds = cfg.mix_completions ? 4 : 3;
    for (std::uint64_t i = 0; i < length; ++i) {
        switch (stream.below(static_cast<std::uint64_t>(kinds))) {
            case 0:
                word = word * elementary_upper(ring, stream.element(ring, cfg.coeff_height));
                break;
            case 1:
                word = word * elementary_lower(ring, stream.element(ring, cfg.coeff_height));
                break;
            case 2:
                word = word * sign_matrix(ring, stream.below(2) == 1, stream.below(2) == 1);
                break;
            default:
                word = word * completion_factor(ring, stream, cfg.coeff_height);
                break;
        }
    }
    if (!classify(word).in_u) throw std::logic_error("sample_unimodular: word left U");
    return word;
}

std::vector<Mat2> decompose_probabilistic(const Mat2& m, const SamplerConfig& cfg, long budget,
                                          DecomposeStats* stats) {
    if (!classify(m).in_i)
        throw std::domain_error("decompose_probabilistic: matrix is not in I");
    Int k = mu_total(m);
    if (budget <= 0) {
        Int suggested = Int(10000) * k;
        budget = suggested.fits_slong_p() ? suggested.get_si() : 1000000000L;
    }

    std::vector<Mat2> reps{m};
    std::uint64_t n = 0;
    while (Int(reps.size()) < k) {
        if (static_cast<long>(n) >= budget)
            throw std::runtime_error(
                "decompose_probabilistic: sampling budget exhausted before the transversal "
                "was complete");
        ++n;
        Mat2 candidate = m * sample_unimodular(m.ring(), cfg, n);
        bool fresh = true;
        for (const auto& rep : reps) {
            if (same_right_coset(candidate, rep)) {
                fresh = false;
                break;
            }
        }
        if (fresh) reps.push_back(candidate);
    }
    if (stats) stats->samples = n;
    std::sort(reps.begin(), reps.end());
    return reps;
}

HeckeElement HeckeElement::characteristic(const Mat2& m) {
    HeckeElement f;
    f.add_term(coset_key(m), Int(1), m);
    return f;
}

const Mat2& HeckeElement::witness(const DoubleCosetKey& key) const {
    auto it = witnesses_.find(key);
    if (it == witnesses_.end()) throw std::domain_error("HeckeElement: no witness for key");
    return it->second;
}

Int HeckeElement::coefficient(const DoubleCosetKey& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Int(0) : it->second;
}

void HeckeElement::add_term(const DoubleCosetKey& key, const Int& coeff, const Mat2& witness) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) {
            terms_.erase(it);
            witnesses_.erase(key);
            return;
        }
    }
    witnesses_.emplace(key, witness);
}

namespace {

std::vector<Mat2> decompose_with(const Mat2& m, const Decomposer& dec) {
    if (dec.probabilistic) return decompose_probabilistic(m, dec.cfg, dec.budget);
    return decompose_deterministic(m);
}

}  // namespace

HeckeElement hecke_multiply(const Mat2& a, const Mat2& b, const Decomposer& dec) {
    check_same_ring(a.ring(), b.ring());
    if (!classify(a).in_i || !classify(b).in_i)
        throw std::domain_error("hecke_multiply: inputs must be in I");

    std::vector<Mat2> left = decompose_with(a, dec);
    std::vector<Mat2> right = decompose_with(b, dec);

    // Bucket the products by double-coset key; within a key count only the
    // products in the same right coset as the first-seen representative.
    std::map<DoubleCosetKey, std::pair<Mat2, Int>> buckets;
    for (const auto& ai : left) {
        for (const auto& bj : right) {
            Mat2 product = ai * bj;
            DoubleCosetKey key = coset_key(product);
            auto it = buckets.find(key);
            if (it == buckets.end())
                buckets.emplace(key, std::make_pair(product, Int(1)));
            else if (same_right_coset(product, it->second.first))
                it->second.second += 1;
        }
    }

    HeckeElement result;
    for (const auto& [key, entry] : buckets) {
        // canonical witness: least element of the deterministic transversal
        Mat2 witness = decompose_deterministic(entry.first).front();
        result.add_term(key, entry.second, witness);
    }
    return result;
}

HeckeElement hecke_multiply(const HeckeElement& f, const HeckeElement& g, const Decomposer& dec) {
    HeckeElement result;
    for (const auto& [fk, fc] : f.terms()) {
        for (const auto& [gk, gc] : g.terms()) {
            HeckeElement partial = hecke_multiply(f.witness(fk), g.witness(gk), dec);
            for (const auto& [key, coeff] : partial.terms())
                result.add_term(key, fc * gc * coeff, partial.witness(key));
        }
    }
    return result;
}

Int mu_principal_functional(const HeckeElement& f) {
    Int total(0);
    for (const auto& [key, coeff] : f.terms()) {
        const Mat2& w = f.witness(key);
        total += coeff * mu_ideal(w, FractionalIdeal::unit_ideal(w.ring()));
    }
    return total;
}

int reduction_check(const RingElement& a, const RingElement& b, const RingElement& c) {
    if (a.is_zero() || b.is_zero() || c.is_zero())
        throw std::domain_error("reduction_check: zero input");
    const Ring& ring = a.ring();
    check_same_ring(ring, b.ring());
    check_same_ring(ring, c.ring());

    auto diag = [&](const RingElement& x) {
        return Mat2::from_ring_elements(RingElement::one(ring), RingElement::zero(ring),
                                        RingElement::zero(ring), x);
    };
    HeckeElement product = hecke_multiply(diag(a), diag(b));
    Int value = product.coefficient(coset_key(diag(c)));

    auto quotient = try_divide(c, a * b);
    int predicted = (quotient && quotient->is_unit()) ? 1 : 0;
    if (value != predicted)
        throw std::logic_error("reduction_check: evaluation contradicts the prediction");
    return predicted;
}

}  // namespace dcoset
