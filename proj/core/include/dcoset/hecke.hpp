#pragma once

// The abstract Hecke algebra on double cosets of U: canonical keys, the
// product algorithm, a probabilistic right-coset decomposition with a
// pluggable unimodular sampler, the principal-part functional and the
// reduction-theorem evaluation.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dcoset/coset.hpp"
#include "dcoset/ideal.hpp"
#include "dcoset/matrix.hpp"

namespace dcoset {

// (delta1, f2): equal keys characterise equal double cosets for rank-2
// matrices.
struct DoubleCosetKey {
    FractionalIdeal delta1;
    FractionalIdeal f2;

    bool operator==(const DoubleCosetKey& o) const {
        return delta1 == o.delta1 && f2 == o.f2;
    }
    bool operator!=(const DoubleCosetKey& o) const { return !(*this == o); }
    bool operator<(const DoubleCosetKey& o) const {
        if (delta1 != o.delta1) return delta1 < o.delta1;
        return f2 < o.f2;
    }
    std::string str() const { return delta1.str() + "|" + f2.str(); }
};

DoubleCosetKey coset_key(const Mat2& m);

struct SamplerConfig {
    std::uint64_t seed = 0;
    int word_length = 12;
    int coeff_height = 9;
    bool mix_completions = true;
};

// Element of U at the given position of the seeded stream: a random word
// over elementary matrices, sign matrices and (optionally) completions of
// random unimodular columns. Deterministic for fixed (config, position).
Mat2 sample_unimodular(const Ring& ring, const SamplerConfig& cfg, std::uint64_t position);

struct DecomposeStats {
    std::uint64_t samples = 0;  // loop cycles consumed
};

// Right transversal of U \ U A U found by random sampling; equals the
// deterministic transversal as a set of right cosets. budget <= 0 selects
// the default 10^4 * mu(A); exhausting the budget throws.
std::vector<Mat2> decompose_probabilistic(const Mat2& m, const SamplerConfig& cfg,
                                          long budget = 0, DecomposeStats* stats = nullptr);

// Integer combination of double-coset characteristic functions.
class HeckeElement {
public:
    HeckeElement() = default;
    static HeckeElement characteristic(const Mat2& m);  // 1_{U m U}

    const std::map<DoubleCosetKey, Int>& terms() const { return terms_; }
    const Mat2& witness(const DoubleCosetKey& key) const;
    Int coefficient(const DoubleCosetKey& key) const;
    bool operator==(const HeckeElement& o) const { return terms_ == o.terms_; }

    void add_term(const DoubleCosetKey& key, const Int& coeff, const Mat2& witness);

private:
    std::map<DoubleCosetKey, Int> terms_;
    std::map<DoubleCosetKey, Mat2> witnesses_;
};

struct Decomposer {
    bool probabilistic = false;
    SamplerConfig cfg{};
    long budget = 0;
};

// 1_{U A U} * 1_{U B U} as an integer combination of double cosets.
HeckeElement hecke_multiply(const Mat2& a, const Mat2& b, const Decomposer& dec = {});
// Bilinear extension.
HeckeElement hecke_multiply(const HeckeElement& f, const HeckeElement& g,
                            const Decomposer& dec = {});

// Sum over terms of coefficient * mu_o(witness), the multiplicative
// principal-part functional.
Int mu_principal_functional(const HeckeElement& f);

// Value of (1_{UAU} * 1_{UBU}) at C for A = diag(1,a), B = diag(1,b),
// C = diag(1,c): 1 exactly when c is a unit multiple of a*b, else 0.
// Both the direct evaluation and the predicted value are computed and
// compared.
int reduction_check(const RingElement& a, const RingElement& b, const RingElement& c);

}  // namespace dcoset
