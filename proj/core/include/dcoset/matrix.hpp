#pragma once

// 2x2 matrices over K: divisor-chain invariants, right/double coset
// equality and constructive unimodular completion.

#include <array>
#include <optional>
#include <string>

#include "dcoset/ideal.hpp"
#include "dcoset/ring.hpp"

namespace dcoset {

class Mat2 {
public:
    Mat2(FieldElement a, FieldElement b, FieldElement c, FieldElement d);

    static Mat2 identity(const Ring& ring);
    static Mat2 from_ring_elements(const RingElement& a, const RingElement& b,
                                   const RingElement& c, const RingElement& d);

    const Ring& ring() const { return a_.ring(); }
    const FieldElement& a() const { return a_; }
    const FieldElement& b() const { return b_; }
    const FieldElement& c() const { return c_; }
    const FieldElement& d() const { return d_; }

    FieldElement det() const;
    Mat2 operator*(const Mat2& o) const;
    Mat2 inverse() const;  // throws on det == 0
    bool is_zero() const;
    bool is_integral() const;

    bool operator==(const Mat2& o) const {
        return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
    }
    bool operator!=(const Mat2& o) const { return !(*this == o); }
    // Canonical entry-wise ordering for deterministic output.
    bool operator<(const Mat2& o) const;

private:
    FieldElement a_, b_, c_, d_;
};

struct MembershipFlags {
    bool in_ring;  // all entries integral
    bool in_i;     // integral with nonzero determinant
    bool in_u;     // integral with unit determinant
};

MembershipFlags classify(const Mat2& m);

// Determinantal divisors and derived ideals of an integral matrix.
// e1 = f1 = delta1 always; delta2, e2, f2 only for rank 2; g is the first
// column ideal and is absent when that column vanishes.
struct CosetInvariants {
    int rank;  // 1 or 2
    FractionalIdeal delta1;
    std::optional<FractionalIdeal> delta2;
    std::optional<FractionalIdeal> e2;
    std::optional<FractionalIdeal> f2;
    std::optional<FractionalIdeal> g;
};

CosetInvariants invariants(const Mat2& m);

// UA = UB, i.e. B * A^-1 lies in U. Both matrices must be in I.
bool same_right_coset(const Mat2& a, const Mat2& b);

// UAU = UBU via the determinantal divisor criterion. Rank-2 inputs compare
// (delta1, delta2); rank-1 inputs compare (delta1, g) and must have a
// nonzero first column. Mixed ranks are rejected.
bool same_double_coset(const Mat2& a, const Mat2& b);

// R in U with det R = 1 and R * (a, b)^T = (c, d)^T, for generator pairs
// with a*o + b*o = c*o + d*o.
Mat2 complete_unimodular(const RingElement& a, const RingElement& b, const RingElement& c,
                         const RingElement& d);

}  // namespace dcoset
