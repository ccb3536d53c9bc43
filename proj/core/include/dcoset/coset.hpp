#pragma once

// Counting and constructing the right cosets inside U A U: the per-ideal
// and total count formulas, the normal form, the deterministic right
// transversal, the Z-only Hermite oracle, the congruence-subgroup index
// and the fixed-determinant cross-check count.

#include <string>
#include <vector>

#include "dcoset/ideal.hpp"
#include "dcoset/matrix.hpp"
#include "dcoset/ring.hpp"

namespace dcoset {

struct NormalFormWitness {
    RingElement a_elem;   // chosen a with a*o + delta2 = g(A)
    RingElement b_elem;   // det A
    FieldElement c_elem;  // the unique c in the canonical transversal
    std::string transversal_id;
    Mat2 matrix;  // (a, c-1; b, b a^-1 c), in the same right coset as A
};

// Number of right cosets in U A U whose first-column ideal is a;
// zero unless delta1 | a | delta2 * delta1^-1.
Int mu_ideal(const Mat2& m, const FractionalIdeal& a);

// Total number of right cosets in U A U.
Int mu_total(const Mat2& m);

// Canonical right-coset representative, built along the constructive
// proof chain (column completion, unit scaling, CRT element, final
// correction).
NormalFormWitness normal_form(const Mat2& m);

// Reference normal form found by exhaustive search over the canonical
// transversal; must agree with normal_form.
NormalFormWitness normal_form_search(const Mat2& m);

// Full right transversal of U \ U A U, canonically ordered.
std::vector<Mat2> decompose_deterministic(const Mat2& m);

// All (a, b; 0, d) over Z with a*d = n, a, d > 0, 0 <= b < d: one
// representative per right coset of determinant-n matrices. The
// brute-force oracle behind the Z cross-checks.
std::vector<Mat2> hermite_transversal_z(const Int& n);

// Index of U0[m] = {(a,b;c,d) in U : b in m*o} in U.
Int congruence_index(const RingElement& m);

// Number of right cosets in {A : det A in d*o^*} (2x2 case). Defined only
// when every prime ideal dividing d*o is principal.
Int newman_count(const RingElement& d_elem);

}  // namespace dcoset
