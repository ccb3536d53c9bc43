#pragma once

// Shared helpers for the test suites: deterministic random elements,
// matrices in I, and right-coset set comparison.

#include <random>
#include <vector>

#include <dcoset/coset.hpp>
#include <dcoset/matrix.hpp>
#include <dcoset/ring.hpp>

namespace dcoset::testutil {

inline RingElement random_element(const Ring& ring, std::mt19937_64& rng, int height) {
    auto pick = [&]() { return Int(static_cast<long>(rng() % (2 * height + 1)) - height); };
    Int x = pick();
    Int y = ring.is_z() ? Int(0) : pick();
    return RingElement(ring, x, y);
}

inline RingElement random_nonzero(const Ring& ring, std::mt19937_64& rng, int height) {
    while (true) {
        RingElement e = random_element(ring, rng, height);
        if (!e.is_zero()) return e;
    }
}

inline Mat2 random_in_i(const Ring& ring, std::mt19937_64& rng, int height,
                        const Int& max_det_norm) {
    while (true) {
        Mat2 m = Mat2::from_ring_elements(
            random_element(ring, rng, height), random_element(ring, rng, height),
            random_element(ring, rng, height), random_element(ring, rng, height));
        FieldElement dt = m.det();
        if (dt.is_zero()) continue;
        if (abs(dt.as_ring_element().norm()) > max_det_norm) continue;
        return m;
    }
}

// Equality of two transversals as sets of right cosets.
inline bool coset_sets_equal(const std::vector<Mat2>& lhs, const std::vector<Mat2>& rhs) {
    if (lhs.size() != rhs.size()) return false;
    std::vector<bool> used(rhs.size(), false);
    for (const auto& a : lhs) {
        bool found = false;
        for (std::size_t i = 0; i < rhs.size(); ++i) {
            if (!used[i] && same_right_coset(a, rhs[i])) {
                used[i] = true;
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace dcoset::testutil
