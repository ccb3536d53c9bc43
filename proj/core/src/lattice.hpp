#pragma once

// Internal exact linear algebra on rank-2 integer lattices in Z^2,
// used for the HNF representation of ideals and residue transversals.

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "intmath.hpp"

namespace dcoset::detail {

struct Col {
    Int x, y;  // coordinates over the basis {1, omega}
};

// Canonical column HNF of a full-rank 2-row lattice:
//   [[a, b], [0, c]] with a, c > 0 and 0 <= b < a.
struct Hnf2 {
    Int a, b, c;
};

// Returns std::nullopt when the columns span a lattice of rank < 2.
inline std::optional<Hnf2> hnf2(std::vector<Col> cols) {
    Col carrier{Int(0), Int(0)};
    std::vector<Int> xs;
    for (auto& col : cols) {
        if (col.y == 0) {
            if (col.x != 0) xs.push_back(col.x);
            continue;
        }
        if (carrier.y == 0) {
            carrier = col;
            continue;
        }
        ExtGcd e = gcd_ext(carrier.y, col.y);
        Int u = divexact(carrier.y, e.g);
        Int v = divexact(col.y, e.g);
        Col merged{e.s * carrier.x + e.t * col.x, e.g};
        Int residual_x = v * carrier.x - u * col.x;  // second coordinate cancels
        carrier = merged;
        if (residual_x != 0) xs.push_back(residual_x);
    }
    if (carrier.y == 0 || xs.empty()) return std::nullopt;

    Int a(0);
    for (const Int& x : xs) a = gcd(a, x);
    a = abs(a);
    Int c = carrier.y;
    Int b = carrier.x;
    if (c < 0) {
        c = -c;
        b = -b;
    }
    b = mod_pos(b, a);
    return Hnf2{a, b, c};
}

inline bool hnf_contains(const Hnf2& h, const Int& x, const Int& y) {
    if (!divisible(y, h.c)) return false;
    return divisible(x - divexact(y, h.c) * h.b, h.a);
}

// Integer coefficients t with sum t_i * cols_i = target, if they exist.
inline std::optional<std::vector<Int>> express_in_cols(const std::vector<Col>& cols_in,
                                                       const Col& target) {
    const std::size_t n = cols_in.size();
    std::vector<Col> cols = cols_in;
    // coeff[i] expresses cols[i] in terms of the original columns
    std::vector<std::vector<Int>> coeff(n, std::vector<Int>(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i) coeff[i][i] = 1;

    // Sweep the second row down to a single carrier column.
    std::size_t carrier = n;
    for (std::size_t i = 0; i < n; ++i) {
        if (cols[i].y == 0) continue;
        if (carrier == n) {
            carrier = i;
            continue;
        }
        ExtGcd e = gcd_ext(cols[carrier].y, cols[i].y);
        Int u = divexact(cols[carrier].y, e.g);
        Int v = divexact(cols[i].y, e.g);
        Col merged{e.s * cols[carrier].x + e.t * cols[i].x, e.g};
        Col resid{v * cols[carrier].x - u * cols[i].x, Int(0)};
        std::vector<Int> merged_coeff(n), resid_coeff(n);
        for (std::size_t k = 0; k < n; ++k) {
            merged_coeff[k] = e.s * coeff[carrier][k] + e.t * coeff[i][k];
            resid_coeff[k] = v * coeff[carrier][k] - u * coeff[i][k];
        }
        cols[carrier] = merged;
        coeff[carrier] = merged_coeff;
        cols[i] = resid;
        coeff[i] = resid_coeff;
    }

    // Sweep the first row of the y == 0 columns to a single gcd column.
    std::size_t lead = n;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == carrier || cols[i].x == 0) continue;
        if (lead == n) {
            lead = i;
            continue;
        }
        ExtGcd e = gcd_ext(cols[lead].x, cols[i].x);
        std::vector<Int> merged_coeff(n);
        for (std::size_t k = 0; k < n; ++k)
            merged_coeff[k] = e.s * coeff[lead][k] + e.t * coeff[i][k];
        cols[lead].x = e.g;
        coeff[lead] = merged_coeff;
        cols[i].x = 0;
    }

    std::vector<Int> result(n, Int(0));
    Int rx = target.x, ry = target.y;
    if (ry != 0) {
        if (carrier == n || !divisible(ry, cols[carrier].y)) return std::nullopt;
    }
    if (carrier != n) {
        Int beta = (cols[carrier].y == 0) ? Int(0) : Int(divexact(ry, cols[carrier].y));
        rx -= beta * cols[carrier].x;
        for (std::size_t k = 0; k < n; ++k) result[k] += beta * coeff[carrier][k];
    } else if (ry != 0) {
        return std::nullopt;
    }
    if (rx != 0) {
        if (lead == n || !divisible(rx, cols[lead].x)) return std::nullopt;
        Int alpha = divexact(rx, cols[lead].x);
        for (std::size_t k = 0; k < n; ++k) result[k] += alpha * coeff[lead][k];
    }
    return result;
}

// Smith normal form of a nonsingular 2x2 integer matrix X:
// U * X * V = diag(s1, s2) with s1 | s2, s1, s2 > 0, U, V unimodular.
// Matrices are stored row-major as {m00, m01, m10, m11}.
struct Snf2 {
    Int s1, s2;
    std::array<Int, 4> u, v, u_inv;
};

inline std::array<Int, 4> mat_mul2(const std::array<Int, 4>& p, const std::array<Int, 4>& q) {
    return {p[0] * q[0] + p[1] * q[2], p[0] * q[1] + p[1] * q[3],
            p[2] * q[0] + p[3] * q[2], p[2] * q[1] + p[3] * q[3]};
}

inline Snf2 snf2(std::array<Int, 4> x) {
    std::array<Int, 4> u{1, 0, 0, 1}, v{1, 0, 0, 1};
    auto row_gcd = [&]() {
        // clear x[2] using rows 0,1
        if (x[2] == 0) return;
        ExtGcd e = gcd_ext(x[0], x[2]);
        Int a = divexact(x[0], e.g), c = divexact(x[2], e.g);
        std::array<Int, 4> t{e.s, e.t, -c, a};  // det = 1
        x = mat_mul2(t, x);
        u = mat_mul2(t, u);
    };
    auto col_gcd = [&]() {
        // clear x[1] using cols 0,1
        if (x[1] == 0) return;
        ExtGcd e = gcd_ext(x[0], x[1]);
        Int a = divexact(x[0], e.g), b = divexact(x[1], e.g);
        std::array<Int, 4> t{e.s, -b, e.t, a};  // det = 1
        x = mat_mul2(x, t);
        v = mat_mul2(v, t);
    };
    auto reduce = [&]() {
        int iter = 0;
        while (x[1] != 0 || x[2] != 0) {
            row_gcd();
            col_gcd();
            if (++iter > 256) throw std::logic_error("snf2: reduction did not converge");
        }
    };
    reduce();
    if (x[0] == 0 || x[3] == 0) throw std::domain_error("snf2: singular matrix");
    while (!divisible(x[3], x[0])) {
        // add column 1 to column 0 to force the divisibility chain
        std::array<Int, 4> t{1, 0, 1, 1};
        x = mat_mul2(x, t);
        v = mat_mul2(v, t);
        reduce();
    }
    if (x[0] < 0) {
        x[0] = -x[0];
        x[1] = -x[1];
        u = mat_mul2({-1, 0, 0, 1}, u);
    }
    if (x[3] < 0) {
        x[2] = -x[2];
        x[3] = -x[3];
        u = mat_mul2({1, 0, 0, -1}, u);
    }
    Int udet = u[0] * u[3] - u[1] * u[2];
    std::array<Int, 4> u_inv{u[3], -u[1], -u[2], u[0]};
    if (udet == -1)
        for (auto& e : u_inv) e = -e;
    else if (udet != 1)
        throw std::logic_error("snf2: transform not unimodular");
    return Snf2{x[0], x[3], u, v, u_inv};
}

}  // namespace dcoset::detail
