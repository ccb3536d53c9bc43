#pragma once

// Internal arbitrary-precision integer utilities built on GMP.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dcoset::detail {

using Int = mpz_class;

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

struct ExtGcd {
    Int g, s, t;  // g = s*a + t*b
};

inline ExtGcd gcd_ext(const Int& a, const Int& b) {
    ExtGcd r;
    mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(),
               a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Nonnegative residue, modulus must be nonzero.
inline Int mod_pos(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Int divexact(const Int& a, const Int& b) {
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline bool divisible(const Int& a, const Int& b) {
    return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
}

inline bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

inline Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Pollard rho (Brent variant); n odd composite, not a prime power of a
// small prime already stripped by trial division.
inline Int pollard_rho(const Int& n, unsigned long c0) {
    if (divisible(n, 2)) return Int(2);
    Int x(2), y(2), d(1), q(1);
    Int c(c0);
    while (d == 1) {
        x = mod_pos(x * x + c, n);
        y = mod_pos(y * y + c, n);
        y = mod_pos(y * y + c, n);
        Int diff = x - y;
        if (diff == 0) return Int(0);  // cycle, retry with another c
        q = mod_pos(q * abs(diff), n);
        d = gcd(q, n);
    }
    return (d == n) ? Int(0) : d;
}

// Complete factorization of n >= 1 into (prime, exponent), primes ascending.
inline std::vector<std::pair<Int, int>> factor_integer(Int n) {
    if (n < 1) throw std::domain_error("factor_integer: argument must be positive");
    std::vector<std::pair<Int, int>> out;
    if (n == 1) return out;

    auto strip = [&](const Int& p) {
        int e = 0;
        while (divisible(n, p)) {
            n = divexact(n, p);
            ++e;
        }
        if (e > 0) out.emplace_back(p, e);
    };

    strip(Int(2));
    strip(Int(3));
    for (Int p(5); p * p <= n && p < 100000; p += (mod_pos(p, 6) == 5) ? 2 : 4) {
        strip(p);
    }
    if (n > 1) {
        // Remaining cofactor beyond trial division range.
        std::vector<Int> stack{n};
        std::vector<Int> primes;
        while (!stack.empty()) {
            Int m = stack.back();
            stack.pop_back();
            if (m == 1) continue;
            if (is_probable_prime(m)) {
                primes.push_back(m);
                continue;
            }
            Int d(0);
            for (unsigned long c = 1; d == 0; ++c) d = pollard_rho(m, c);
            stack.push_back(d);
            stack.push_back(divexact(m, d));
        }
        std::sort(primes.begin(), primes.end());
        for (std::size_t i = 0; i < primes.size();) {
            std::size_t j = i;
            while (j < primes.size() && primes[j] == primes[i]) ++j;
            out.emplace_back(primes[i], static_cast<int>(j - i));
            i = j;
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

// Tonelli-Shanks: square root of a modulo an odd prime p, if one exists.
inline std::optional<Int> sqrt_mod_prime(const Int& a_in, const Int& p) {
    Int a = mod_pos(a_in, p);
    if (p == 2) return a;
    if (a == 0) return Int(0);
    if (mpz_legendre(a.get_mpz_t(), p.get_mpz_t()) != 1) return std::nullopt;

    auto powm = [&](const Int& base, const Int& exp) {
        Int r;
        mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), p.get_mpz_t());
        return r;
    };

    if (mod_pos(p, 4) == 3) return powm(a, (p + 1) / 4);

    Int q = p - 1;
    unsigned long s = 0;
    while (divisible(q, 2)) {
        q = divexact(q, 2);
        ++s;
    }
    Int z(2);
    while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;

    Int m(static_cast<long>(s));
    Int c = powm(z, q);
    Int t = powm(a, q);
    Int r = powm(a, (q + 1) / 2);
    while (t != 1) {
        Int tt = t;
        long i = 0;
        while (tt != 1) {
            tt = mod_pos(tt * tt, p);
            ++i;
        }
        Int b = c;
        for (long j = 0; j < m.get_si() - i - 1; ++j) b = mod_pos(b * b, p);
        m = i;
        c = mod_pos(b * b, p);
        t = mod_pos(t * c, p);
        r = mod_pos(r * b, p);
    }
    return r;
}

// Least nontrivial solution of x^2 - d*y^2 = ±1 with x, y > 0, via the
// continued fraction of sqrt(d). Requires d > 1 not a perfect square.
inline std::pair<Int, Int> pell_fundamental(const Int& d) {
    Int a0 = isqrt(d);
    if (a0 * a0 == d) throw std::domain_error("pell_fundamental: square input");
    Int m(0), den(1), a = a0;
    Int h_prev(1), h = a0, k_prev(0), k(1);
    for (int iter = 0; iter < 100000; ++iter) {
        Int v = h * h - d * k * k;
        if (v == 1 || v == -1) return {h, k};
        m = den * a - m;
        den = divexact(d - m * m, den);
        a = (a0 + m) / den;
        Int h_next = a * h + h_prev;
        Int k_next = a * k + k_prev;
        h_prev = h;
        k_prev = k;
        h = h_next;
        k = k_next;
    }
    throw std::runtime_error("pell_fundamental: no solution found");
}

}  // namespace dcoset::detail
