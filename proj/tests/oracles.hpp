#pragma once

// Test-only oracles, deliberately independent of the elimination code they
// cross-check: determinants by cofactor expansion, determinantal divisors by
// enumerating minors, and cokernel orders by enumerating the column span
// inside a finite box.

#include <optional>
#include <set>
#include <vector>

#include "apic/linalg.hpp"

namespace oracles {

using apic::BigInt;
using apic::big_abs;
using apic::big_gcd;
using apic::linalg::IntMatrix;

inline BigInt naive_determinant(const IntMatrix& a) {
    const std::size_t n = a.rows();
    if (n != a.cols()) throw apic::dimension_error("determinant of non-square matrix");
    if (n == 0) return 1;
    if (n == 1) return a(0, 0);
    BigInt det = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (a(i, 0) == 0) continue;
        IntMatrix minor(n - 1, n - 1);
        std::size_t r = 0;
        for (std::size_t ii = 0; ii < n; ++ii) {
            if (ii == i) continue;
            for (std::size_t j = 1; j < n; ++j) minor(r, j - 1) = a(ii, j);
            ++r;
        }
        BigInt term = a(i, 0) * naive_determinant(minor);
        det += (i % 2 == 0) ? term : -term;
    }
    return det;
}

inline void enumerate_subsets(std::size_t n, std::size_t k, std::size_t start,
                              std::vector<std::size_t>& cur,
                              std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
        cur.push_back(i);
        enumerate_subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

// gcd of all k x k minors (0 when every minor vanishes)
inline BigInt determinantal_divisor(const IntMatrix& a, std::size_t k) {
    std::vector<std::vector<std::size_t>> row_sets, col_sets;
    std::vector<std::size_t> cur;
    enumerate_subsets(a.rows(), k, 0, cur, row_sets);
    enumerate_subsets(a.cols(), k, 0, cur, col_sets);
    BigInt g = 0;
    for (const auto& rs : row_sets)
        for (const auto& cs : col_sets) {
            IntMatrix sub(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) sub(i, j) = a(rs[i], cs[j]);
            g = big_gcd(g, naive_determinant(sub));
            if (g == 1) return 1;
        }
    return big_abs(g);
}

inline std::size_t minor_rank(const IntMatrix& a) {
    std::size_t lim = std::min(a.rows(), a.cols());
    for (std::size_t k = lim; k >= 1; --k)
        if (determinantal_divisor(a, k) != 0) return k;
    return 0;
}

// Order of Z^rows / colspan(A) by enumerating the image of the columns in the
// box (Z/e)^rows, where e is the gcd of maximal minors (a multiple of the
// exponent). Returns nullopt when the quotient is infinite or the enumeration
// would exceed the cap.
inline std::optional<BigInt> brute_force_cokernel_order(const IntMatrix& a,
                                                        std::size_t cap = 2000000) {
    const std::size_t m = a.rows();
    if (m == 0) return BigInt(1);
    if (minor_rank(a) < m) return std::nullopt;  // positive free rank
    BigInt e = determinantal_divisor(a, m);
    if (e == 0) return std::nullopt;
    if (e == 1) return BigInt(1);
    // subgroup size is e^m / order; bail out if that cannot fit the cap
    BigInt worst = 1;
    for (std::size_t i = 0; i + 1 < m; ++i) {
        worst *= e;
        if (worst > cap) return std::nullopt;
    }
    const long long mod = static_cast<long long>(e);
    std::set<std::vector<long long>> seen;
    std::vector<std::vector<long long>> frontier;
    std::vector<long long> zero(m, 0);
    seen.insert(zero);
    frontier.push_back(zero);
    std::vector<std::vector<long long>> gens;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        std::vector<long long> g(m);
        for (std::size_t i = 0; i < m; ++i) {
            BigInt v = a(i, j) % e;
            if (v < 0) v += e;
            g[i] = static_cast<long long>(v);
        }
        gens.push_back(g);
    }
    while (!frontier.empty()) {
        auto x = frontier.back();
        frontier.pop_back();
        for (const auto& g : gens) {
            std::vector<long long> y(m);
            for (std::size_t i = 0; i < m; ++i) y[i] = (x[i] + g[i]) % mod;
            if (seen.insert(y).second) {
                if (seen.size() > cap) return std::nullopt;
                frontier.push_back(y);
            }
        }
    }
    BigInt box = 1;
    for (std::size_t i = 0; i < m; ++i) box *= e;
    return box / BigInt(static_cast<long long>(seen.size()));
}

}  // namespace oracles
