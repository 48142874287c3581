#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "apic/errors.hpp"
#include "apic/numeric.hpp"

// Exact integer and rational linear algebra: the substrate for every group
// computation in this library. Matrices are dense, row-major, value types.
namespace apic::linalg {

class IntMatrix {
public:
    IntMatrix() = default;

    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
        IntMatrix m(rows.size(), rows.size() ? rows.begin()->size() : 0);
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != m.cols_)
                throw dimension_error("ragged initializer for IntMatrix");
            std::size_t j = 0;
            for (long long v : row) m(i, j++) = v;
            ++i;
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigInt& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const {
        for (const auto& v : a_)
            if (v != 0) return false;
        return true;
    }

    IntMatrix transposed() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    std::vector<BigInt> column(std::size_t j) const {
        std::vector<BigInt> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_) throw dimension_error("IntMatrix product shape mismatch");
        IntMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const BigInt& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend std::vector<BigInt> operator*(const IntMatrix& a, const std::vector<BigInt>& x) {
        if (a.cols_ != x.size()) throw dimension_error("IntMatrix vector shape mismatch");
        std::vector<BigInt> y(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) y[i] += a(i, j) * x[j];
        return y;
    }

    bool operator==(const IntMatrix& o) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> a_;
};

class RatMatrix {
public:
    RatMatrix() = default;

    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static RatMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
        RatMatrix m(rows.size(), rows.size() ? rows.begin()->size() : 0);
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != m.cols_)
                throw dimension_error("ragged initializer for RatMatrix");
            std::size_t j = 0;
            for (long long v : row) m(i, j++) = v;
            ++i;
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const RatMatrix& o) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> a_;
};

struct SmithResult {
    IntMatrix u;  // rows x rows, unimodular
    IntMatrix d;  // diagonal, nonnegative, d_1 | d_2 | ...
    IntMatrix v;  // cols x cols, unimodular
};

// U*A*V = D with the pivot rule: smallest nonzero absolute value in the
// trailing submatrix, ties broken by lowest (row, col). The rule makes the
// whole decomposition deterministic, which golden tests rely on.
inline SmithResult smith_normal_form(const IntMatrix& input) {
    const std::size_t m = input.rows();
    const std::size_t n = input.cols();
    SmithResult res{IntMatrix::identity(m), input, IntMatrix::identity(n)};
    IntMatrix& a = res.d;
    IntMatrix& u = res.u;
    IntMatrix& v = res.v;

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < n; ++k) std::swap(a(i, k), a(j, k));
        for (std::size_t k = 0; k < m; ++k) std::swap(u(i, k), u(j, k));
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < m; ++k) std::swap(a(k, i), a(k, j));
        for (std::size_t k = 0; k < n; ++k) std::swap(v(k, i), v(k, j));
    };
    // row(dst) -= q * row(src), col(dst) -= q * col(src)
    auto add_row = [&](std::size_t dst, std::size_t src, const BigInt& q) {
        for (std::size_t k = 0; k < n; ++k) a(dst, k) -= q * a(src, k);
        for (std::size_t k = 0; k < m; ++k) u(dst, k) -= q * u(src, k);
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const BigInt& q) {
        for (std::size_t k = 0; k < m; ++k) a(k, dst) -= q * a(k, src);
        for (std::size_t k = 0; k < n; ++k) v(k, dst) -= q * v(k, src);
    };

    const std::size_t steps = m < n ? m : n;
    for (std::size_t s = 0; s < steps; ++s) {
        bool have_pivot = false;
        for (;;) {
            // minimal-|value| pivot in a[s.., s..]
            std::size_t pi = s, pj = s;
            BigInt best = 0;
            for (std::size_t i = s; i < m; ++i)
                for (std::size_t j = s; j < n; ++j) {
                    if (a(i, j) == 0) continue;
                    BigInt mag = big_abs(a(i, j));
                    if (best == 0 || mag < best) {
                        best = mag;
                        pi = i;
                        pj = j;
                    }
                }
            if (best == 0) break;  // trailing submatrix is zero
            have_pivot = true;
            swap_rows(s, pi);
            swap_cols(s, pj);

            bool clean;
            do {
                clean = true;
                for (std::size_t i = s + 1; i < m; ++i) {
                    if (a(i, s) == 0) continue;
                    add_row(i, s, a(i, s) / a(s, s));
                    if (a(i, s) != 0) {  // remainder beats the pivot
                        swap_rows(s, i);
                        clean = false;
                    }
                }
                for (std::size_t j = s + 1; j < n; ++j) {
                    if (a(s, j) == 0) continue;
                    add_col(j, s, a(s, j) / a(s, s));
                    if (a(s, j) != 0) {
                        swap_cols(s, j);
                        clean = false;
                    }
                }
            } while (!clean);

            // divisibility of the remaining block by the pivot
            bool fixed = false;
            for (std::size_t i = s + 1; i < m && !fixed; ++i)
                for (std::size_t j = s + 1; j < n && !fixed; ++j)
                    if (a(i, j) % a(s, s) != 0) {
                        add_row(s, i, BigInt(-1));
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (!have_pivot) break;
        if (a(s, s) < 0) {
            for (std::size_t k = 0; k < n; ++k) a(s, k) = -a(s, k);
            for (std::size_t k = 0; k < m; ++k) u(s, k) = -u(s, k);
        }
    }
    return res;
}

inline std::size_t snf_rank(const IntMatrix& d) {
    std::size_t r = 0;
    const std::size_t lim = d.rows() < d.cols() ? d.rows() : d.cols();
    while (r < lim && d(r, r) != 0) ++r;
    return r;
}

struct CokernelInvariants {
    std::size_t free_rank = 0;
    std::vector<BigInt> factors;  // invariant factors > 1, in divisibility order
};

// Structure of Z^rows / (column span of A).
inline CokernelInvariants cokernel_invariants(const IntMatrix& a) {
    const SmithResult s = smith_normal_form(a);
    const std::size_t r = snf_rank(s.d);
    CokernelInvariants out;
    out.free_rank = a.rows() - r;
    for (std::size_t i = 0; i < r; ++i)
        if (s.d(i, i) > 1) out.factors.push_back(s.d(i, i));
    return out;
}

// Basis of {v : A v = 0} as a saturated sublattice; columns of the result.
// Empty (cols x 0) when the kernel is trivial.
inline IntMatrix integer_kernel_basis(const IntMatrix& a) {
    const SmithResult s = smith_normal_form(a);
    const std::size_t r = snf_rank(s.d);
    const std::size_t n = a.cols();
    IntMatrix basis(n, n - r);
    for (std::size_t j = r; j < n; ++j) {
        // sign-normalize: first nonzero entry positive
        int sign = 0;
        for (std::size_t i = 0; i < n && sign == 0; ++i)
            if (s.v(i, j) != 0) sign = s.v(i, j) > 0 ? 1 : -1;
        for (std::size_t i = 0; i < n; ++i)
            basis(i, j - r) = sign < 0 ? BigInt(-s.v(i, j)) : s.v(i, j);
    }
    return basis;
}

// Rank by fraction-free (Bareiss) elimination.
inline std::size_t integer_rank(IntMatrix a) {
    const std::size_t m = a.rows(), n = a.cols();
    std::size_t rank = 0;
    BigInt prev = 1;
    for (std::size_t c = 0; c < n && rank < m; ++c) {
        std::size_t p = rank;
        while (p < m && a(p, c) == 0) ++p;
        if (p == m) continue;
        if (p != rank)
            for (std::size_t k = 0; k < n; ++k) std::swap(a(p, k), a(rank, k));
        for (std::size_t i = rank + 1; i < m; ++i) {
            for (std::size_t k = c + 1; k < n; ++k)
                a(i, k) = (a(i, k) * a(rank, c) - a(i, c) * a(rank, k)) / prev;
            a(i, c) = 0;
        }
        prev = a(rank, c);
        ++rank;
    }
    return rank;
}

inline std::size_t rational_rank(const RatMatrix& a) {
    // clear denominators row by row, then eliminate over Z
    IntMatrix b(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        BigInt l = 1;
        for (std::size_t j = 0; j < a.cols(); ++j) l = big_lcm(l, denominator(a(i, j)));
        for (std::size_t j = 0; j < a.cols(); ++j) {
            Rational scaled = a(i, j) * l;
            b(i, j) = numerator(scaled);
        }
    }
    return integer_rank(b);
}

// One integer solution of A x = rhs, if any.
inline std::optional<std::vector<BigInt>> solve(const IntMatrix& a,
                                                const std::vector<BigInt>& rhs) {
    if (rhs.size() != a.rows()) throw dimension_error("solve: rhs length mismatch");
    const SmithResult s = smith_normal_form(a);
    const std::size_t r = snf_rank(s.d);
    const std::vector<BigInt> y = s.u * rhs;
    std::vector<BigInt> c(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i < r) {
            if (y[i] % s.d(i, i) != 0) return std::nullopt;
            if (i < a.cols()) c[i] = y[i] / s.d(i, i);
        } else if (y[i] != 0) {
            return std::nullopt;
        }
    }
    return s.v * c;
}

}  // namespace apic::linalg
