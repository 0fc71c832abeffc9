#ifndef SPRINGER_HTOP_EXACT_MATRIX_HPP
#define SPRINGER_HTOP_EXACT_MATRIX_HPP

#include <springer_htop/errors.hpp>

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace htop {

/// Dense row-major matrix over Q (GMP rationals). No floating point.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ExactMatrix identity(std::size_t n)
    {
        ExactMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    mpq_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const mpq_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const
    {
        for (const auto& x : data_)
            if (sgn(x) != 0)
                return false;
        return true;
    }

    mpq_class trace() const
    {
        mpq_class t = 0;
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
            t += (*this)(i, i);
        return t;
    }

    ExactMatrix& operator+=(const ExactMatrix& o)
    {
        require_same_shape(o, "+");
        for (std::size_t k = 0; k < data_.size(); ++k)
            data_[k] += o.data_[k];
        return *this;
    }

    ExactMatrix& operator-=(const ExactMatrix& o)
    {
        require_same_shape(o, "-");
        for (std::size_t k = 0; k < data_.size(); ++k)
            data_[k] -= o.data_[k];
        return *this;
    }

    ExactMatrix& operator*=(const mpq_class& s)
    {
        for (auto& x : data_)
            x *= s;
        return *this;
    }

    friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
    friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
    friend ExactMatrix operator*(const mpq_class& s, ExactMatrix a) { return a *= s; }

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b)
    {
        if (a.cols_ != b.rows_)
            throw InputError("matrix product: inner dimensions differ");
        ExactMatrix out(a.rows_, b.cols_);
        mpq_class tmp;
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const mpq_class& aik = a(i, k);
                if (sgn(aik) == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const mpq_class& bkj = b(k, j);
                    if (sgn(bkj) == 0)
                        continue;
                    tmp = aik * bkj;
                    out(i, j) += tmp;
                }
            }
        return out;
    }

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    ExactMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const
    {
        ExactMatrix out(rows.size(), cols.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j)
                out(i, j) = (*this)(rows[i], cols[j]);
        return out;
    }

    /// Rank by fraction-free (Bareiss) elimination after clearing each
    /// row's denominators.
    std::size_t rank() const
    {
        std::vector<std::vector<mpz_class>> m(rows_, std::vector<mpz_class>(cols_));
        for (std::size_t i = 0; i < rows_; ++i) {
            mpz_class den = 1;
            for (std::size_t j = 0; j < cols_; ++j)
                mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), (*this)(i, j).get_den_mpz_t());
            for (std::size_t j = 0; j < cols_; ++j) {
                const mpq_class& x = (*this)(i, j);
                m[i][j] = x.get_num() * (den / x.get_den());
            }
        }
        mpz_class prev = 1;
        mpz_class rem;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t p = r;
            while (p < rows_ && sgn(m[p][c]) == 0)
                ++p;
            if (p == rows_)
                continue;
            std::swap(m[p], m[r]);
            for (std::size_t i = r + 1; i < rows_; ++i) {
                for (std::size_t j = c + 1; j < cols_; ++j) {
                    m[i][j] = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                    mpz_tdiv_qr(m[i][j].get_mpz_t(), rem.get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
                    if (sgn(rem) != 0)
                        throw ConsistencyError("Bareiss elimination: inexact division");
                }
                m[i][c] = 0;
            }
            prev = m[r][c];
            ++r;
        }
        return r;
    }

    /// Gauss–Jordan inverse; throws InputError on a singular or non-square matrix.
    ExactMatrix inverse() const
    {
        if (rows_ != cols_)
            throw InputError("inverse of a non-square matrix");
        const std::size_t n = rows_;
        ExactMatrix a = *this;
        ExactMatrix inv = identity(n);
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t p = c;
            while (p < n && sgn(a(p, c)) == 0)
                ++p;
            if (p == n)
                throw InputError("inverse of a singular matrix");
            if (p != c)
                for (std::size_t j = 0; j < n; ++j) {
                    std::swap(a(p, j), a(c, j));
                    std::swap(inv(p, j), inv(c, j));
                }
            const mpq_class piv = a(c, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(c, j) /= piv;
                inv(c, j) /= piv;
            }
            for (std::size_t i = 0; i < n; ++i) {
                if (i == c || sgn(a(i, c)) == 0)
                    continue;
                const mpq_class f = a(i, c);
                for (std::size_t j = 0; j < n; ++j) {
                    a(i, j) -= f * a(c, j);
                    inv(i, j) -= f * inv(c, j);
                }
            }
        }
        return inv;
    }

private:
    void require_same_shape(const ExactMatrix& o, const char* op) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw InputError(std::string("matrix ") + op + ": shapes differ");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpq_class> data_;
};

inline ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b)
{
    ExactMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (sgn(a(i, j)) == 0)
                continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return out;
}

inline ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) { return a * b - b * a; }

} // namespace htop

#endif // SPRINGER_HTOP_EXACT_MATRIX_HPP
