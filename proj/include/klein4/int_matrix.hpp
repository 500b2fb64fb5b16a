#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace klein4 {

/// Exact integer scalar. Unbounded magnitude, so intermediate growth in
/// Hermite-form and Bareiss eliminations can never wrap around.
using Int = boost::multiprecision::cpp_int;

/// Dense matrix of exact integers, row-major. Empty shapes (0 rows or
/// 0 columns) are first-class values; block constructions degenerate to
/// them naturally.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}

    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    IntMatrix(std::initializer_list<std::initializer_list<long long>> init)
        : rows_(init.size()), cols_(0) {
        for (const auto& row : init) {
            if (cols_ == 0) cols_ = row.size();
            if (row.size() != cols_)
                throw std::invalid_argument("IntMatrix: ragged initializer");
            for (long long v : row) data_.emplace_back(v);
        }
        if (rows_ > 0 && cols_ == 0) data_.clear();
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    /// sign * identity, used for the +-E_n diagonal blocks.
    static IntMatrix scaled_identity(std::size_t n, long long sign) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = sign;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Int& operator()(std::size_t i, std::size_t j) {
        check_index(i, j);
        return data_[i * cols_ + j];
    }
    const Int& operator()(std::size_t i, std::size_t j) const {
        check_index(i, j);
        return data_[i * cols_ + j];
    }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_identity() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
        return true;
    }

    bool is_zero() const {
        for (const auto& v : data_)
            if (v != 0) return false;
        return true;
    }

    /// True when every entry is divisible by d.
    bool divisible_by(long long d) const {
        for (const auto& v : data_)
            if (v % d != 0) return false;
        return true;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("IntMatrix: product shape mismatch");
        IntMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Int& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const Int& bkj = b(k, j);
                    if (bkj != 0) c(i, j) += aik * bkj;
                }
            }
        return c;
    }

    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("IntMatrix: sum shape mismatch");
        IntMatrix c = a;
        for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
        return c;
    }

    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("IntMatrix: difference shape mismatch");
        IntMatrix c = a;
        for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
        return c;
    }

    friend IntMatrix operator-(const IntMatrix& a) {
        IntMatrix c = a;
        for (auto& v : c.data_) v = -v;
        return c;
    }

    friend IntMatrix operator*(long long s, const IntMatrix& a) {
        IntMatrix c = a;
        for (auto& v : c.data_) v *= s;
        return c;
    }

    /// Entrywise exact division; throws if any entry is not divisible.
    IntMatrix divided_by(long long d) const {
        IntMatrix c = *this;
        for (auto& v : c.data_) {
            if (v % d != 0)
                throw std::domain_error("IntMatrix: inexact division");
            v /= d;
        }
        return c;
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            s += (i ? "; " : "");
            for (std::size_t j = 0; j < cols_; ++j)
                s += (j ? "," : "") + (*this)(i, j).str();
        }
        return s + "]";
    }

private:
    void check_index(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_)
            throw std::out_of_range("IntMatrix: index out of range");
    }

    std::size_t rows_, cols_;
    std::vector<Int> data_;
};

/// Exact determinant by fraction-free Bareiss elimination.
inline Int det(const IntMatrix& a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("det: matrix not square");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    IntMatrix m = a;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                m(i, j) = num / prev;  // exact by Bareiss identity
            }
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

/// Assembles a block matrix from square diagonal blocks and a list of
/// off-diagonal placements (row block, col block, matrix), 0-indexed.
/// Row/column partitions both come from the diagonal block sizes, so
/// every placement is shape-checked against the grid.
inline IntMatrix assemble_blocks(
    const std::vector<IntMatrix>& diag,
    const std::vector<std::tuple<std::size_t, std::size_t, IntMatrix>>& off) {
    std::vector<std::size_t> offset(diag.size() + 1, 0);
    for (std::size_t b = 0; b < diag.size(); ++b) {
        if (diag[b].rows() != diag[b].cols())
            throw std::invalid_argument("assemble_blocks: diagonal block not square");
        offset[b + 1] = offset[b] + diag[b].rows();
    }
    IntMatrix m(offset.back(), offset.back());
    for (std::size_t b = 0; b < diag.size(); ++b)
        for (std::size_t i = 0; i < diag[b].rows(); ++i)
            for (std::size_t j = 0; j < diag[b].cols(); ++j)
                m(offset[b] + i, offset[b] + j) = diag[b](i, j);
    for (const auto& [rb, cb, blk] : off) {
        if (rb >= diag.size() || cb >= diag.size())
            throw std::invalid_argument("assemble_blocks: block index out of range");
        if (blk.rows() != diag[rb].rows() || blk.cols() != diag[cb].cols())
            throw std::invalid_argument("assemble_blocks: off-diagonal shape mismatch");
        for (std::size_t i = 0; i < blk.rows(); ++i)
            for (std::size_t j = 0; j < blk.cols(); ++j)
                m(offset[rb] + i, offset[cb] + j) = blk(i, j);
    }
    return m;
}

}  // namespace klein4
