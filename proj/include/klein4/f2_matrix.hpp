#pragma once

#include "klein4/int_matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace klein4 {

/// Dense matrix over the two-element field, rows packed into 64-bit words.
class F2Matrix {
public:
    F2Matrix() : rows_(0), cols_(0), words_(0) {}

    F2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_((cols + 63) / 64),
          data_(rows * words_, 0) {}

    static F2Matrix identity(std::size_t n) {
        F2Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    /// Entrywise reduction mod 2 of an integer matrix.
    static F2Matrix from_mod2(const IntMatrix& a) {
        F2Matrix m(a.rows(), a.cols());
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j)
                if (a(i, j) % 2 != 0) m.set(i, j, true);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t i, std::size_t j) const {
        check_index(i, j);
        return (data_[i * words_ + j / 64] >> (j % 64)) & 1u;
    }

    void set(std::size_t i, std::size_t j, bool v) {
        check_index(i, j);
        std::uint64_t& w = data_[i * words_ + j / 64];
        if (v)
            w |= std::uint64_t(1) << (j % 64);
        else
            w &= ~(std::uint64_t(1) << (j % 64));
    }

    bool operator==(const F2Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const F2Matrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (auto w : data_)
            if (w) return false;
        return true;
    }

    bool row_is_zero(std::size_t i) const {
        for (std::size_t w = 0; w < words_; ++w)
            if (data_[i * words_ + w]) return false;
        return true;
    }

    void xor_row(std::size_t dst, std::size_t src) {
        for (std::size_t w = 0; w < words_; ++w)
            data_[dst * words_ + w] ^= data_[src * words_ + w];
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t w = 0; w < words_; ++w)
            std::swap(data_[i * words_ + w], data_[j * words_ + w]);
    }

    /// XOR another full matrix of identical shape into this one.
    void xor_with(const F2Matrix& o) {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("F2Matrix: xor shape mismatch");
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] ^= o.data_[k];
    }

    friend F2Matrix operator*(const F2Matrix& a, const F2Matrix& b) {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("F2Matrix: product shape mismatch");
        F2Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
                if (a.get(i, k))
                    for (std::size_t w = 0; w < b.words_; ++w)
                        c.data_[i * c.words_ + w] ^= b.data_[k * b.words_ + w];
        return c;
    }

    F2Matrix transpose() const {
        F2Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (get(i, j)) t.set(j, i, true);
        return t;
    }

    /// Vertical stack: rows of a above rows of b (equal column counts).
    static F2Matrix stack(const F2Matrix& a, const F2Matrix& b) {
        if (a.cols_ != b.cols_)
            throw std::invalid_argument("F2Matrix: stack width mismatch");
        F2Matrix s(a.rows_ + b.rows_, a.cols_);
        s.data_ = a.data_;
        s.data_.insert(s.data_.end(), b.data_.begin(), b.data_.end());
        return s;
    }

    /// In-place reduction to reduced row echelon form; returns the rank.
    std::size_t rref() {
        std::size_t r = 0;
        for (std::size_t j = 0; j < cols_ && r < rows_; ++j) {
            std::size_t p = r;
            while (p < rows_ && !get(p, j)) ++p;
            if (p == rows_) continue;
            swap_rows(r, p);
            for (std::size_t i = 0; i < rows_; ++i)
                if (i != r && get(i, j)) xor_row(i, r);
            ++r;
        }
        return r;
    }

    std::size_t rank() const {
        F2Matrix m = *this;
        return m.rref();
    }

    bool invertible() const { return rows_ == cols_ && rank() == rows_; }

private:
    void check_index(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_)
            throw std::out_of_range("F2Matrix: index out of range");
    }

    std::size_t rows_, cols_, words_;
    std::vector<std::uint64_t> data_;
};

/// Row space of X over GF(2): rank plus an rref basis (nonzero rows only).
inline std::pair<std::size_t, F2Matrix> f2_row_space(const F2Matrix& x) {
    F2Matrix m = x;
    std::size_t r = m.rref();
    F2Matrix basis(r, x.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            if (m.get(i, j)) basis.set(i, j, true);
    return {r, basis};
}

/// True when every row of v lies in the row space of space_rref
/// (space_rref must already be in reduced echelon form).
inline bool f2_rows_contained(const F2Matrix& space_rref, const F2Matrix& v) {
    if (space_rref.cols() != v.cols())
        throw std::invalid_argument("f2_rows_contained: width mismatch");
    for (std::size_t i = 0; i < v.rows(); ++i) {
        F2Matrix row(1, v.cols());
        for (std::size_t j = 0; j < v.cols(); ++j) row.set(0, j, v.get(i, j));
        for (std::size_t p = 0; p < space_rref.rows(); ++p) {
            // leading column of pivot row p
            std::size_t lead = space_rref.cols();
            for (std::size_t j = 0; j < space_rref.cols(); ++j)
                if (space_rref.get(p, j)) { lead = j; break; }
            if (lead < space_rref.cols() && row.get(0, lead)) {
                for (std::size_t j = 0; j < v.cols(); ++j)
                    if (space_rref.get(p, j)) row.set(0, j, !row.get(0, j));
            }
        }
        if (!row.is_zero()) return false;
    }
    return true;
}

}  // namespace klein4
