#pragma once

#include "klein4/f2_matrix.hpp"
#include "klein4/f2poly.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace klein4 {

/// Characteristic polynomial of a square matrix over GF(2), computed via
/// Hessenberg reduction and the leading-minor recurrence.
inline F2Poly f2_charpoly(const F2Matrix& a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("f2_charpoly: matrix not square");
    const std::size_t n = a.rows();
    if (n > 63) throw std::domain_error("f2_charpoly: dimension too large");
    F2Matrix h = a;
    // similarity reduction to upper Hessenberg form
    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t piv = j + 1;
        while (piv < n && !h.get(piv, j)) ++piv;
        if (piv == n) continue;
        if (piv != j + 1) {
            h.swap_rows(j + 1, piv);
            for (std::size_t i = 0; i < n; ++i) {  // matching column swap
                bool t = h.get(i, j + 1);
                h.set(i, j + 1, h.get(i, piv));
                h.set(i, piv, t);
            }
        }
        for (std::size_t i = j + 2; i < n; ++i) {
            if (!h.get(i, j)) continue;
            h.xor_row(i, j + 1);
            for (std::size_t k = 0; k < n; ++k)  // inverse column op
                if (h.get(k, i)) h.set(k, j + 1, !h.get(k, j + 1));
        }
    }
    // p_k = (lambda + h_{k,k}) p_{k-1} + sum_i h_{i,k} (prod subdiag) p_{i-1}
    std::vector<F2Poly> p(n + 1);
    p[0] = F2Poly::one();
    for (std::size_t k = 1; k <= n; ++k) {
        F2Poly term = (F2Poly::x() + (h.get(k - 1, k - 1) ? F2Poly::one() : F2Poly::zero())) *
                      p[k - 1];
        bool subdiag = true;
        for (std::size_t i = k - 1; i-- > 0;) {
            subdiag = subdiag && h.get(i + 1, i);
            if (!subdiag) break;
            if (h.get(i, k - 1)) term = term + p[i];
        }
        p[k] = term;
    }
    return p[n];
}

/// Coefficient c_i of the characteristic polynomial in elementary-symmetric
/// indexing: c_i = coefficient of lambda^{n-i}.
inline bool f2_charpoly_coeff(const F2Poly& chi, std::size_t n, std::size_t i) {
    return chi.coeff(static_cast<int>(n - i));
}

namespace detail {

inline F2Matrix flatten_row(const F2Matrix& x) {
    F2Matrix f(1, x.rows() * x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            if (x.get(i, j)) f.set(0, i * x.cols() + j, true);
    return f;
}

inline F2Matrix flatten_all(const std::vector<F2Matrix>& xs, std::size_t m) {
    F2Matrix f(xs.size(), m * m);
    for (std::size_t r = 0; r < xs.size(); ++r)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (xs[r].get(i, j)) f.set(r, i * m + j, true);
    return f;
}

/// Expresses x in a spanning list (rows of span_flat, entries of span),
/// returning the coefficient vector; throws if x lies outside the span.
inline std::vector<bool> span_coordinates(const std::vector<F2Matrix>& span,
                                          const F2Matrix& x, std::size_t m) {
    const std::size_t r = span.size(), w = m * m;
    F2Matrix work(r, w + r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b)
                if (span[i].get(a, b)) work.set(i, a * m + b, true);
        work.set(i, w + i, true);
    }
    F2Matrix target = flatten_row(x);
    std::vector<bool> combo(r, false);
    std::size_t row = 0;
    for (std::size_t col = 0; col < w && row < r; ++col) {
        std::size_t p = row;
        while (p < r && !work.get(p, col)) ++p;
        if (p == r) {
            if (target.get(0, col))
                throw std::invalid_argument("span_coordinates: element outside span");
            continue;
        }
        work.swap_rows(row, p);
        for (std::size_t i = 0; i < r; ++i)
            if (i != row && work.get(i, col)) work.xor_row(i, row);
        if (target.get(0, col)) {
            for (std::size_t j = 0; j < w; ++j)
                if (work.get(row, j)) target.set(0, j, !target.get(0, j));
            for (std::size_t i = 0; i < r; ++i)
                if (work.get(row, w + i)) combo[i] = !combo[i];
        }
        ++row;
    }
    if (!target.is_zero())
        throw std::invalid_argument("span_coordinates: element outside span");
    return combo;
}

}  // namespace detail

/// A unital subalgebra of M_m(F2) given by an independent spanning set.
class F2Algebra {
public:
    F2Algebra(std::vector<F2Matrix> basis, std::size_t m) : m_(m), basis_(std::move(basis)) {
        F2Matrix flat = detail::flatten_all(basis_, m_);
        if (flat.rank() != basis_.size())
            throw std::invalid_argument("F2Algebra: spanning set not independent");
        auto [rank, rref] = f2_row_space(flat);
        rref_ = rref;
        if (!contains(F2Matrix::identity(m_)))
            throw std::invalid_argument("F2Algebra: identity not in span");
        for (const auto& x : basis_)
            for (const auto& y : basis_)
                if (!contains(x * y))
                    throw std::invalid_argument("F2Algebra: span not closed under product");
    }

    std::size_t dim() const { return basis_.size(); }
    std::size_t m() const { return m_; }
    const std::vector<F2Matrix>& basis() const { return basis_; }

    bool contains(const F2Matrix& x) const {
        return f2_rows_contained(rref_, detail::flatten_row(x));
    }

    /// Jacobson radical as a matrix basis. Characteristic-2 chain: iterated
    /// kernels of the functionals x -> c_{2^k}(x y) for 2^k <= m, with y
    /// running over the previous layer.
    std::vector<F2Matrix> radical() const {
        std::vector<F2Matrix> layer = basis_;
        for (std::size_t k = 0; (std::size_t(1) << k) <= m_; ++k) {
            if (layer.empty()) break;
            const std::size_t ci = std::size_t(1) << k;
            const std::size_t r = layer.size();
            // work rows = candidate coefficient vectors; columns 0..r-1 hold
            // the functional values against each y, then the identity tail
            F2Matrix work(r, 2 * r);
            for (std::size_t x = 0; x < r; ++x) {
                for (std::size_t y = 0; y < r; ++y) {
                    F2Poly chi = f2_charpoly(layer[x] * layer[y]);
                    work.set(x, y, f2_charpoly_coeff(chi, m_, ci));
                }
                work.set(x, r + x, true);
            }
            std::size_t row = 0;
            for (std::size_t col = 0; col < r && row < r; ++col) {
                std::size_t p = row;
                while (p < r && !work.get(p, col)) ++p;
                if (p == r) continue;
                work.swap_rows(row, p);
                for (std::size_t i = 0; i < r; ++i)
                    if (i != row && work.get(i, col)) work.xor_row(i, row);
                ++row;
            }
            std::vector<F2Matrix> next;
            for (std::size_t i = row; i < r; ++i) {
                F2Matrix z(m_, m_);
                for (std::size_t j = 0; j < r; ++j)
                    if (work.get(i, r + j)) z.xor_with(layer[j]);
                if (!z.is_zero()) next.push_back(std::move(z));
            }
            layer = std::move(next);
        }
        return layer;
    }

    /// Local means no idempotents besides 0 and 1: the quotient by the
    /// radical must be a finite field, i.e. commutative with a
    /// one-dimensional Frobenius fixed space (spanned by the primitive
    /// idempotents).
    bool is_local() const {
        std::vector<F2Matrix> rad = radical();
        auto [radrank, radrref] = f2_row_space(detail::flatten_all(rad, m_));

        std::vector<F2Matrix> qbasis;  // representatives of a quotient basis
        F2Matrix accum = radrref;
        std::size_t accum_rank = radrank;
        for (const auto& b : basis_) {
            F2Matrix candidate = F2Matrix::stack(accum, detail::flatten_row(b));
            auto [crank, crref] = f2_row_space(candidate);
            if (crank > accum_rank) {
                qbasis.push_back(b);
                accum = crref;
                accum_rank = crank;
            }
        }
        const std::size_t d = qbasis.size();
        if (d == 0) throw std::logic_error("F2Algebra: radical contains identity");
        if (d == 1) return true;  // quotient is F2

        // commutativity of the quotient: matrix blocks in the semisimple
        // part would make the algebra non-local anyway
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j) {
                F2Matrix comm = qbasis[i] * qbasis[j];
                comm.xor_with(qbasis[j] * qbasis[i]);
                if (!f2_rows_contained(radrref, detail::flatten_row(comm))) return false;
            }

        // Frobenius fixed space of the quotient
        std::vector<F2Matrix> full = rad;
        full.insert(full.end(), qbasis.begin(), qbasis.end());
        F2Matrix frob(d, d);
        for (std::size_t i = 0; i < d; ++i) {
            std::vector<bool> sq = detail::span_coordinates(full, qbasis[i] * qbasis[i], m_);
            for (std::size_t j = 0; j < d; ++j) frob.set(i, j, sq[rad.size() + j]);
        }
        for (std::size_t i = 0; i < d; ++i) frob.set(i, i, !frob.get(i, i));  // Frob + id
        return d - frob.rank() == 1;
    }

private:
    std::size_t m_;
    std::vector<F2Matrix> basis_;
    F2Matrix rref_;
};

}  // namespace klein4
