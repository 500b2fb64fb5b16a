#pragma once

#include "klein4/automorphism.hpp"
#include "klein4/int_matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace klein4 {

/// Polynomial over GF(2), coefficients packed into a 64-bit word
/// (bit i = coefficient of x^i). Degrees above 63 are rejected; the
/// classification never needs anything close to that.
class F2Poly {
public:
    F2Poly() : bits_(0) {}
    explicit F2Poly(std::uint64_t bits) : bits_(bits) {}

    static F2Poly zero() { return F2Poly(0); }
    static F2Poly one() { return F2Poly(1); }
    static F2Poly x() { return F2Poly(2); }

    /// x^n
    static F2Poly x_pow(int n) {
        check_degree(n);
        return F2Poly(std::uint64_t(1) << n);
    }

    /// (x+1)^n
    static F2Poly x_plus_1_pow(int n) {
        F2Poly r = one();
        for (int i = 0; i < n; ++i) r = r * F2Poly(3);
        return r;
    }

    std::uint64_t bits() const { return bits_; }
    bool is_zero() const { return bits_ == 0; }

    /// Degree; -1 for the zero polynomial. Every nonzero polynomial over
    /// GF(2) is monic.
    int degree() const {
        if (bits_ == 0) return -1;
        return 63 - __builtin_clzll(bits_);
    }

    bool coeff(int i) const { return i >= 0 && i < 64 && ((bits_ >> i) & 1u); }

    bool operator==(const F2Poly& o) const { return bits_ == o.bits_; }
    bool operator!=(const F2Poly& o) const { return bits_ != o.bits_; }
    bool operator<(const F2Poly& o) const {
        return bitstring() < o.bitstring();  // lexicographic, lowest degree first
    }

    friend F2Poly operator+(const F2Poly& a, const F2Poly& b) {
        return F2Poly(a.bits_ ^ b.bits_);
    }

    friend F2Poly operator*(const F2Poly& a, const F2Poly& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        check_degree(a.degree() + b.degree());
        std::uint64_t r = 0;
        std::uint64_t bb = b.bits_;
        for (int i = 0; bb; ++i, bb >>= 1)
            if (bb & 1u) r ^= a.bits_ << i;
        return F2Poly(r);
    }

    /// Quotient and remainder of division by a nonzero polynomial.
    std::pair<F2Poly, F2Poly> divmod(const F2Poly& d) const {
        if (d.is_zero()) throw std::domain_error("F2Poly: division by zero");
        std::uint64_t rem = bits_, quot = 0;
        const int dd = d.degree();
        while (rem != 0) {
            int rd = 63 - __builtin_clzll(rem);
            if (rd < dd) break;
            quot |= std::uint64_t(1) << (rd - dd);
            rem ^= d.bits_ << (rd - dd);
        }
        return {F2Poly(quot), F2Poly(rem)};
    }

    F2Poly mod(const F2Poly& d) const { return divmod(d).second; }
    bool divides(const F2Poly& f) const { return f.divmod(*this).second.is_zero(); }

    F2Poly pow(int k) const {
        F2Poly r = one();
        for (int i = 0; i < k; ++i) r = r * (*this);
        return r;
    }

    /// Reciprocal x^n f(1/x) with n = deg f: the coefficient string reversed.
    /// Drops degree when f(0) = 0; computed literally.
    F2Poly reciprocal() const {
        if (is_zero()) throw std::domain_error("F2Poly: reciprocal of zero");
        std::uint64_t r = 0;
        const int n = degree();
        for (int i = 0; i <= n; ++i)
            if (coeff(i)) r |= std::uint64_t(1) << (n - i);
        return F2Poly(r);
    }

    /// Substitution f(x+1).
    F2Poly shift_by_one() const {
        F2Poly r = zero();
        const F2Poly xp1(3);
        for (int i = degree(); i >= 0; --i) {
            r = r * xp1;
            if (coeff(i)) r = r + one();
        }
        return r;
    }

    /// Coefficient string, lowest degree first: x^2+x+1 <-> "111", x^2 <-> "001".
    std::string bitstring() const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = 0; i <= degree(); ++i) s += coeff(i) ? '1' : '0';
        return s;
    }

    std::string human() const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            if (!coeff(i)) continue;
            if (!s.empty()) s += "+";
            if (i == 0)
                s += "1";
            else if (i == 1)
                s += "x";
            else
                s += "x^" + std::to_string(i);
        }
        return s;
    }

    /// Parses either the bitstring form ("111", lowest degree first) or the
    /// human form ("x^2+x+1").
    static F2Poly parse(const std::string& text) {
        if (text.empty()) throw std::invalid_argument("F2Poly: empty input");
        bool bitlike = true;
        for (char c : text)
            if (c != '0' && c != '1') { bitlike = false; break; }
        if (bitlike) {
            if (text.size() > 64)
                throw std::invalid_argument("F2Poly: bitstring too long");
            std::uint64_t bits = 0;
            for (std::size_t i = 0; i < text.size(); ++i)
                if (text[i] == '1') bits |= std::uint64_t(1) << i;
            return F2Poly(bits);
        }
        F2Poly r = zero();
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t plus = text.find('+', pos);
            std::string tok = text.substr(pos, plus == std::string::npos ? plus : plus - pos);
            while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
            while (!tok.empty() && tok.back() == ' ') tok.pop_back();
            if (tok == "1")
                r = r + one();
            else if (tok == "x")
                r = r + x();
            else if (tok.rfind("x^", 0) == 0)
                r = r + x_pow(std::stoi(tok.substr(2)));
            else
                throw std::invalid_argument("F2Poly: bad term '" + tok + "'");
            if (plus == std::string::npos) break;
            pos = plus + 1;
        }
        return r;
    }

private:
    static void check_degree(int n) {
        if (n < 0 || n > 63) throw std::domain_error("F2Poly: degree out of range");
    }

    std::uint64_t bits_;
};

/// True when f has no proper monic divisor (degree >= 1 required).
inline bool f2_irreducible(const F2Poly& f) {
    const int n = f.degree();
    if (n < 1) return false;
    for (int d = 1; 2 * d <= n; ++d)
        for (std::uint64_t low = 0; low < (std::uint64_t(1) << d); ++low) {
            F2Poly g(low | (std::uint64_t(1) << d));
            if (g.divides(f)) return false;
        }
    return true;
}

/// Membership in M_n: f is irreducible of degree >= 2, or a power of a
/// nonlinear irreducible. Degree-1 polynomials are excluded (M_1 is empty).
inline bool in_Mn(const F2Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("in_Mn: zero polynomial");
    const int n = f.degree();
    if (n < 2) return false;
    if (F2Poly::x().divides(f) || F2Poly(3).divides(f)) return false;  // linear factor
    // smallest-degree irreducible divisor, then repeated exact division
    for (int d = 2; d <= n; ++d) {
        for (std::uint64_t low = 0; low < (std::uint64_t(1) << d); ++low) {
            F2Poly g(low | (std::uint64_t(1) << d));
            if (!g.divides(f)) continue;
            if (!f2_irreducible(g)) continue;
            F2Poly rest = f;
            while (rest.degree() > 0) {
                auto [q, r] = rest.divmod(g);
                if (!r.is_zero()) return false;
                rest = q;
            }
            return rest == F2Poly::one();
        }
    }
    return false;
}

/// All members of M_n, sorted by coefficient bitstring (lowest degree first).
inline std::vector<F2Poly> enumerate_Mn(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_Mn: n must be >= 1");
    if (n > 24) throw std::domain_error("enumerate_Mn: n too large for exhaustive scan");
    std::vector<F2Poly> out;
    for (std::uint64_t low = 0; low < (std::uint64_t(1) << n); ++low) {
        F2Poly f(low | (std::uint64_t(1) << n));
        if (in_Mn(f)) out.push_back(f);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Action of Aut(G) on polynomials: s1 is the reciprocal, s2 the shift by 1.
/// The word acts right-to-left, so apply_sigma(f, phi*psi) equals
/// apply_sigma(apply_sigma(f, psi), phi).
inline F2Poly apply_sigma(const F2Poly& f, const Automorphism& phi) {
    if (f.is_zero()) throw std::invalid_argument("apply_sigma: zero polynomial");
    auto w = phi.word();
    F2Poly r = f;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        r = (*it == 1) ? r.reciprocal() : r.shift_by_one();
    return r;
}

/// Stabilizer St[f] = { phi : f^phi = f } as a subset of the canonical six.
inline std::vector<Automorphism> poly_stabilizer(const F2Poly& f) {
    std::vector<Automorphism> st;
    for (const auto& phi : Automorphism::all())
        if (apply_sigma(f, phi) == f) st.push_back(phi);
    return st;
}

struct OrbitRecord {
    std::vector<F2Poly> members;          // sorted by bitstring
    F2Poly representative;                // lexicographically least member
    std::vector<Automorphism> stabilizer; // St[representative]
};

/// Partition of M_n into Aut(G)-orbits. Each record satisfies
/// |members| * |stabilizer| = 6.
inline std::vector<OrbitRecord> orbits(int n) {
    std::vector<F2Poly> mn = enumerate_Mn(n);
    std::vector<OrbitRecord> out;
    std::vector<bool> seen(mn.size(), false);
    for (std::size_t i = 0; i < mn.size(); ++i) {
        if (seen[i]) continue;
        OrbitRecord rec;
        for (const auto& phi : Automorphism::all()) {
            F2Poly g = apply_sigma(mn[i], phi);
            if (std::find(rec.members.begin(), rec.members.end(), g) == rec.members.end())
                rec.members.push_back(g);
        }
        std::sort(rec.members.begin(), rec.members.end());
        for (const auto& g : rec.members) {
            auto it = std::lower_bound(mn.begin(), mn.end(), g);
            if (it == mn.end() || *it != g)
                throw std::logic_error("orbits: action left M_n");
            seen[static_cast<std::size_t>(it - mn.begin())] = true;
        }
        rec.representative = rec.members.front();
        rec.stabilizer = poly_stabilizer(rec.representative);
        if (rec.members.size() * rec.stabilizer.size() != 6)
            throw std::logic_error("orbits: orbit-stabilizer mismatch");
        out.push_back(std::move(rec));
    }
    return out;
}

/// Companion matrix of a monic f of degree n >= 1, entries lifted to the
/// integers: ones on the subdiagonal, last column carrying the coefficients
/// of x^n - a_{n-1} x^{n-1} - ... - a_0 read over GF(2).
inline IntMatrix companion(const F2Poly& f) {
    const int n = f.degree();
    if (n < 1) throw std::invalid_argument("companion: degree must be >= 1");
    IntMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 1; i < n; ++i) m(static_cast<std::size_t>(i), static_cast<std::size_t>(i - 1)) = 1;
    for (int i = 0; i < n; ++i)
        if (f.coeff(i)) m(static_cast<std::size_t>(i), static_cast<std::size_t>(n - 1)) = 1;
    return m;
}

}  // namespace klein4
