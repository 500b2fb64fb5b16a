#pragma once

#include "klein4/automorphism.hpp"
#include "klein4/f2poly.hpp"
#include "klein4/int_matrix.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace klein4 {

/// The four degree-1 representations, as sign pairs (chi(a), chi(b)).
enum class Character { chi1, chi2, chi3, chi4 };

inline int character_sign_a(Character c) {
    return (c == Character::chi1 || c == Character::chi3) ? 1 : -1;
}
inline int character_sign_b(Character c) {
    return (c == Character::chi1 || c == Character::chi4) ? 1 : -1;
}
inline std::string character_name(Character c) {
    switch (c) {
        case Character::chi1: return "chi1";
        case Character::chi2: return "chi2";
        case Character::chi3: return "chi3";
        case Character::chi4: return "chi4";
    }
    throw std::logic_error("character_name");
}
inline Character character_from_name(const std::string& s) {
    if (s == "chi1") return Character::chi1;
    if (s == "chi2") return Character::chi2;
    if (s == "chi3") return Character::chi3;
    if (s == "chi4") return Character::chi4;
    throw std::invalid_argument("unknown character '" + s + "'");
}

/// Construction history of a representation: base constructor, its
/// parameters, and the ordered list of functorial operations applied
/// afterwards ("conj:<word>", "tensor:<chi>", "dual", "sum").
struct Provenance {
    std::string base;
    int n = 0;
    std::optional<F2Poly> f;
    std::vector<std::string> ops;
};

/// A pair of commuting integer involutions: the images of the generators
/// a and b of the Klein four-group. Immutable after construction.
class Representation {
public:
    Representation(IntMatrix a, IntMatrix b, Provenance prov)
        : a_(std::move(a)), b_(std::move(b)), prov_(std::move(prov)) {
        if (a_.rows() != a_.cols() || b_.rows() != b_.cols() || a_.rows() != b_.rows())
            throw std::invalid_argument("Representation: generator shape mismatch");
    }

    std::size_t degree() const { return a_.rows(); }
    const IntMatrix& gen_a() const { return a_; }
    const IntMatrix& gen_b() const { return b_; }
    const Provenance& provenance() const { return prov_; }

    /// Image of the involution with index 0 = a, 1 = b, 2 = ab.
    IntMatrix image(int g) const {
        switch (g) {
            case 0: return a_;
            case 1: return b_;
            case 2: return a_ * b_;
        }
        throw std::out_of_range("Representation: bad group element");
    }

    bool operator==(const Representation& o) const {
        return a_ == o.a_ && b_ == o.b_;
    }

    /// Checks the defining axioms A^2 = B^2 = E and AB = BA.
    bool validate() const {
        return (a_ * a_).is_identity() && (b_ * b_).is_identity() &&
               a_ * b_ == b_ * a_;
    }

    /// Faithful iff none of a, b, ab maps to the identity.
    bool is_faithful() const {
        return !a_.is_identity() && !b_.is_identity() && !(a_ * b_).is_identity();
    }

    std::string display_name() const {
        std::string s = base_display();
        for (const auto& op : prov_.ops) {
            if (op == "dual")
                s += "^*";
            else if (op.rfind("tensor:", 0) == 0)
                s += "@" + op.substr(7);
            else if (op.rfind("conj:", 0) == 0)
                s += "^{" + op.substr(5) + "}";
            else
                s += "." + op;
        }
        return s;
    }

private:
    std::string base_display() const {
        const std::string& b = prov_.base;
        if (b == "Delta_n") return "Delta_" + std::to_string(prov_.n);
        if (b == "Delta_n1") return "Delta_{" + std::to_string(prov_.n) + ",1}";
        if (b == "W_0" || b == "W_n") return "W_" + std::to_string(prov_.n);
        if (b == "T_n") return "T_" + std::to_string(prov_.n);
        if (b == "F") return "F[" + prov_.f->bitstring() + "]";
        if (b == "Fprime") return "F'[" + F2Poly::x_pow(prov_.n).bitstring() + "]";
        if (b.rfind("Delta_f", 0) == 0) return b + "[" + prov_.f->bitstring() + "]";
        if (b == "lemma3special") return "L3special_" + std::to_string(prov_.n);
        return b;  // regular, chi1..chi4, sum
    }

    IntMatrix a_, b_;
    Provenance prov_;
};

/// Gamma^phi(g) = Gamma(phi(g)). Satisfies the right-action law
/// conjugate(Gamma, phi*psi) = conjugate(conjugate(Gamma, phi), psi).
inline Representation conjugate(const Representation& rep, const Automorphism& phi) {
    Provenance p = rep.provenance();
    if (!phi.is_identity()) p.ops.push_back("conj:" + phi.word_string());
    return Representation(rep.image(phi.image(0)), rep.image(phi.image(1)), std::move(p));
}

/// Gamma*(g) = Gamma(g^{-1})^T; every group element is an involution, so
/// this is just entrywise transposition of the generator images.
inline Representation contragredient(const Representation& rep) {
    Provenance p = rep.provenance();
    p.ops.push_back("dual");
    return Representation(rep.gen_a().transpose(), rep.gen_b().transpose(), std::move(p));
}

/// (Gamma (x) chi)(g) = chi(g) Gamma(g).
inline Representation tensor_character(const Representation& rep, Character chi) {
    Provenance p = rep.provenance();
    p.ops.push_back("tensor:" + character_name(chi));
    IntMatrix a = rep.gen_a(), b = rep.gen_b();
    if (character_sign_a(chi) < 0) a = -a;
    if (character_sign_b(chi) < 0) b = -b;
    return Representation(std::move(a), std::move(b), std::move(p));
}

inline Representation direct_sum(const Representation& r1, const Representation& r2) {
    Provenance p;
    p.base = "sum(" + r1.display_name() + "," + r2.display_name() + ")";
    p.ops.push_back("sum");
    IntMatrix a = assemble_blocks({r1.gen_a(), r2.gen_a()}, {});
    IntMatrix b = assemble_blocks({r1.gen_b(), r2.gen_b()}, {});
    return Representation(std::move(a), std::move(b), std::move(p));
}

}  // namespace klein4
