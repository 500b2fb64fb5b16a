#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace klein4 {

/// An automorphism of the Klein four-group G = <a, b>, i.e. a permutation of
/// the three involutions a, b, ab. The full group is S3, generated by
/// s1 (a <-> b) and s2 (b <-> ab). Words multiply as function composition:
/// (phi * psi)(g) = phi(psi(g)).
class Automorphism {
public:
    Automorphism() : perm_{0, 1, 2} {}

    static Automorphism id() { return Automorphism({0, 1, 2}); }
    static Automorphism s1() { return Automorphism({1, 0, 2}); }
    static Automorphism s2() { return Automorphism({0, 2, 1}); }

    /// The six elements in canonical order: id, s1, s2, s1.s2, s2.s1, s1.s2.s1.
    static const std::array<Automorphism, 6>& all() {
        static const std::array<Automorphism, 6> elems = {
            id(), s1(), s2(), s1() * s2(), s2() * s1(), s1() * s2() * s1()};
        return elems;
    }

    /// Image of generator index 0 = a, 1 = b, 2 = ab.
    int image(int g) const {
        if (g < 0 || g > 2) throw std::out_of_range("Automorphism: bad generator");
        return perm_[static_cast<std::size_t>(g)];
    }

    friend Automorphism operator*(const Automorphism& phi, const Automorphism& psi) {
        return Automorphism({phi.perm_[static_cast<std::size_t>(psi.perm_[0])],
                             phi.perm_[static_cast<std::size_t>(psi.perm_[1])],
                             phi.perm_[static_cast<std::size_t>(psi.perm_[2])]});
    }

    Automorphism inverse() const {
        std::array<std::uint8_t, 3> inv{};
        for (std::uint8_t i = 0; i < 3; ++i) inv[perm_[i]] = i;
        return Automorphism(inv);
    }

    bool operator==(const Automorphism& o) const { return perm_ == o.perm_; }
    bool operator!=(const Automorphism& o) const { return perm_ != o.perm_; }
    bool is_identity() const { return perm_ == std::array<std::uint8_t, 3>{0, 1, 2}; }

    /// Index into the canonical order (0..5).
    int canonical_index() const {
        const auto& elems = all();
        for (int i = 0; i < 6; ++i)
            if (elems[static_cast<std::size_t>(i)] == *this) return i;
        throw std::logic_error("Automorphism: not in canonical list");
    }

    /// Reduced word over {1, 2}, written left to right; empty for the identity.
    std::vector<int> word() const {
        static const std::vector<int> words[6] = {{}, {1}, {2}, {1, 2}, {2, 1}, {1, 2, 1}};
        return words[canonical_index()];
    }

    /// Canonical word as text: "id", "s1", "s2", "s1.s2", "s2.s1", "s1.s2.s1".
    std::string word_string() const {
        auto w = word();
        if (w.empty()) return "id";
        std::string s;
        for (std::size_t i = 0; i < w.size(); ++i)
            s += (i ? "." : "") + std::string("s") + std::to_string(w[i]);
        return s;
    }

    /// Parses "id", "" or dot-joined generator names such as "s1.s2.s1".
    static Automorphism from_word(const std::string& text) {
        if (text.empty() || text == "id") return id();
        Automorphism result = id();
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t dot = text.find('.', pos);
            std::string tok = text.substr(pos, dot == std::string::npos ? dot : dot - pos);
            if (tok == "s1")
                result = result * s1();
            else if (tok == "s2")
                result = result * s2();
            else
                throw std::invalid_argument("Automorphism: bad word token '" + tok + "'");
            if (dot == std::string::npos) break;
            pos = dot + 1;
        }
        return result;
    }

private:
    explicit Automorphism(std::array<std::uint8_t, 3> perm) : perm_(perm) {}

    std::array<std::uint8_t, 3> perm_;
};

}  // namespace klein4
