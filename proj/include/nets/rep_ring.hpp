#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "nets/rational.hpp"

namespace nets {

/// Integer weight triple of a one-parameter subgroup of the 3-torus.
using WeightVector = std::array<long, 3>;

/// Coordinate permutation acting on the torus characters; perm[i] is the
/// image of index i.
using Perm = std::array<int, 3>;

inline const std::array<Perm, 6>& all_perms() {
    static const std::array<Perm, 6> perms = {{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    return perms;
}

/// A character of the 3-torus with exact rational exponents: the exponent
/// of lambda_i is e[i]. Half-integer exponents arise from double covers.
class Character {
public:
    Character() : e_{Rational(0), Rational(0), Rational(0)} {}
    Character(Rational a, Rational b, Rational c) : e_{std::move(a), std::move(b), std::move(c)} {}

    static Character lambda(int i) {
        Character c;
        c.e_[static_cast<size_t>(i)] = Rational(1);
        return c;
    }

    const Rational& exponent(int i) const { return e_[static_cast<size_t>(i)]; }
    bool is_trivial() const { return e_[0].is_zero() && e_[1].is_zero() && e_[2].is_zero(); }

    Character operator*(const Character& o) const {
        return Character(e_[0] + o.e_[0], e_[1] + o.e_[1], e_[2] + o.e_[2]);
    }
    Character inverse() const { return Character(-e_[0], -e_[1], -e_[2]); }
    Character pow(const Rational& k) const { return Character(e_[0] * k, e_[1] * k, e_[2] * k); }

    /// The image under x_i -> x_{g(i)}: exponents are pulled back along g.
    Character permuted(const Perm& g) const {
        Character c;
        for (int i = 0; i < 3; ++i) c.e_[static_cast<size_t>(g[static_cast<size_t>(i)])] = e_[static_cast<size_t>(i)];
        return c;
    }

    Rational weight(const WeightVector& w) const {
        return e_[0] * Rational(w[0]) + e_[1] * Rational(w[1]) + e_[2] * Rational(w[2]);
    }

    bool operator==(const Character& o) const { return e_ == o.e_; }
    bool operator<(const Character& o) const {
        for (int i = 0; i < 3; ++i) {
            if (e_[static_cast<size_t>(i)] != o.e_[static_cast<size_t>(i)])
                return e_[static_cast<size_t>(i)] < o.e_[static_cast<size_t>(i)];
        }
        return false;
    }

    std::string to_string() const {
        std::string s;
        for (int i = 0; i < 3; ++i) {
            if (e_[static_cast<size_t>(i)].is_zero()) continue;
            if (!s.empty()) s += " ";
            s += "L" + std::to_string(i);
            if (e_[static_cast<size_t>(i)] != Rational(1)) s += "^" + e_[static_cast<size_t>(i)].to_string();
        }
        return s.empty() ? "1" : s;
    }

private:
    std::array<Rational, 3> e_;
};

/// Finite integer combination of characters: an element of the orbifold
/// representation ring of the 3-torus. Multiplicities may be negative;
/// zero multiplicities are never stored.
class VirtualRep {
public:
    VirtualRep() = default;
    VirtualRep(const Character& c, long mult = 1) { add(c, mult); }
    static VirtualRep one() { return VirtualRep(Character()); }
    static VirtualRep zero() { return VirtualRep(); }

    void add(const Character& c, long mult) {
        if (mult == 0) return;
        auto it = terms_.find(c);
        if (it == terms_.end()) {
            terms_.emplace(c, mult);
        } else {
            it->second += mult;
            if (it->second == 0) terms_.erase(it);
        }
    }

    long rank() const {
        long r = 0;
        for (const auto& [c, m] : terms_) r += m;
        return r;
    }
    bool is_zero() const { return terms_.empty(); }
    bool is_effective() const {
        for (const auto& [c, m] : terms_)
            if (m < 0) return false;
        return true;
    }
    long multiplicity(const Character& c) const {
        auto it = terms_.find(c);
        return it == terms_.end() ? 0 : it->second;
    }
    const std::map<Character, long>& terms() const { return terms_; }

    VirtualRep operator+(const VirtualRep& o) const {
        VirtualRep r = *this;
        for (const auto& [c, m] : o.terms_) r.add(c, m);
        return r;
    }
    VirtualRep operator-(const VirtualRep& o) const {
        VirtualRep r = *this;
        for (const auto& [c, m] : o.terms_) r.add(c, -m);
        return r;
    }
    VirtualRep operator*(const VirtualRep& o) const {
        VirtualRep r;
        for (const auto& [c1, m1] : terms_)
            for (const auto& [c2, m2] : o.terms_) r.add(c1 * c2, m1 * m2);
        return r;
    }
    VirtualRep operator*(long s) const {
        VirtualRep r;
        for (const auto& [c, m] : terms_) r.add(c, m * s);
        return r;
    }
    VirtualRep& operator+=(const VirtualRep& o) { for (const auto& [c, m] : o.terms_) add(c, m); return *this; }
    VirtualRep& operator-=(const VirtualRep& o) { for (const auto& [c, m] : o.terms_) add(c, -m); return *this; }

    bool operator==(const VirtualRep& o) const { return terms_ == o.terms_; }

    /// Raise every character to the k-th power, keeping multiplicities.
    VirtualRep power_k(const Rational& k) const {
        VirtualRep r;
        for (const auto& [c, m] : terms_) r.add(c.pow(k), m);
        return r;
    }
    VirtualRep dual() const { return power_k(Rational(-1)); }

    /// n-th symmetric power; only defined for effective representations.
    VirtualRep sym(int n) const {
        require_effective("sym");
        std::vector<Character> list = character_list();
        VirtualRep r;
        std::vector<int> idx;
        sym_rec(list, n, 0, Character(), r);
        return r;
    }

    /// Second exterior power; only defined for effective representations.
    VirtualRep wedge2() const {
        require_effective("wedge2");
        std::vector<Character> list = character_list();
        VirtualRep r;
        for (size_t i = 0; i < list.size(); ++i)
            for (size_t j = i + 1; j < list.size(); ++j) r.add(list[i] * list[j], 1);
        return r;
    }

    VirtualRep permuted(const Perm& g) const {
        VirtualRep r;
        for (const auto& [c, m] : terms_) r.add(c.permuted(g), m);
        return r;
    }

    /// Signed multiset of induced weights: pairs (weight, multiplicity).
    std::vector<std::pair<Rational, long>> weights(const WeightVector& w) const {
        std::vector<std::pair<Rational, long>> out;
        out.reserve(terms_.size());
        for (const auto& [c, m] : terms_) out.emplace_back(c.weight(w), m);
        return out;
    }

    /// Flat list of weights for an effective rep, multiplicity expanded.
    std::vector<Rational> effective_weights(const WeightVector& w) const {
        require_effective("effective_weights");
        std::vector<Rational> out;
        out.reserve(static_cast<size_t>(rank()));
        for (const auto& [c, m] : terms_) {
            Rational wt = c.weight(w);
            for (long i = 0; i < m; ++i) out.push_back(wt);
        }
        return out;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [c, m] : terms_) {
            if (!s.empty()) s += " + ";
            if (m != 1) s += std::to_string(m) + "*";
            s += "(" + c.to_string() + ")";
        }
        return s;
    }

private:
    void require_effective(const char* op) const {
        if (!is_effective()) throw std::domain_error(std::string("VirtualRep: ") + op + " of a virtual rep");
    }
    std::vector<Character> character_list() const {
        std::vector<Character> list;
        for (const auto& [c, m] : terms_)
            for (long i = 0; i < m; ++i) list.push_back(c);
        return list;
    }
    static void sym_rec(const std::vector<Character>& list, int n, size_t start, const Character& acc, VirtualRep& out) {
        if (n == 0) {
            out.add(acc, 1);
            return;
        }
        for (size_t i = start; i < list.size(); ++i) sym_rec(list, n - 1, i, acc * list[i], out);
    }

    std::map<Character, long> terms_;
};

inline VirtualRep operator*(long s, const VirtualRep& r) { return r * s; }

/// Sum of the three coordinate characters, i.e. the class of the ambient
/// 3-dimensional vector space.
inline VirtualRep coordinate_space_rep() {
    VirtualRep v;
    for (int i = 0; i < 3; ++i) v.add(Character::lambda(i), 1);
    return v;
}

}  // namespace nets
