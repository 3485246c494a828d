#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "nets/rational.hpp"

namespace nets {

/// Dense univariate polynomial over Rational. Trailing zeros are trimmed;
/// the zero polynomial has degree() == -1.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& c) { if (!c.is_zero()) c_.push_back(c); }
    Poly(long c) : Poly(Rational(c)) {}
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly x() { return Poly(std::vector<Rational>{Rational(0), Rational(1)}); }
    /// c * x^k
    static Poly monomial(const Rational& c, int k) {
        if (c.is_zero()) return Poly();
        std::vector<Rational> v(static_cast<size_t>(k) + 1);
        v.back() = c;
        return Poly(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    const Rational& coeff(int k) const {
        static const Rational zero(0);
        if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
        return c_[static_cast<size_t>(k)];
    }
    const Rational& leading() const {
        if (is_zero()) throw std::domain_error("Poly: leading coefficient of zero");
        return c_.back();
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    Poly operator+(const Poly& o) const {
        std::vector<Rational> v(std::max(c_.size(), o.c_.size()));
        for (size_t i = 0; i < v.size(); ++i) v[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
        return Poly(std::move(v));
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<Rational> v(c_.size() + o.c_.size() - 1);
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
        }
        return Poly(std::move(v));
    }
    Poly operator*(const Rational& s) const {
        if (s.is_zero()) return Poly();
        Poly r = *this;
        for (auto& c : r.c_) c *= s;
        return r;
    }
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Rational eval(const Rational& x) const {
        Rational r(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<Rational> v(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational(static_cast<long>(i));
        return Poly(std::move(v));
    }

    /// Euclidean division; returns (quotient, remainder).
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw std::domain_error("Poly: division by zero");
        Poly r = *this, q;
        std::vector<Rational> qc(std::max<size_t>(1, c_.size()), Rational(0));
        while (!r.is_zero() && r.degree() >= d.degree()) {
            int k = r.degree() - d.degree();
            Rational f = r.leading() / d.leading();
            qc[static_cast<size_t>(k)] += f;
            r -= Poly::monomial(f, k) * d;
        }
        return {Poly(std::move(qc)), r};
    }
    Poly operator/(const Poly& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) throw std::domain_error("Poly: inexact division");
        return q;
    }

    /// Positive rational c such that (*this)/c has coprime integer
    /// coefficients; sign carried separately by the leading coefficient.
    Rational content() const {
        if (is_zero()) return Rational(1);
        mpz_class g = 0, l = 1;
        for (const auto& c : c_) {
            if (c.is_zero()) continue;
            mpz_class n = c.num() < 0 ? mpz_class(-c.num()) : c.num();
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
        }
        return Rational(g, l);
    }
    /// Integer-coprime coefficients, positive leading coefficient.
    Poly primitive() const {
        if (is_zero()) return Poly();
        Rational c = content();
        if (leading().sign() < 0) c = -c;
        Poly r = *this;
        for (auto& a : r.c_) a /= c;
        return r;
    }

    static Poly gcd(Poly a, Poly b) {
        a = a.primitive();
        b = b.primitive();
        while (!b.is_zero()) {
            Poly r = a.divmod(b).second.primitive();
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }
    static Poly lcm(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        return ((a * b) / gcd(a, b)).primitive();
    }

    std::string to_string(const std::string& var = "q") const {
        if (is_zero()) return "0";
        std::string s;
        for (int k = degree(); k >= 0; --k) {
            const Rational& c = coeff(k);
            if (c.is_zero()) continue;
            Rational a = c.abs();
            if (s.empty()) {
                if (c.sign() < 0) s += "-";
            } else {
                s += c.sign() < 0 ? " - " : " + ";
            }
            bool unit = (a == Rational(1));
            if (k == 0 || !unit) s += a.to_string();
            if (k > 0) {
                if (!unit) s += "*";
                s += var;
                if (k > 1) s += "^" + std::to_string(k);
            }
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

inline Poly operator*(const Rational& s, const Poly& p) { return p * s; }

}  // namespace nets
