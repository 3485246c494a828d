#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nets/poly.hpp"

namespace nets {

/// Element of the fraction field of Poly. Kept normalized: numerator and
/// denominator coprime, denominator integer-primitive with positive leading
/// coefficient.
class RatFun {
public:
    RatFun() : num_(), den_(Rational(1)) {}
    RatFun(const Poly& p) : num_(p), den_(Rational(1)) {}
    RatFun(const Rational& r) : num_(Poly(r)), den_(Rational(1)) {}
    RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("RatFun: zero denominator");
        normalize();
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFun operator-() const { RatFun r = *this; r.num_ = -r.num_; return r; }
    RatFun operator+(const RatFun& o) const { return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
    RatFun operator-(const RatFun& o) const { return *this + (-o); }
    RatFun operator*(const RatFun& o) const { return RatFun(num_ * o.num_, den_ * o.den_); }
    RatFun operator/(const RatFun& o) const {
        if (o.is_zero()) throw std::domain_error("RatFun: division by zero");
        return RatFun(num_ * o.den_, den_ * o.num_);
    }
    RatFun& operator+=(const RatFun& o) { *this = *this + o; return *this; }
    RatFun& operator-=(const RatFun& o) { *this = *this - o; return *this; }
    RatFun& operator*=(const RatFun& o) { *this = *this * o; return *this; }

    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }

    /// q·d/dq applied to a rational function of q.
    RatFun logarithmic_derivative_times_q() const {
        Poly x = Poly::x();
        Poly n = x * (num_.derivative() * den_ - num_ * den_.derivative());
        return RatFun(n, den_ * den_);
    }

    std::string to_string(const std::string& var = "q") const {
        if (den_ == Poly(Rational(1))) return num_.to_string(var);
        return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
    }

private:
    void normalize() {
        if (num_.is_zero()) { den_ = Poly(Rational(1)); return; }
        Poly g = Poly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        Rational c = den_.content();
        if (den_.leading().sign() < 0) c = -c;
        Rational inv = Rational(1) / c;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }

    Poly num_, den_;
};

/// First linear dependence among a list of row vectors over the rational
/// function field, found by Gaussian elimination in fixed pivot order.
/// Returns (k, coeffs) where k is minimal with rows 0..k dependent and
/// coeffs is the dependence vector of length k+1, cleared to polynomials,
/// divided by their common polynomial gcd and rational content, and signed
/// so the leading coefficient of the highest-order entry is positive.
inline std::optional<std::pair<size_t, std::vector<Poly>>>
ratfun_nullspace(const std::vector<std::vector<RatFun>>& rows) {
    if (rows.empty()) return std::nullopt;
    const size_t w = rows[0].size();
    // echelon rows with bookkeeping of their expression in the inputs
    std::vector<std::vector<RatFun>> ech;
    std::vector<std::vector<RatFun>> combo;
    std::vector<size_t> pivot;

    for (size_t k = 0; k < rows.size(); ++k) {
        if (rows[k].size() != w) throw std::invalid_argument("ratfun_nullspace: ragged rows");
        std::vector<RatFun> r = rows[k];
        std::vector<RatFun> c(k + 1);
        c[k] = RatFun(Rational(1));
        for (size_t i = 0; i < ech.size(); ++i) {
            if (r[pivot[i]].is_zero()) continue;
            RatFun f = r[pivot[i]];
            for (size_t j = 0; j < w; ++j) r[j] -= f * ech[i][j];
            for (size_t j = 0; j < combo[i].size(); ++j) c[j] -= f * combo[i][j];
        }
        size_t p = w;
        for (size_t j = 0; j < w; ++j) {
            if (!r[j].is_zero()) { p = j; break; }
        }
        if (p == w) {
            // dependent: c expresses 0 as a combination of rows 0..k
            Poly clear(Rational(1));
            for (const auto& f : c) clear = Poly::lcm(clear, f.den());
            std::vector<Poly> out(c.size());
            for (size_t j = 0; j < c.size(); ++j) out[j] = c[j].num() * (clear / c[j].den());
            Poly g;
            for (const auto& p2 : out) g = g.is_zero() ? p2 : Poly::gcd(g, p2);
            if (g.degree() > 0)
                for (auto& p2 : out) p2 = p2 / g;
            Rational content(0);
            for (const auto& p2 : out)
                if (!p2.is_zero()) {
                    Rational pc = p2.content();
                    content = content.is_zero() ? pc : Rational(gcd(content.num() * pc.den(), pc.num() * content.den()),
                                                                content.den() * pc.den());
                }
            if (!content.is_zero() && content != Rational(1)) {
                Rational inv = Rational(1) / content;
                for (auto& p2 : out) p2 = p2 * inv;
            }
            if (!out.back().is_zero() && out.back().leading().sign() < 0)
                for (auto& p2 : out) p2 = -p2;
            return std::make_pair(k, std::move(out));
        }
        RatFun lead = r[p];
        for (size_t j = 0; j < w; ++j) r[j] = r[j] / lead;
        for (auto& f : c) f = f / lead;
        ech.push_back(std::move(r));
        combo.push_back(std::move(c));
        pivot.push_back(p);
    }
    return std::nullopt;
}

}  // namespace nets
