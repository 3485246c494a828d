#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "nets/rational.hpp"

namespace nets {

/// Sparse multivariate polynomial over Rational with a fixed variable count.
/// Used for splitting-principle Chern-root computations and for reducing
/// symmetric expressions to elementary symmetric polynomials.
class MPoly {
public:
    using Mono = std::vector<int>;

    explicit MPoly(size_t nvars) : n_(nvars) {}

    static MPoly constant(size_t nvars, const Rational& c) {
        MPoly p(nvars);
        p.add(Mono(nvars, 0), c);
        return p;
    }
    static MPoly var(size_t nvars, size_t i) {
        MPoly p(nvars);
        Mono m(nvars, 0);
        m[i] = 1;
        p.add(m, Rational(1));
        return p;
    }

    size_t nvars() const { return n_; }
    bool is_zero() const { return t_.empty(); }
    const std::map<Mono, Rational>& terms() const { return t_; }

    void add(const Mono& m, const Rational& c) {
        if (c.is_zero()) return;
        auto it = t_.find(m);
        if (it == t_.end()) {
            t_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    MPoly operator-() const {
        MPoly r(n_);
        for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
        return r;
    }
    MPoly operator+(const MPoly& o) const {
        MPoly r = *this;
        for (const auto& [m, c] : o.t_) r.add(m, c);
        return r;
    }
    MPoly operator-(const MPoly& o) const { return *this + (-o); }
    MPoly operator*(const MPoly& o) const {
        MPoly r(n_);
        for (const auto& [m1, c1] : t_)
            for (const auto& [m2, c2] : o.t_) {
                Mono m(n_);
                for (size_t i = 0; i < n_; ++i) m[i] = m1[i] + m2[i];
                r.add(m, c1 * c2);
            }
        return r;
    }
    MPoly operator*(const Rational& s) const {
        MPoly r(n_);
        if (s.is_zero()) return r;
        for (const auto& [m, c] : t_) r.t_.emplace(m, c * s);
        return r;
    }
    MPoly& operator+=(const MPoly& o) { *this = *this + o; return *this; }
    MPoly& operator*=(const MPoly& o) { *this = *this * o; return *this; }

    bool operator==(const MPoly& o) const { return t_ == o.t_; }

    /// Substitute variable i by the given polynomial.
    MPoly substituted(size_t i, const MPoly& value) const {
        MPoly r(n_);
        for (const auto& [m, c] : t_) {
            MPoly term = MPoly::constant(n_, c);
            Mono rest = m;
            int e = rest[i];
            rest[i] = 0;
            MPoly base(n_);
            base.add(rest, Rational(1));
            term = term * base;
            for (int k = 0; k < e; ++k) term = term * value;
            r += term;
        }
        return r;
    }

    int max_exponent(size_t i) const {
        int e = 0;
        for (const auto& [m, c] : t_) e = std::max(e, m[i]);
        return e;
    }

    bool depends_on(size_t i) const { return max_exponent(i) > 0; }

    /// Rewrite until no monomial matches var[i]^k with k >= threshold,
    /// replacing var[i]^threshold by `rule` each time.
    MPoly reduced_by_power_rule(size_t i, int threshold, const MPoly& rule) const {
        MPoly cur = *this;
        while (cur.max_exponent(i) >= threshold) {
            MPoly next(n_);
            for (const auto& [m, c] : cur.t_) {
                if (m[i] >= threshold) {
                    Mono rest = m;
                    rest[i] -= threshold;
                    MPoly base(n_);
                    base.add(rest, c);
                    next += base * rule;
                } else {
                    next.add(m, c);
                }
            }
            cur = std::move(next);
        }
        return cur;
    }

private:
    size_t n_;
    std::map<Mono, Rational> t_;
};

}  // namespace nets
