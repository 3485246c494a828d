#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "nets/rational.hpp"

namespace nets {

/// Truncated power series in q with exact rational coefficients.
/// A series of order D stores coefficients of q^0..q^D; arithmetic never
/// reads beyond the truncation order, and the order of a binary operation
/// is the min of the operands' orders.
class QSeries {
public:
    explicit QSeries(int order) : c_(static_cast<size_t>(order) + 1) {
        if (order < 0) throw std::invalid_argument("QSeries: negative order");
    }
    QSeries(int order, std::vector<Rational> coeffs) : QSeries(order) {
        for (size_t i = 0; i < coeffs.size() && i < c_.size(); ++i) c_[i] = coeffs[i];
    }

    static QSeries one(int order) {
        QSeries s(order);
        s.c_[0] = Rational(1);
        return s;
    }
    static QSeries q(int order) {
        QSeries s(order);
        if (order >= 1) s.c_[1] = Rational(1);
        return s;
    }
    static QSeries constant(int order, const Rational& c) {
        QSeries s(order);
        s.c_[0] = c;
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& coeff(int n) const {
        static const Rational zero(0);
        if (n < 0 || n > order()) return zero;
        return c_[static_cast<size_t>(n)];
    }
    void set_coeff(int n, const Rational& v) {
        if (n < 0 || n > order()) throw std::out_of_range("QSeries: coefficient index");
        c_[static_cast<size_t>(n)] = v;
    }
    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const Rational& c) { return c.is_zero(); });
    }

    QSeries truncated(int new_order) const {
        QSeries s(new_order);
        for (int n = 0; n <= std::min(order(), new_order); ++n) s.c_[static_cast<size_t>(n)] = c_[static_cast<size_t>(n)];
        return s;
    }

    QSeries operator-() const {
        QSeries s = *this;
        for (auto& c : s.c_) c = -c;
        return s;
    }
    QSeries operator+(const QSeries& o) const {
        QSeries s(std::min(order(), o.order()));
        for (int n = 0; n <= s.order(); ++n) s.c_[static_cast<size_t>(n)] = coeff(n) + o.coeff(n);
        return s;
    }
    QSeries operator-(const QSeries& o) const { return *this + (-o); }
    QSeries operator*(const QSeries& o) const {
        QSeries s(std::min(order(), o.order()));
        for (int n = 0; n <= s.order(); ++n) {
            Rational acc(0);
            for (int k = 0; k <= n; ++k) acc += coeff(k) * o.coeff(n - k);
            s.c_[static_cast<size_t>(n)] = acc;
        }
        return s;
    }
    QSeries operator*(const Rational& r) const {
        QSeries s = *this;
        for (auto& c : s.c_) c *= r;
        return s;
    }
    QSeries operator/(const QSeries& o) const { return *this * o.inverse(); }

    bool operator==(const QSeries& o) const { return c_ == o.c_; }

    /// Multiplicative inverse by long division; requires a unit constant term.
    QSeries inverse() const {
        if (c_[0].is_zero()) throw std::domain_error("QSeries: inverse needs nonzero constant term");
        QSeries s(order());
        Rational u = Rational(1) / c_[0];
        s.c_[0] = u;
        for (int n = 1; n <= order(); ++n) {
            Rational acc(0);
            for (int k = 1; k <= n; ++k) acc += coeff(k) * s.c_[static_cast<size_t>(n - k)];
            s.c_[static_cast<size_t>(n)] = -acc * u;
        }
        return s;
    }

    /// exp by the ODE method: f' = g'·f, so n·f_n = sum k·g_k·f_{n-k}.
    QSeries exp() const {
        if (!c_[0].is_zero()) throw std::domain_error("QSeries: exp needs zero constant term");
        QSeries f(order());
        f.c_[0] = Rational(1);
        for (int n = 1; n <= order(); ++n) {
            Rational acc(0);
            for (int k = 1; k <= n; ++k) acc += Rational(k) * coeff(k) * f.c_[static_cast<size_t>(n - k)];
            f.c_[static_cast<size_t>(n)] = acc / Rational(n);
        }
        return f;
    }

    /// log by the same ODE read backwards; requires constant term 1.
    QSeries log() const {
        if (c_[0] != Rational(1)) throw std::domain_error("QSeries: log needs constant term 1");
        QSeries g(order());
        for (int n = 1; n <= order(); ++n) {
            Rational acc(0);
            for (int k = 1; k < n; ++k) acc += Rational(k) * g.c_[static_cast<size_t>(k)] * coeff(n - k);
            g.c_[static_cast<size_t>(n)] = coeff(n) - acc / Rational(n);
        }
        return g;
    }

    /// Substitution f(s); requires s(0) = 0.
    QSeries compose(const QSeries& s) const {
        if (!s.coeff(0).is_zero()) throw std::domain_error("QSeries: compose needs zero constant term");
        int d = std::min(order(), s.order());
        QSeries r = QSeries::constant(d, coeff(order()));
        for (int k = order() - 1; k >= 0; --k) {
            r = r * s.truncated(d);
            r.c_[0] += coeff(k);
        }
        return r;
    }

    /// Compositional inverse: returns v with (*this)(v(x)) = x to truncation.
    /// Requires zero constant term and nonzero linear coefficient.
    QSeries reversion() const {
        if (!coeff(0).is_zero()) throw std::domain_error("QSeries: reversion needs zero constant term");
        if (coeff(1).is_zero()) throw std::domain_error("QSeries: reversion needs nonzero linear coefficient");
        int d = order();
        Rational u1 = coeff(1);
        QSeries v(d);
        v.set_coeff(1, Rational(1) / u1);
        for (int k = 2; k <= d; ++k) {
            // error in the q^k coefficient of u(v) determines v_k
            QSeries w = compose(v.truncated(k));
            v.set_coeff(k, -w.coeff(k) / u1);
        }
        return v;
    }

    std::string to_string(const std::string& var = "q") const {
        std::string s;
        for (int n = 0; n <= order(); ++n) {
            if (coeff(n).is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += coeff(n).to_string();
            if (n >= 1) s += "*" + var + (n > 1 ? "^" + std::to_string(n) : "");
        }
        if (s.empty()) s = "0";
        s += " + O(" + var + "^" + std::to_string(order() + 1) + ")";
        return s;
    }

private:
    std::vector<Rational> c_;
};

inline QSeries operator*(const Rational& r, const QSeries& s) { return s * r; }

/// The triple (psi0, psi1, psi2) of series such that psi0, t·psi0 + psi1 and
/// t²/2·psi0 + t·psi1 + psi2 solve one differential operator.
struct LogSolutionTriple {
    QSeries psi0, psi1, psi2;

    LogSolutionTriple(QSeries a, QSeries b, QSeries c)
        : psi0(std::move(a)), psi1(std::move(b)), psi2(std::move(c)) {
        if (psi0.coeff(0) != Rational(1)) throw std::invalid_argument("LogSolutionTriple: psi0 must start at 1");
        if (!psi1.coeff(0).is_zero() || !psi2.coeff(0).is_zero())
            throw std::invalid_argument("LogSolutionTriple: psi1, psi2 must start at 0");
    }
};

}  // namespace nets
