#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nets {

/// Exact rational scalar. Always reduced, denominator positive.
/// Backed by GMP; no floating point enters any computation in this library.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(long long n) : v_(mpz_from_ll(n)) {}
    Rational(long num, long den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(mpz_class(num), mpz_class(den));
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& n) : v_(n) {}
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }
    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    /// Parses "p/q" or "n" (decimal).
    static Rational from_string(const std::string& s) {
        mpq_class v;
        if (v.set_str(s, 10) != 0)
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        v.canonicalize();
        return Rational(v);
    }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(v_ / o.v_));
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    /// Integer power, negative exponents allowed for nonzero values.
    Rational pow(long k) const {
        if (k == 0) return Rational(1);
        bool inv = k < 0;
        unsigned long e = inv ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), e);
        mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), e);
        if (inv) {
            if (n == 0) throw std::domain_error("Rational: 0 to negative power");
            return Rational(d, n);
        }
        return Rational(n, d);
    }

    /// "p/q", or "n" when integral.
    std::string to_string() const { return v_.get_str(); }

    long to_long() const {
        if (!is_integer()) throw std::domain_error("Rational: not an integer");
        if (!v_.get_num().fits_slong_p()) throw std::overflow_error("Rational: out of long range");
        return v_.get_num().get_si();
    }

    const mpq_class& raw() const { return v_; }

private:
    static mpz_class mpz_from_ll(long long n) {
        mpz_class z;
        bool neg = n < 0;
        unsigned long long u = neg ? 0ULL - static_cast<unsigned long long>(n)
                                   : static_cast<unsigned long long>(n);
        mpz_import(z.get_mpz_t(), 1, 1, sizeof(u), 0, 0, &u);
        if (neg) z = -z;
        return z;
    }

    mpq_class v_;
};

inline Rational operator*(long a, const Rational& b) { return Rational(a) * b; }
inline Rational operator+(long a, const Rational& b) { return Rational(a) + b; }
inline Rational operator-(long a, const Rational& b) { return Rational(a) - b; }

inline Rational binomial(unsigned long n, unsigned long k) {
    if (k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

inline Rational factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

}  // namespace nets
