#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <utility>

#include "padic/error.hpp"

namespace padic {

// An exact rational number kept in lowest terms with a positive
// denominator.  All arithmetic is exact.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(mpz_class n) : num_(std::move(n)), den_(1) {}
    Rational(long n) : num_(n), den_(1) {}
    Rational(int n) : num_(n), den_(1) {}

    // Reduces n/d to canonical form.  Throws DivisionByZero when d == 0.
    Rational(mpz_class n, mpz_class d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_ == 0) throw DivisionByZero("rational with zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    const mpz_class& num() const { return num_; }
    const mpz_class& den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    friend Rational operator-(const Rational& a) { return raw(-a.num_, a.den_); }
    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw DivisionByZero("rational division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }

    std::string str() const {
        std::string s = num_.get_str();
        if (den_ != 1) s += "/" + den_.get_str();
        return s;
    }
    friend std::ostream& operator<<(std::ostream& os, const Rational& q) {
        return os << q.str();
    }

private:
    // Bypasses reduction; num/den must already be canonical.
    static Rational raw(mpz_class n, mpz_class d) {
        Rational q;
        q.num_ = std::move(n);
        q.den_ = std::move(d);
        return q;
    }

    mpz_class num_;
    mpz_class den_;
};

} // namespace padic
