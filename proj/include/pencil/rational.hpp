// Exact rationals (GMP mpq), always normalized to lowest terms with positive denominator.
#ifndef PENCIL_RATIONAL_HPP
#define PENCIL_RATIONAL_HPP

#include <gmp.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "pencil/bigint.hpp"

namespace pencil {

class Rational {
  public:
    Rational() { mpq_init(q_); }
    Rational(long v) {  // NOLINT(google-explicit-constructor)
        mpq_init(q_);
        mpq_set_si(q_, v, 1);
    }
    Rational(int v) : Rational(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& n) {                          // NOLINT(google-explicit-constructor)
        mpq_init(q_);
        mpq_set_z(q_, n.raw());
    }
    Rational(const BigInt& num, const BigInt& den) {
        if (den.is_zero()) throw std::domain_error("Rational: zero denominator");
        mpq_init(q_);
        mpz_set(mpq_numref(q_), num.raw());
        mpz_set(mpq_denref(q_), den.raw());
        mpq_canonicalize(q_);
    }
    Rational(const Rational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rational() { mpq_clear(q_); }

    friend Rational operator+(const Rational& a, const Rational& b) { Rational r; mpq_add(r.q_, a.q_, b.q_); return r; }
    friend Rational operator-(const Rational& a, const Rational& b) { Rational r; mpq_sub(r.q_, a.q_, b.q_); return r; }
    friend Rational operator*(const Rational& a, const Rational& b) { Rational r; mpq_mul(r.q_, a.q_, b.q_); return r; }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        Rational r;
        mpq_div(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator-(const Rational& a) { Rational r; mpq_neg(r.q_, a.q_); return r; }
    Rational& operator+=(const Rational& b) { mpq_add(q_, q_, b.q_); return *this; }
    Rational& operator-=(const Rational& b) { mpq_sub(q_, q_, b.q_); return *this; }
    Rational& operator*=(const Rational& b) { mpq_mul(q_, q_, b.q_); return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) > 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) <= 0; }

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_one() const { return mpq_cmp_ui(q_, 1, 1) == 0; }
    int sign() const { return mpq_sgn(q_); }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }

    Rational inv() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        Rational r;
        mpq_inv(r.q_, q_);
        return r;
    }

    BigInt num() const { BigInt n; mpz_set(n.raw(), mpq_numref(q_)); return n; }
    BigInt den() const { BigInt d; mpz_set(d.raw(), mpq_denref(q_)); return d; }

    std::string str() const {
        if (is_integer()) return num().str();
        return num().str() + "/" + den().str();
    }

  private:
    mpq_t q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& v);

}  // namespace pencil

#endif
