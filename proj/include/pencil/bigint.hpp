// Arbitrary-precision integers on top of GMP, with value semantics.
#ifndef PENCIL_BIGINT_HPP
#define PENCIL_BIGINT_HPP

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

namespace pencil {

class BigInt {
  public:
    BigInt() { mpz_init(z_); }
    BigInt(long v) { mpz_init_set_si(z_, v); }           // NOLINT(google-explicit-constructor)
    BigInt(int v) : BigInt(static_cast<long>(v)) {}      // NOLINT(google-explicit-constructor)
    explicit BigInt(const std::string& dec) {
        if (mpz_init_set_str(z_, dec.c_str(), 10) != 0) {
            mpz_clear(z_);
            throw std::invalid_argument("BigInt: invalid decimal literal: " + dec);
        }
    }
    BigInt(const BigInt& o) { mpz_init_set(z_, o.z_); }
    BigInt(BigInt&& o) noexcept {
        mpz_init(z_);
        mpz_swap(z_, o.z_);
    }
    BigInt& operator=(const BigInt& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    BigInt& operator=(BigInt&& o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }
    ~BigInt() { mpz_clear(z_); }

    friend BigInt operator+(const BigInt& a, const BigInt& b) { BigInt r; mpz_add(r.z_, a.z_, b.z_); return r; }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { BigInt r; mpz_sub(r.z_, a.z_, b.z_); return r; }
    friend BigInt operator*(const BigInt& a, const BigInt& b) { BigInt r; mpz_mul(r.z_, a.z_, b.z_); return r; }
    friend BigInt operator-(const BigInt& a) { BigInt r; mpz_neg(r.z_, a.z_); return r; }
    BigInt& operator+=(const BigInt& b) { mpz_add(z_, z_, b.z_); return *this; }
    BigInt& operator-=(const BigInt& b) { mpz_sub(z_, z_, b.z_); return *this; }
    BigInt& operator*=(const BigInt& b) { mpz_mul(z_, z_, b.z_); return *this; }

    friend bool operator==(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) >= 0; }

    bool is_zero() const { return mpz_sgn(z_) == 0; }
    bool is_one() const { return mpz_cmp_ui(z_, 1) == 0; }
    int sign() const { return mpz_sgn(z_); }
    bool fits_long() const { return mpz_fits_slong_p(z_) != 0; }
    long to_long() const {
        if (!fits_long()) throw std::overflow_error("BigInt: value does not fit in long");
        return mpz_get_si(z_);
    }

    // Floor division and the matching remainder (r has the divisor's sign convention of GMP fdiv).
    friend BigInt fdiv_q(const BigInt& a, const BigInt& b) { BigInt r; mpz_fdiv_q(r.z_, a.z_, b.z_); return r; }
    friend BigInt fdiv_r(const BigInt& a, const BigInt& b) { BigInt r; mpz_fdiv_r(r.z_, a.z_, b.z_); return r; }

    /// Quotient a/b asserted exact; throws if b does not divide a.
    friend BigInt exact_div(const BigInt& a, const BigInt& b) {
        if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
        BigInt q, r;
        mpz_tdiv_qr(q.z_, r.z_, a.z_, b.z_);
        if (!r.is_zero()) throw std::domain_error("BigInt: exact_div with nonzero remainder");
        return q;
    }

    friend BigInt abs(const BigInt& a) { BigInt r; mpz_abs(r.z_, a.z_); return r; }
    friend BigInt gcd(const BigInt& a, const BigInt& b) { BigInt r; mpz_gcd(r.z_, a.z_, b.z_); return r; }
    friend BigInt lcm(const BigInt& a, const BigInt& b) { BigInt r; mpz_lcm(r.z_, a.z_, b.z_); return r; }

    friend BigInt pow(const BigInt& a, unsigned long e) { BigInt r; mpz_pow_ui(r.z_, a.z_, e); return r; }
    static BigInt pow2(unsigned long e) { BigInt r; mpz_ui_pow_ui(r.z_, 2, e); return r; }
    static BigInt binomial(unsigned long n, unsigned long k) { BigInt r; mpz_bin_uiui(r.z_, n, k); return r; }
    static BigInt factorial(unsigned long n) { BigInt r; mpz_fac_ui(r.z_, n); return r; }

    friend BigInt powmod(const BigInt& base, const BigInt& e, const BigInt& m) {
        BigInt r;
        mpz_powm(r.z_, base.z_, e.z_, m.z_);
        return r;
    }
    /// Inverse of a modulo m; throws when gcd(a, m) != 1.
    friend BigInt invmod(const BigInt& a, const BigInt& m) {
        BigInt r;
        if (mpz_invert(r.z_, a.z_, m.z_) == 0)
            throw std::domain_error("BigInt: not invertible modulo m");
        return r;
    }
    friend BigInt mulmod(const BigInt& a, const BigInt& b, const BigInt& m) {
        BigInt r;
        mpz_mul(r.z_, a.z_, b.z_);
        mpz_fdiv_r(r.z_, r.z_, m.z_);
        return r;
    }

    bool divisible_by(const BigInt& b) const { return mpz_divisible_p(z_, b.z_) != 0; }
    bool is_even() const { return mpz_even_p(z_) != 0; }
    size_t bit_length() const { return mpz_sizeinbase(z_, 2); }

    std::string str() const {
        char* s = mpz_get_str(nullptr, 10, z_);
        std::string out(s);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(s, out.size() + 1);
        return out;
    }

    size_t hash() const { return mpz_get_ui(z_) * 2654435769u ^ (mpz_sgn(z_) < 0 ? 0x9e3779b9u : 0u); }

    mpz_srcptr raw() const { return z_; }
    mpz_ptr raw() { return z_; }

  private:
    mpz_t z_;
};

std::ostream& operator<<(std::ostream& os, const BigInt& v);

}  // namespace pencil

#endif
