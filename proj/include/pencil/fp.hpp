// Prime field F_p with arbitrary-precision modulus. Elements are canonical residues in [0, p).
#ifndef PENCIL_FP_HPP
#define PENCIL_FP_HPP

#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>

#include "pencil/bigint.hpp"

namespace pencil {

class Fp;

/// Shared modulus descriptor; one instance per field, elements hold a pointer to it.
class FpCtx {
  public:
    explicit FpCtx(BigInt p) : p_(std::move(p)) {
        if (p_ < 2) throw std::invalid_argument("FpCtx: modulus must be >= 2");
    }
    const BigInt& modulus() const { return p_; }

  private:
    BigInt p_;
};

using FpRing = std::shared_ptr<const FpCtx>;

inline FpRing make_fp(const BigInt& p) { return std::make_shared<FpCtx>(p); }

class Fp {
  public:
    Fp() = default;  // invalid sentinel; any arithmetic on it throws
    Fp(FpRing ring, const BigInt& v) : ring_(std::move(ring)), v_(fdiv_r(v, ring_->modulus())) {}

    const FpRing& ring() const { return ring_; }
    const BigInt& value() const { return v_; }
    const BigInt& modulus() const { return ring_->modulus(); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_one() const { return v_.is_one(); }

    friend Fp operator+(const Fp& a, const Fp& b) { a.check(b); return Fp::raw(a.ring_, fdiv_r(a.v_ + b.v_, a.modulus())); }
    friend Fp operator-(const Fp& a, const Fp& b) { a.check(b); return Fp::raw(a.ring_, fdiv_r(a.v_ - b.v_, a.modulus())); }
    friend Fp operator*(const Fp& a, const Fp& b) { a.check(b); return Fp::raw(a.ring_, mulmod(a.v_, b.v_, a.modulus())); }
    friend Fp operator-(const Fp& a) { return Fp::raw(a.ring_, fdiv_r(-a.v_, a.modulus())); }
    Fp inv() const {
        if (is_zero()) throw std::domain_error("Fp: inverse of zero");
        return Fp::raw(ring_, invmod(v_, modulus()));
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inv(); }

    friend bool operator==(const Fp& a, const Fp& b) { a.check(b); return a.v_ == b.v_; }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    std::string str() const { return v_.str(); }

  private:
    static Fp raw(const FpRing& ring, BigInt v) {
        Fp r;
        r.ring_ = ring;
        r.v_ = std::move(v);
        return r;
    }
    void check(const Fp& o) const {
        if (!ring_ || !o.ring_) throw std::logic_error("Fp: uninitialized element");
        if (ring_ != o.ring_ && ring_->modulus() != o.ring_->modulus())
            throw std::logic_error("Fp: mixed moduli");
    }

    FpRing ring_;
    BigInt v_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Fp& v);

}  // namespace pencil

#endif
