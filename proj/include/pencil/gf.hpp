// Small prime-power fields F_{p^k} with machine-word elements.
//
// Elements encode polynomials sum a_i t^i over F_p as base-p digit packs; the
// modulus is the lexicographically-first monic irreducible of degree k, so a
// given (p, k) always names the same field. Multiplication and inversion go
// through discrete-log tables, addition is digitwise.
#ifndef PENCIL_GF_HPP
#define PENCIL_GF_HPP

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace pencil {

class GFCtx {
  public:
    GFCtx(std::uint32_t p, std::uint32_t k);

    std::uint32_t p() const { return p_; }
    std::uint32_t k() const { return k_; }
    std::uint32_t q() const { return q_; }
    /// Coefficients of the field modulus t^k + m_{k-1} t^{k-1} + ... + m_0.
    const std::vector<std::uint32_t>& modulus() const { return mod_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        std::uint32_t s = log_[a] + log_[b];
        if (s >= q_ - 1) s -= q_ - 1;
        return exp_[s];
    }
    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw std::domain_error("GF: inverse of zero");
        std::uint32_t l = log_[a];
        return exp_[l == 0 ? 0 : q_ - 1 - l];
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

    /// Embedding of the prime subfield: residue -> element code.
    std::uint32_t from_int(long v) const;
    /// Subfield test/projection used when interpolation runs in an extension.
    bool in_prime_field(std::uint32_t a) const { return a < p_; }

  private:
    std::uint32_t p_, k_, q_;
    std::vector<std::uint32_t> mod_;   // k coefficients m_0..m_{k-1}
    std::vector<std::uint32_t> exp_;   // exp_[i] = g^i, size q-1
    std::vector<std::uint32_t> log_;   // log_[a] for a != 0, size q
};

using GFRing = std::shared_ptr<const GFCtx>;

GFRing make_gf(std::uint32_t p, std::uint32_t k);

class GFElem {
  public:
    GFElem() = default;
    GFElem(GFRing ring, std::uint32_t code) : ring_(std::move(ring)), code_(code) {}

    const GFRing& ring() const { return ring_; }
    std::uint32_t code() const { return code_; }

    bool is_zero() const { return code_ == 0; }
    bool is_one() const { return code_ == 1; }

    friend GFElem operator+(const GFElem& a, const GFElem& b) { a.check(b); return GFElem(a.ring_, a.ring_->add(a.code_, b.code_)); }
    friend GFElem operator-(const GFElem& a, const GFElem& b) { a.check(b); return GFElem(a.ring_, a.ring_->sub(a.code_, b.code_)); }
    friend GFElem operator*(const GFElem& a, const GFElem& b) { a.check(b); return GFElem(a.ring_, a.ring_->mul(a.code_, b.code_)); }
    friend GFElem operator-(const GFElem& a) { return GFElem(a.ring_, a.ring_->neg(a.code_)); }
    GFElem inv() const { return GFElem(ring_, ring_->inv(code_)); }
    friend GFElem operator/(const GFElem& a, const GFElem& b) { return a * b.inv(); }

    friend bool operator==(const GFElem& a, const GFElem& b) { a.check(b); return a.code_ == b.code_; }
    friend bool operator!=(const GFElem& a, const GFElem& b) { return !(a == b); }

    std::string str() const;

  private:
    void check(const GFElem& o) const {
        if (!ring_ || !o.ring_) throw std::logic_error("GF: uninitialized element");
        if (ring_ != o.ring_ && (ring_->p() != o.ring_->p() || ring_->k() != o.ring_->k()))
            throw std::logic_error("GF: mixed fields");
    }

    GFRing ring_;
    std::uint32_t code_ = 0;
};

std::ostream& operator<<(std::ostream& os, const GFElem& v);

}  // namespace pencil

#endif
