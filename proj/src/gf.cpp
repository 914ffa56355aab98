#include "pencil/gf.hpp"

#include <map>
#include <mutex>
#include <ostream>
#include <tuple>

namespace pencil {

namespace {

std::uint32_t ipow(std::uint32_t b, std::uint32_t e) {
    std::uint32_t r = 1;
    while (e--) r *= b;
    return r;
}

// Polynomial arithmetic on base-p digit packs, degree < k, for table construction.
std::vector<std::uint32_t> unpack(std::uint32_t code, std::uint32_t p, std::uint32_t k) {
    std::vector<std::uint32_t> d(k, 0);
    for (std::uint32_t i = 0; i < k; ++i) {
        d[i] = code % p;
        code /= p;
    }
    return d;
}

std::uint32_t pack(const std::vector<std::uint32_t>& d, std::uint32_t p) {
    std::uint32_t code = 0;
    for (size_t i = d.size(); i-- > 0;) code = code * p + d[i];
    return code;
}

// Multiply two packed elements modulo (t^k + mod) by schoolbook convolution.
std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p, std::uint32_t k,
                       const std::vector<std::uint32_t>& mod) {
    auto da = unpack(a, p, k), db = unpack(b, p, k);
    std::vector<std::uint32_t> prod(2 * k - 1, 0);
    for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    for (size_t i = prod.size(); i-- > k;) {
        std::uint32_t c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        // t^i = t^{i-k} * t^k = -t^{i-k} * mod(t)
        for (std::uint32_t j = 0; j < k; ++j)
            prod[i - k + j] = (prod[i - k + j] + c * (p - mod[j] % p)) % p;
    }
    prod.resize(k);
    return pack(prod, p);
}

// Does the monic polynomial t^k + m have a nontrivial monic factor? Trial division
// by every monic polynomial of degree 1..k/2 (k <= 4 keeps this tiny).
bool is_irreducible(const std::vector<std::uint32_t>& m, std::uint32_t p, std::uint32_t k) {
    std::vector<std::uint32_t> f(m);
    f.push_back(1);  // full coefficient vector of degree k
    for (std::uint32_t e = 1; 2 * e <= k; ++e) {
        std::uint32_t count = ipow(p, e);
        for (std::uint32_t low = 0; low < count; ++low) {
            // candidate divisor: t^e + digits(low)
            std::vector<std::uint32_t> g = unpack(low, p, e);
            g.push_back(1);
            // remainder of f by g
            std::vector<std::uint32_t> r(f);
            for (size_t i = r.size(); i-- > e;) {
                std::uint32_t c = r[i];
                if (c == 0) continue;
                for (std::uint32_t j = 0; j <= e; ++j)
                    r[i - e + j] = (r[i - e + j] + c * (p - g[j] % p)) % p;
            }
            bool zero = true;
            for (std::uint32_t j = 0; j < e; ++j)
                if (r[j] != 0) zero = false;
            if (zero) return false;
        }
    }
    return true;
}

}  // namespace

GFCtx::GFCtx(std::uint32_t p, std::uint32_t k) : p_(p), k_(k) {
    if (p < 2 || k < 1) throw std::invalid_argument("GFCtx: need p >= 2, k >= 1");
    // crude primality check; this type is for small p only
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("GFCtx: p not prime");
    q_ = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        if (q_ > (1u << 20) / p) throw std::invalid_argument("GFCtx: field too large");
        q_ *= p;
    }
    // lexicographically-first monic irreducible t^k + m_{k-1} t^{k-1} + ... + m_0,
    // ordering by the coefficient tuple (m_{k-1},...,m_0)
    if (k == 1) {
        mod_ = {0};
    } else {
        bool found = false;
        std::uint32_t count = ipow(p, k);
        for (std::uint32_t key = 0; key < count && !found; ++key) {
            // key enumerates (m_{k-1},...,m_0) lexicographically
            std::vector<std::uint32_t> m(k, 0);
            std::uint32_t t = key;
            for (std::uint32_t i = k; i-- > 0;) {
                m[i] = t / ipow(p, i);
                t %= ipow(p, i);
            }
            if (is_irreducible(m, p, k)) {
                mod_ = m;
                found = true;
            }
        }
        if (!found) throw std::logic_error("GFCtx: no irreducible found");
    }

    // discrete-log tables over a generator
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    for (std::uint32_t g = 1; g < q_; ++g) {
        std::uint32_t x = 1;
        std::uint32_t ord = 0;
        bool ok = true;
        std::vector<char> seen(q_, 0);
        do {
            if (seen[x]) { ok = false; break; }
            seen[x] = 1;
            exp_[ord] = x;
            x = slow_mul(x, g, p_, k_, mod_);
            ++ord;
        } while (x != 1);
        if (ok && ord == q_ - 1) {
            for (std::uint32_t i = 0; i < q_ - 1; ++i) log_[exp_[i]] = i;
            return;
        }
    }
    throw std::logic_error("GFCtx: no generator found");
}

std::uint32_t GFCtx::add(std::uint32_t a, std::uint32_t b) const {
    if (k_ == 1) {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t r = 0, mul = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        std::uint32_t s = a % p_ + b % p_;
        if (s >= p_) s -= p_;
        r += s * mul;
        a /= p_;
        b /= p_;
        mul *= p_;
    }
    return r;
}

std::uint32_t GFCtx::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t GFCtx::neg(std::uint32_t a) const {
    if (k_ == 1) return a == 0 ? 0 : p_ - a;
    std::uint32_t r = 0, mul = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        std::uint32_t d = a % p_;
        r += (d == 0 ? 0 : p_ - d) * mul;
        a /= p_;
        mul *= p_;
    }
    return r;
}

std::uint32_t GFCtx::pow(std::uint32_t a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    std::uint64_t le = log_[a] % (q_ - 1) * (e % (q_ - 1)) % (q_ - 1);
    return exp_[le];
}

std::uint32_t GFCtx::from_int(long v) const {
    long r = v % static_cast<long>(p_);
    if (r < 0) r += p_;
    return static_cast<std::uint32_t>(r);
}

GFRing make_gf(std::uint32_t p, std::uint32_t k) {
    // cache per (p, k): tables are rebuilt at most once per field
    static std::mutex mu;
    static std::map<std::pair<std::uint32_t, std::uint32_t>, GFRing> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto ring = std::make_shared<const GFCtx>(p, k);
    cache[key] = ring;
    return ring;
}

std::string GFElem::str() const {
    if (!ring_) return "?";
    if (ring_->k() == 1) return std::to_string(code_);
    std::string s = "[";
    std::uint32_t c = code_;
    for (std::uint32_t i = 0; i < ring_->k(); ++i) {
        if (i) s += ",";
        s += std::to_string(c % ring_->p());
        c /= ring_->p();
    }
    return s + "]";
}

std::ostream& operator<<(std::ostream& os, const GFElem& v) { return os << v.str(); }

}  // namespace pencil
