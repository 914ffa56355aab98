// Sparse multivariate polynomials over an exact coefficient ring.
//
// Terms are kept in a map ordered lexicographically (first variable strongest),
// descending, so begin() is the leading term. Invariants: no zero coefficients
// stored; every exponent vector has exactly one entry per variable; the zero
// polynomial has an empty term map and total degree -1.
#ifndef PENCIL_MULTIPOLY_HPP
#define PENCIL_MULTIPOLY_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <string>
#include <vector>

#include "pencil/ring.hpp"
#include "pencil/unipoly.hpp"

namespace pencil {

using ExpVec = std::vector<unsigned>;

inline unsigned exp_total(const ExpVec& e) {
    unsigned s = 0;
    for (unsigned x : e) s += x;
    return s;
}

/// Lexicographic order on exponent vectors, descending (leading term first).
struct LexDesc {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        return a > b;  // vector<unsigned> compares lexicographically
    }
};

template <class K>
class MultiPoly {
  public:
    using TermMap = std::map<ExpVec, K, LexDesc>;

    MultiPoly(std::vector<std::string> vars, const K& sample)
        : vars_(std::move(vars)), sample_(zero_like(sample)) {}

    static MultiPoly constant(std::vector<std::string> vars, const K& value) {
        MultiPoly p(std::move(vars), value);
        if (!pencil::is_zero(value)) p.terms_[ExpVec(p.vars_.size(), 0)] = value;
        return p;
    }
    static MultiPoly variable(std::vector<std::string> vars, size_t idx, const K& sample) {
        MultiPoly p(std::move(vars), sample);
        ExpVec e(p.vars_.size(), 0);
        e.at(idx) = 1;
        p.terms_[e] = one_like(sample);
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    size_t nvars() const { return vars_.size(); }
    const K& sample() const { return sample_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && exp_total(terms_.begin()->first) == 0);
    }
    K constant_value() const {
        if (terms_.empty()) return zero_like(sample_);
        return terms_.begin()->second;
    }

    long total_degree() const {
        long d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, static_cast<long>(exp_total(e)));
        return d;
    }
    long degree_in(size_t var) const {
        long d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, static_cast<long>(e.at(var)));
        return is_zero() ? -1 : d;
    }

    const ExpVec& lead_exp() const {
        if (terms_.empty()) throw std::domain_error("MultiPoly: leading term of zero");
        return terms_.begin()->first;
    }
    const K& lead_coeff() const {
        if (terms_.empty()) throw std::domain_error("MultiPoly: leading term of zero");
        return terms_.begin()->second;
    }
    K coeff(const ExpVec& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? zero_like(sample_) : it->second;
    }

    void add_term(const ExpVec& e, const K& c) {
        if (e.size() != vars_.size()) throw std::invalid_argument("MultiPoly: exponent arity mismatch");
        if (pencil::is_zero(c)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second = it->second + c;
            if (pencil::is_zero(it->second)) terms_.erase(it);
        }
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        a.check(b);
        MultiPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        a.check(b);
        MultiPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& a) {
        MultiPoly r(a.vars_, a.sample_);
        for (const auto& [e, c] : a.terms_) r.terms_[e] = -c;
        return r;
    }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check(b);
        MultiPoly r(a.vars_, a.sample_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                ExpVec e = ea;
                for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }
    MultiPoly scale(const K& s) const {
        MultiPoly r(vars_, sample_);
        if (pencil::is_zero(s)) return r;
        for (const auto& [e, c] : terms_) {
            K v = c * s;
            if (!pencil::is_zero(v)) r.terms_[e] = v;
        }
        return r;
    }
    MultiPoly pow(unsigned e) const {
        MultiPoly r = constant(vars_, one_like(sample_));
        MultiPoly base = *this;
        while (e) {
            if (e & 1) r = r * base;
            base = (e >>= 1) ? base * base : base;
        }
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        if (a.vars_ != b.vars_ || a.terms_.size() != b.terms_.size()) return false;
        auto ia = a.terms_.begin();
        auto ib = b.terms_.begin();
        for (; ia != a.terms_.end(); ++ia, ++ib)
            if (ia->first != ib->first || !(ia->second == ib->second)) return false;
        return true;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    /// Full evaluation at a point (one value per variable).
    K eval(const std::vector<K>& x) const {
        if (x.size() != vars_.size()) throw std::invalid_argument("MultiPoly: evaluation arity mismatch");
        K acc = zero_like(sample_);
        for (const auto& [e, c] : terms_) {
            K t = c;
            for (size_t i = 0; i < e.size(); ++i)
                for (unsigned j = 0; j < e[i]; ++j) t = t * x[i];
            acc = acc + t;
        }
        return acc;
    }

    /// Substitute each variable by a polynomial (all over the same target ring).
    MultiPoly subst(const std::vector<MultiPoly>& images) const {
        if (images.size() != vars_.size()) throw std::invalid_argument("MultiPoly: substitution arity mismatch");
        MultiPoly acc(images.empty() ? vars_ : images[0].vars_, sample_);
        for (const auto& [e, c] : terms_) {
            MultiPoly t = constant(acc.vars_, c);
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i] > 0) t = t * images[i].pow(e[i]);
            acc = acc + t;
        }
        return acc;
    }

    /// Map coefficients through a morphism; f must send zero to zero.
    template <class F>
    auto map(F&& f) const -> MultiPoly<decltype(f(std::declval<const K&>()))> {
        using K2 = decltype(f(std::declval<const K&>()));
        MultiPoly<K2> r(vars_, f(sample_));
        for (const auto& [e, c] : terms_) r.add_term(e, f(c));
        return r;
    }

    /// Homogeneous part of the given total degree.
    MultiPoly homogeneous_part(unsigned d) const {
        MultiPoly r(vars_, sample_);
        for (const auto& [e, c] : terms_)
            if (exp_total(e) == d) r.terms_[e] = c;
        return r;
    }

    /// Drop a variable that does not occur (by index).
    MultiPoly drop_var(size_t idx) const {
        if (degree_in(idx) > 0) throw std::invalid_argument("MultiPoly: dropped variable occurs");
        std::vector<std::string> vs = vars_;
        vs.erase(vs.begin() + static_cast<long>(idx));
        MultiPoly r(vs, sample_);
        for (const auto& [e, c] : terms_) {
            ExpVec e2 = e;
            e2.erase(e2.begin() + static_cast<long>(idx));
            r.terms_[e2] = c;
        }
        return r;
    }

    /// View as a univariate polynomial in vars_[var]; coefficients keep the full
    /// variable list with that slot zeroed.
    UniPoly<MultiPoly> univariate_in(size_t var) const {
        long d = degree_in(var);
        MultiPoly z(vars_, sample_);
        std::vector<MultiPoly> coeffs(static_cast<size_t>(d < 0 ? 0 : d + 1), z);
        for (const auto& [e, c] : terms_) {
            ExpVec e2 = e;
            unsigned k = e2[var];
            e2[var] = 0;
            coeffs[k].add_term(e2, c);
        }
        return UniPoly<MultiPoly>(z, std::move(coeffs));
    }

    static MultiPoly from_univariate(const UniPoly<MultiPoly>& u, size_t var) {
        if (u.is_zero()) return u.sample();
        MultiPoly r = u.sample();
        for (size_t k = 0; k < u.coeffs().size(); ++k) {
            for (const auto& [e, c] : u.coeffs()[k].terms()) {
                ExpVec e2 = e;
                e2[var] += static_cast<unsigned>(k);
                r.add_term(e2, c);
            }
        }
        return r;
    }

    /// Collapse to a plain univariate polynomial; requires all other variables absent.
    UniPoly<K> to_unipoly(size_t var) const {
        for (size_t i = 0; i < vars_.size(); ++i)
            if (i != var && degree_in(i) > 0)
                throw std::invalid_argument("MultiPoly: not univariate in the requested variable");
        long d = degree_in(var);
        std::vector<K> c(static_cast<size_t>(d < 0 ? 0 : d + 1), zero_like(sample_));
        for (const auto& [e, v] : terms_) c[e[var]] = v;
        return UniPoly<K>(sample_, std::move(c));
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            std::string cs = coeff_str(c);
            bool neg = !cs.empty() && cs[0] == '-';
            if (first) {
                out += cs;
                first = false;
            } else {
                out += neg ? " - " : " + ";
                out += neg ? cs.substr(1) : cs;
            }
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                out += "*" + vars_[i];
                if (e[i] > 1) out += "^" + std::to_string(e[i]);
            }
        }
        return out;
    }

  private:
    void check(const MultiPoly& o) const {
        if (vars_ != o.vars_) throw std::invalid_argument("MultiPoly: mixed variable lists");
    }
    template <class Q>
    static std::string coeff_str(const Q& c) {
        return c.str();
    }

    std::vector<std::string> vars_;
    K sample_;
    TermMap terms_;
};

template <class K>
struct ring_traits<MultiPoly<K>> {
    static constexpr bool is_field = false;
    static MultiPoly<K> zero(const MultiPoly<K>& s) { return MultiPoly<K>(s.vars(), s.sample()); }
    static MultiPoly<K> one(const MultiPoly<K>& s) {
        return MultiPoly<K>::constant(s.vars(), one_like(s.sample()));
    }
    static MultiPoly<K> from_int(const MultiPoly<K>& s, long v) {
        return MultiPoly<K>::constant(s.vars(), int_like(s.sample(), v));
    }
    static bool is_zero(const MultiPoly<K>& x) { return x.is_zero(); }
    static bool is_one(const MultiPoly<K>& x) { return x.is_constant() && pencil::is_one(x.constant_value()); }
    static BigInt characteristic(const MultiPoly<K>& x) { return characteristic_of(x.sample()); }
};

// ---------------------------------------------------------------------------
// polyring operations
// ---------------------------------------------------------------------------

/// f# = X0^d f(X1/X0, ..., Xn/X0): homogenization to degree exactly d, with the
/// fresh variable prepended. Throws if d < deg(f).
template <class K>
MultiPoly<K> homogenize(const MultiPoly<K>& f, long d, const std::string& new_var) {
    if (d < f.total_degree()) throw std::invalid_argument("degree bound below actual degree");
    std::vector<std::string> vs;
    vs.reserve(f.nvars() + 1);
    vs.push_back(new_var);
    for (const auto& v : f.vars()) vs.push_back(v);
    MultiPoly<K> r(vs, f.sample());
    for (const auto& [e, c] : f.terms()) {
        ExpVec e2(vs.size(), 0);
        e2[0] = static_cast<unsigned>(d) - exp_total(e);
        for (size_t i = 0; i < e.size(); ++i) e2[i + 1] = e[i];
        r.add_term(e2, c);
    }
    return r;
}

/// Set the homogenizing variable (index 0) to 1 and drop it.
template <class K>
MultiPoly<K> dehomogenize(const MultiPoly<K>& f) {
    MultiPoly<K> r(std::vector<std::string>(f.vars().begin() + 1, f.vars().end()), f.sample());
    for (const auto& [e, c] : f.terms()) {
        ExpVec e2(e.begin() + 1, e.end());
        r.add_term(e2, c);
    }
    return r;
}

struct Measures {
    BigInt height;    // H(f) = max |c|
    BigInt one_norm;  // sum |c|
    long total_degree = -1;
};

/// Height, 1-norm and total degree of an integer polynomial; the zero
/// polynomial reports (0, 0, -1).
inline Measures measures(const MultiPoly<BigInt>& f) {
    Measures m{0, 0, f.total_degree()};
    for (const auto& [e, c] : f.terms()) {
        BigInt a = abs(c);
        if (m.height < a) m.height = a;
        m.one_norm += a;
    }
    return m;
}

/// Substitute X_i -> sum_j A[i][j] * newvar_j + b[i]; exact expansion.
template <class K>
MultiPoly<K> linear_change(const MultiPoly<K>& f, const std::vector<std::vector<K>>& A,
                           const std::vector<K>& b, const std::vector<std::string>& new_vars) {
    const size_t n = f.nvars();
    if (A.size() != n || b.size() != n) throw std::invalid_argument("linear_change: dimension mismatch");
    for (const auto& row : A)
        if (row.size() != new_vars.size()) throw std::invalid_argument("linear_change: dimension mismatch");
    std::vector<MultiPoly<K>> images;
    images.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        MultiPoly<K> img = MultiPoly<K>::constant(new_vars, b[i]);
        for (size_t j = 0; j < new_vars.size(); ++j)
            img = img + MultiPoly<K>::variable(new_vars, j, f.sample()).scale(A[i][j]);
        images.push_back(img);
    }
    return f.subst(images);
}

/// Exact multivariate quotient via lex leading-term reduction; nullopt when g
/// does not divide f.
template <class K>
std::optional<MultiPoly<K>> divide_exact(const MultiPoly<K>& f, const MultiPoly<K>& g) {
    if (g.is_zero()) throw std::domain_error("MultiPoly: division by zero");
    MultiPoly<K> q(f.vars(), f.sample());
    MultiPoly<K> r = f;
    const ExpVec& ge = g.lead_exp();
    while (!r.is_zero()) {
        const ExpVec& re = r.lead_exp();
        ExpVec d(re.size());
        for (size_t i = 0; i < re.size(); ++i) {
            if (re[i] < ge[i]) return std::nullopt;
            d[i] = re[i] - ge[i];
        }
        K c = coeff_quotient(r.lead_coeff(), g.lead_coeff());
        if (pencil::is_zero(c)) return std::nullopt;
        MultiPoly<K> t(f.vars(), f.sample());
        t.add_term(d, c);
        // reject inexact leading-coefficient division over non-fields
        if (!(t.lead_coeff() * g.lead_coeff() == r.lead_coeff())) return std::nullopt;
        q = q + t;
        r = r - t * g;
    }
    return q;
}

inline BigInt coeff_quotient(const BigInt& a, const BigInt& b) {
    if (b.is_zero()) throw std::domain_error("coeff_quotient: zero divisor");
    return a.divisible_by(b) ? exact_div(a, b) : BigInt(0);
}
template <class K>
K coeff_quotient(const K& a, const K& b) {
    if constexpr (is_field_v<K>) {
        return a * field_inv(b);
    } else {
        // generic domain: try exact division through the ring's own machinery
        return exact_div_coeff(a, b);
    }
}

}  // namespace pencil

#endif
