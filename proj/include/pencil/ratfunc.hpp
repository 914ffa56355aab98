// Reduced rational functions f/g in at least two variables.
#ifndef PENCIL_RATFUNC_HPP
#define PENCIL_RATFUNC_HPP

#include <stdexcept>
#include <string>

#include "pencil/mgcd.hpp"
#include "pencil/multipoly.hpp"

namespace pencil {

template <class K>
class RationalFunction {
  public:
    /// Builds the reduced representative: divides out gcd(f, g) and normalizes
    /// the denominator (monic leading term over a field, positive leading
    /// coefficient and coprime contents over Z).
    RationalFunction(MultiPoly<K> f, MultiPoly<K> g) : num_(std::move(f)), den_(std::move(g)) {
        if (num_.vars() != den_.vars())
            throw std::invalid_argument("RationalFunction: mixed variable lists");
        if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
        if (num_.nvars() < 2)
            throw std::invalid_argument("RationalFunction: at least two variables required");
        MultiPoly<K> d = multipoly_gcd(num_, den_);
        if (!pencil::is_one(d) && !d.is_zero()) {
            num_ = *divide_exact(num_, d);
            den_ = *divide_exact(den_, d);
        }
        if constexpr (std::is_same_v<K, BigInt>) {
            BigInt c = gcd(detail::int_content(num_), detail::int_content(den_));
            if (den_.lead_coeff().sign() < 0) c = -c;
            if (!c.is_one() && !c.is_zero()) {
                num_ = *divide_exact(num_, MultiPoly<K>::constant(num_.vars(), c));
                den_ = *divide_exact(den_, MultiPoly<K>::constant(den_.vars(), c));
            }
        } else {
            K u = field_inv(den_.lead_coeff());
            num_ = num_.scale(u);
            den_ = den_.scale(u);
        }
        if (degree() < 1) throw std::invalid_argument("RationalFunction: constant function");
    }

    const MultiPoly<K>& num() const { return num_; }
    const MultiPoly<K>& den() const { return den_; }
    size_t nvars() const { return num_.nvars(); }

    /// deg(r) = max(deg f, deg g).
    long degree() const { return std::max(num_.total_degree(), den_.total_degree()); }

    std::string str() const {
        if (is_one(den_)) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

  private:
    MultiPoly<K> num_, den_;
};

}  // namespace pencil

#endif
