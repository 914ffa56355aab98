// Glue that lets the generic algebra run over every coefficient type in the
// library: Z (BigInt), Q (Rational), F_p (Fp), F_{p^k} (GFElem), polynomial
// rings and their fraction fields.
//
// Elements carry their own ring context where one is needed (Fp, GFElem), so
// generic code mints constants through zero_like/one_like/int_like instead of
// default construction.
#ifndef PENCIL_RING_HPP
#define PENCIL_RING_HPP

#include <type_traits>

#include "pencil/bigint.hpp"
#include "pencil/fp.hpp"
#include "pencil/gf.hpp"
#include "pencil/rational.hpp"

namespace pencil {

template <class K>
struct ring_traits;  // specialized per coefficient type

template <>
struct ring_traits<BigInt> {
    static constexpr bool is_field = false;
    static BigInt zero(const BigInt&) { return BigInt(0); }
    static BigInt one(const BigInt&) { return BigInt(1); }
    static BigInt from_int(const BigInt&, long v) { return BigInt(v); }
    static bool is_zero(const BigInt& x) { return x.is_zero(); }
    static bool is_one(const BigInt& x) { return x.is_one(); }
    static BigInt characteristic(const BigInt&) { return BigInt(0); }
};

template <>
struct ring_traits<Rational> {
    static constexpr bool is_field = true;
    static Rational zero(const Rational&) { return Rational(0); }
    static Rational one(const Rational&) { return Rational(1); }
    static Rational from_int(const Rational&, long v) { return Rational(v); }
    static bool is_zero(const Rational& x) { return x.is_zero(); }
    static bool is_one(const Rational& x) { return x.is_one(); }
    static Rational inv(const Rational& x) { return x.inv(); }
    static BigInt characteristic(const Rational&) { return BigInt(0); }
};

template <>
struct ring_traits<Fp> {
    static constexpr bool is_field = true;
    static Fp zero(const Fp& s) { return Fp(s.ring(), 0); }
    static Fp one(const Fp& s) { return Fp(s.ring(), 1); }
    static Fp from_int(const Fp& s, long v) { return Fp(s.ring(), BigInt(v)); }
    static bool is_zero(const Fp& x) { return x.is_zero(); }
    static bool is_one(const Fp& x) { return x.is_one(); }
    static Fp inv(const Fp& x) { return x.inv(); }
    static BigInt characteristic(const Fp& x) { return x.modulus(); }
};

template <>
struct ring_traits<GFElem> {
    static constexpr bool is_field = true;
    static GFElem zero(const GFElem& s) { return GFElem(s.ring(), 0); }
    static GFElem one(const GFElem& s) { return GFElem(s.ring(), 1); }
    static GFElem from_int(const GFElem& s, long v) { return GFElem(s.ring(), s.ring()->from_int(v)); }
    static bool is_zero(const GFElem& x) { return x.is_zero(); }
    static bool is_one(const GFElem& x) { return x.is_one(); }
    static GFElem inv(const GFElem& x) { return x.inv(); }
    static BigInt characteristic(const GFElem& x) { return BigInt(static_cast<long>(x.ring()->p())); }
};

template <class K>
inline constexpr bool is_field_v = ring_traits<K>::is_field;

template <class K>
K zero_like(const K& sample) { return ring_traits<K>::zero(sample); }
template <class K>
K one_like(const K& sample) { return ring_traits<K>::one(sample); }
template <class K>
K int_like(const K& sample, long v) { return ring_traits<K>::from_int(sample, v); }
template <class K>
bool is_zero(const K& x) { return ring_traits<K>::is_zero(x); }
template <class K>
bool is_one(const K& x) { return ring_traits<K>::is_one(x); }
template <class K>
K field_inv(const K& x) { return ring_traits<K>::inv(x); }
template <class K>
BigInt characteristic_of(const K& x) { return ring_traits<K>::characteristic(x); }

}  // namespace pencil

#endif
