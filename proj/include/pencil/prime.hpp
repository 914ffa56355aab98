// Probable-prime search: Miller-Rabin with deterministic seeded bases.
#ifndef PENCIL_PRIME_HPP
#define PENCIL_PRIME_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "pencil/bigint.hpp"

namespace pencil {

/// Miller-Rabin with `rounds` seeded random bases (>= 40 for production use).
bool is_probable_prime(const BigInt& n, int rounds = 40, std::uint64_t seed = 0);

/// Smallest probable prime strictly greater than lower_bound, deterministic from seed.
/// Throws std::runtime_error if 10^6 candidates fail (signals an arithmetic bug).
BigInt probable_prime_above(const BigInt& lower_bound, std::uint64_t seed = 0);

/// Prime factorization of |n| (trial division + Pollard rho), n != 0.
/// Returns (prime, exponent) pairs, primes ascending.
std::vector<std::pair<BigInt, unsigned>> factor_integer(const BigInt& n);

/// All positive divisors of |n|, ascending; n != 0.
std::vector<BigInt> divisors_of(const BigInt& n);

}  // namespace pencil

#endif
