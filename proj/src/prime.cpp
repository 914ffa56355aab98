#include "pencil/prime.hpp"

#include <algorithm>
#include <stdexcept>

#include "pencil/rng.hpp"

namespace pencil {

namespace {

// Strong probable-prime test to base a (2 <= a <= n-2).
bool strong_probable_prime(const BigInt& n, const BigInt& a, const BigInt& d, unsigned long s) {
    BigInt x = powmod(a, d, n);
    BigInt nm1 = n - 1;
    if (x.is_one() || x == nm1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == nm1) return true;
        if (x.is_one()) return false;
    }
    return false;
}

}  // namespace

bool is_probable_prime(const BigInt& n, int rounds, std::uint64_t seed) {
    if (n < 2) return false;
    static const long small_primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (long p : small_primes) {
        if (n == BigInt(p)) return true;
        if (n.divisible_by(BigInt(p))) return false;
    }
    // n - 1 = 2^s * d with d odd
    BigInt d = n - 1;
    unsigned long s = 0;
    while (d.is_even()) {
        d = exact_div(d, 2);
        ++s;
    }
    Rng rng(seed ^ n.hash());
    for (int i = 0; i < rounds; ++i) {
        BigInt a = rng.below_big(n - 3) + 2;  // uniform in [2, n-2]
        if (!strong_probable_prime(n, a, d, s)) return false;
    }
    return true;
}

BigInt probable_prime_above(const BigInt& lower_bound, std::uint64_t seed) {
    BigInt c = lower_bound + 1;
    if (c <= 2) return 2;
    if (c.is_even()) c += 1;
    for (long tries = 0; tries < 1000000; ++tries, c += 2) {
        if (is_probable_prime(c, 40, seed)) return c;
    }
    throw std::runtime_error("probable_prime_above: no prime among 10^6 candidates (arithmetic bug)");
}

namespace {

// Pollard rho with Brent cycle detection; n odd composite, not a prime power guard needed.
BigInt pollard_rho(const BigInt& n, std::uint64_t seed) {
    Rng rng(seed);
    for (;;) {
        BigInt c = rng.below_big(n - 1) + 1;
        BigInt x = rng.below_big(n);
        BigInt y = x, d = 1;
        while (d.is_one()) {
            x = fdiv_r(mulmod(x, x, n) + c, n);
            y = fdiv_r(mulmod(y, y, n) + c, n);
            y = fdiv_r(mulmod(y, y, n) + c, n);
            d = gcd(abs(x - y), n);
        }
        if (d != n) return d;
    }
}

void factor_rec(const BigInt& n, std::vector<BigInt>& out) {
    if (n.is_one()) return;
    if (is_probable_prime(n)) {
        out.push_back(n);
        return;
    }
    BigInt d = pollard_rho(n, 0x7e11ULL ^ n.hash());
    factor_rec(d, out);
    factor_rec(exact_div(n, d), out);
}

}  // namespace

std::vector<std::pair<BigInt, unsigned>> factor_integer(const BigInt& n) {
    if (n.is_zero()) throw std::invalid_argument("factor_integer: zero");
    BigInt m = abs(n);
    std::vector<BigInt> primes;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L}) {
        while (m.divisible_by(BigInt(p))) {
            primes.push_back(BigInt(p));
            m = exact_div(m, BigInt(p));
        }
    }
    if (!m.is_one()) factor_rec(m, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<BigInt, unsigned>> out;
    for (const auto& p : primes) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1);
    }
    return out;
}

std::vector<BigInt> divisors_of(const BigInt& n) {
    auto fac = factor_integer(n);
    std::vector<BigInt> divs{BigInt(1)};
    for (const auto& [p, e] : fac) {
        size_t base = divs.size();
        BigInt pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace pencil
