#pragma once

#include <cstdint>
#include <vector>

#include "modenum/polynomial.hpp"

namespace modenum {

struct DivisorList {
    std::uint64_t n;
    std::vector<std::uint64_t> divisors; // ascending, always contains 1 and n
};

DivisorList divisors(std::uint64_t n);

/// Prime factorization by trial division, as (prime, exponent) pairs.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

int moebius(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

/// n-th cyclotomic polynomial, computed by exact division of x^n - 1 by
/// the product of the lower cyclotomic polynomials.  Memoized; safe for
/// concurrent callers.
Polynomial cyclotomic(std::uint64_t n);

/// Ramanujan sum c_n(l) = sum over d | gcd(n, l) of moebius(n/d) * d,
/// with gcd(n, 0) = n.  Memoized per n; the cached table is checked
/// against the totient closed form on first computation.
long long ramanujan(std::uint64_t n, long long l);

/// Uncached divisor-sum evaluation of c_n(l) straight from the definition.
long long ramanujan_moebius_sum(std::uint64_t n, long long l);

/// Closed form mu(n/g) * phi(n) / phi(n/g) with g = gcd(n, l).
long long ramanujan_hoelder(std::uint64_t n, long long l);

} // namespace modenum
