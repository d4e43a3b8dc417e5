#pragma once

#include <cstdint>

#include "modenum/polynomial.hpp"

namespace modenum {

/// Number of subsets of {1..j} with sum congruent to i mod n; the closed
/// form requires n <= j.
struct SubsetSumQuery {
    std::uint64_t n = 1;
    std::uint64_t j = 0;
    long long i = 0;
};

/// Subset-sum generating function (1+x)(1+x^2)...(1+x^j), expanded.
Polynomial subset_sum_poly(std::uint64_t j);

/// Residue of subset_sum_poly(j) modulo the d-th cyclotomic polynomial
/// for 0 < d <= j: zero when d is even, 2^floor(j/d) * subset_sum_poly(j mod d)
/// when d is odd.  Throws DomainError outside 0 < d <= j.
Polynomial subset_sum_residue(std::uint64_t j, std::uint64_t d);

/// Odd-divisor closed form
/// (1/n) * sum over odd d | n of 2^floor(j/d) * sum_s S^s_d(N(j mod d)) * c_d(i-s).
/// Throws DomainError unless 0 < n <= j; NonIntegerResult signals a bug.
BigInt subset_sum_class(const SubsetSumQuery& q);

/// Brute-force oracle: enumerates all 2^j subsets (Gray-code walk).
/// Throws DomainError when j exceeds max_j.
BigInt subset_sum_brute(std::uint64_t n, std::uint64_t j, long long i,
                        std::uint64_t max_j = 24);

} // namespace modenum
