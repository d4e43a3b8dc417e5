#pragma once

#include <cstdint>
#include <vector>

#include "modenum/polynomial.hpp"

namespace modenum {

/// Parameters of a q-multinomial coefficient.  When the parts do not sum
/// to j the coefficient is the zero polynomial.
struct MultiIndex {
    std::uint64_t j = 0;
    std::vector<std::uint64_t> ks;
};

/// Parameters of a modular major-index count over Dyck words with j ones
/// and j zeros; i is reduced mod n on use.
struct CatalanQuery {
    std::uint64_t j = 0;
    std::uint64_t n = 1;
    long long i = 0;
};

/// 1 * (1+q) * ... * (1+q+...+q^(s-1))
Polynomial q_factorial(std::uint64_t s);

Polynomial q_binomial(std::uint64_t n, std::uint64_t k);

/// [j]! / ([k_1]! ... [k_l]!), by exact division of q-factorials.
Polynomial q_multinomial(const MultiIndex& mi);

/// Residue of the q-multinomial modulo the n-th cyclotomic polynomial:
/// ordinary multinomial of the base-n quotient digits times the
/// q-multinomial of the remainder digits.
Polynomial q_multinomial_residue(const MultiIndex& mi, std::uint64_t n);

/// Coefficient-class sum of the q-multinomial modulo x^n - 1 via the
/// divisor-sum reconstruction, without expanding the full polynomial.
Rational q_multinomial_class(const MultiIndex& mi, std::uint64_t n, long long i);

/// Non-recursive special case valid when n divides j:
/// (1/n) * sum over d | gcd(k_1,...,k_l,n) of multinomial(j/d; ks/d) * c_d(i).
/// Throws DomainError when n does not divide j.
Rational q_multinomial_class_simple(const MultiIndex& mi, std::uint64_t n, long long i);

/// Major-index generating function of Dyck words with j ones and j zeros,
/// computed as the exact quotient ((q-1) * q_binomial(2j, j)) / (q^(j+1) - 1).
Polynomial q_catalan(std::uint64_t j);

/// Residue of q_catalan(j) modulo the n-th cyclotomic polynomial, n >= 2.
/// With g = j mod n: binomial((2j-2g)/n, (j-g)/n) * q_catalan(g) when
/// 2g < n; -q * binomial((2j-n+2)/n, (j+1)/n) when g = n-1; zero otherwise.
Polynomial q_catalan_residue(std::uint64_t j, std::uint64_t n);

/// Number of Dyck words with j ones and j zeros whose major index is
/// congruent to i mod n.  Throws NonIntegerResult if the divisor-sum
/// formula fails to produce a non-negative integer (an implementation bug).
BigInt catalan_major_count(const CatalanQuery& q);

} // namespace modenum
