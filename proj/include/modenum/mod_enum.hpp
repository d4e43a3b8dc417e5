#pragma once

#include <cstdint>
#include <map>

#include "modenum/polynomial.hpp"

namespace modenum {

/// One residue polynomial per divisor d of n, each congruent to a common
/// target modulo the d-th cyclotomic polynomial.  Residues may be stored
/// unreduced; consumers reduce them as needed.
struct ResidueSystem {
    std::uint64_t n = 1;
    std::map<std::uint64_t, Polynomial> residues;

    /// Validates that the key set is exactly divisors(n).
    /// Throws DomainError otherwise.
    static ResidueSystem make(std::uint64_t n, std::map<std::uint64_t, Polynomial> residues);

    /// Residue system whose every entry is the same polynomial f.
    static ResidueSystem trivial(std::uint64_t n, const Polynomial& f);
};

/// The invariant sum over s of [x^s]a * c_n(i - s).  Constant on
/// congruence classes modulo the n-th cyclotomic polynomial.
Rational g_coeff(const Polynomial& a, std::uint64_t n, long long i);

/// (1/n) * sum over 0 <= i < n of g_coeff(a, n, i) * x^i.
Polynomial g_poly(const Polynomial& a, std::uint64_t n);

/// Reconstructs the remainder modulo x^n - 1 of the polynomial determined
/// by the residue system: the unique n-simplified a with
/// a == rs.residues[d] (mod cyclotomic(d)) for every d | n.
Polynomial simplify_from_residues(const ResidueSystem& rs);

/// Single class of the reconstruction: coefficient of x^(i mod n).
Rational simplify_class_from_residues(const ResidueSystem& rs, long long i);

/// Chinese-remainder construction: descending-divisor sweep
/// e <- e + ((a_d - e) * d/n) * (x^n - 1)/(x^d - 1), then reduction mod
/// x^n - 1.  Agrees with simplify_from_residues on every input.
/// Throws DomainError when the key set is not exactly divisors(n).
Polynomial crt_combine(const std::map<std::uint64_t, Polynomial>& targets, std::uint64_t n);

/// The unique n-simplified polynomial congruent to a modulo cyclotomic(n)
/// and congruent to 0 modulo x^d - 1 for every proper divisor d of n.
Polynomial canonical_rep(const Polynomial& a, std::uint64_t n);

/// True iff a and b are congruent modulo cyclotomic(n) in Z[x], decided
/// by comparing canonical representatives.  Throws NonIntegralInput when
/// either polynomial has a non-integer coefficient.
bool invariant_equal(const Polynomial& a, const Polynomial& b, std::uint64_t n);

} // namespace modenum
