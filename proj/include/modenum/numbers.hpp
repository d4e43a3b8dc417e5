#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace modenum {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Reduced fraction with positive denominator (canonical GMP form).
Rational make_rational(BigInt num, BigInt den);

inline bool is_integer(const Rational& v) { return v.get_den() == 1; }

/// Throws NonIntegerResult when v is not an integer.
BigInt to_integer_checked(const Rational& v);

BigInt binomial(std::uint64_t n, std::uint64_t k);

/// j!/(parts_1! ... parts_l!) when the parts sum to j, zero otherwise.
/// An empty part list counts as sum 0.
BigInt multinomial(std::uint64_t j, const std::vector<std::uint64_t>& parts);

BigInt catalan_number(std::uint64_t j);

BigInt pow2(std::uint64_t e);

} // namespace modenum
