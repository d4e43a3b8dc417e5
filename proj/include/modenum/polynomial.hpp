#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "modenum/numbers.hpp"

namespace modenum {

/// Dense univariate polynomial over exact rationals.
///
/// Coefficients are stored by ascending exponent with no trailing zeros;
/// the zero polynomial is the empty vector and its degree is nullopt
/// rather than any integer sentinel.  All values are immutable after
/// construction and every operation is a pure function.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial zero() { return {}; }
    static Polynomial constant(Rational c);
    static Polynomial one() { return constant(1); }
    /// c * x^k
    static Polynomial monomial(std::size_t k, Rational c = Rational(1));
    /// x^n - 1
    static Polynomial x_pow_minus_one(std::size_t n);
    /// 1 + x^step + x^(2*step) + ... + x^((count-1)*step)
    static Polynomial geometric(std::size_t step, std::size_t count);

    bool is_zero() const { return coeffs_.empty(); }
    /// nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const;
    /// Coefficient of x^k; zero beyond the degree.
    const Rational& coeff(std::size_t k) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_monic() const;
    /// True when every coefficient has denominator 1.
    bool is_integral() const;

    Rational evaluate(const Rational& x) const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& a);
    friend Polynomial operator*(const Polynomial& a, const Rational& c);

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) {
        return !(a == b);
    }

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

/// Quotient and remainder of a by a monic modulus m with deg(m) >= 1.
/// Throws NonMonicModulus otherwise.
std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& m);

/// Remainder of a modulo a monic m; deg(result) < deg(m).
Polynomial poly_rem(const Polynomial& a, const Polynomial& m);

/// Exact quotient a/m for monic m; throws InexactDivision on a nonzero
/// remainder.
Polynomial divide_exact(const Polynomial& a, const Polynomial& m);

/// Remainder of a modulo x^n - 1, computed as the exponent fold
/// [x^i] result = sum of [x^j]a over j == i (mod n).
Polynomial simplify(const Polynomial& a, std::uint64_t n);

/// Sum of coefficients of a over exponents congruent to i mod n.
/// i may be any integer.
Rational coeff_class(const Polynomial& a, std::uint64_t n, long long i);

/// True iff d is not a multiple of n and every class satisfies
/// coeff_class(a, n, i) == coeff_class(a, n, i + d).
bool is_periodic(const Polynomial& a, std::uint64_t n, std::uint64_t d);

/// Distinguishes Z[x] members; common_denominator is the lcm of all
/// coefficient denominators (1 exactly when the polynomial is integral).
struct IntegralityWitness {
    bool is_integral;
    BigInt common_denominator;
};

IntegralityWitness integrality(const Polynomial& a);

/// Canonical text form: ascending exponents joined by " + ", constant term
/// printed bare, higher terms as "c*x^k" with c a decimal integer or p/q
/// fraction.  The zero polynomial is "0".
std::string to_text(const Polynomial& a);

/// Parses to_text output plus common hand-written variants ("x^2 - 1",
/// bare "x", "3x" and descending order are all accepted).
/// Throws ParseError on malformed input.
Polynomial parse_polynomial(std::string_view text);

} // namespace modenum
