#include "modenum/polynomial.hpp"

#include <cassert>

#include "modenum/errors.hpp"

namespace modenum {

Rational make_rational(BigInt num, BigInt den) {
    if (den == 0) throw DomainError("make_rational: zero denominator");
    Rational r(std::move(num), std::move(den));
    r.canonicalize();
    return r;
}

BigInt to_integer_checked(const Rational& v) {
    if (!is_integer(v)) {
        throw NonIntegerResult("expected an integer, got " + v.get_str());
    }
    return v.get_num();
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt multinomial(std::uint64_t j, const std::vector<std::uint64_t>& parts) {
    std::uint64_t sum = 0;
    for (std::uint64_t k : parts) sum += k;
    if (sum != j) return 0;
    BigInt r = 1;
    std::uint64_t remaining = j;
    for (std::uint64_t k : parts) {
        r *= binomial(remaining, k);
        remaining -= k;
    }
    return r;
}

BigInt catalan_number(std::uint64_t j) {
    BigInt r = binomial(2 * j, j);
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), j + 1);
    return r;
}

BigInt pow2(std::uint64_t e) {
    BigInt r = 1;
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), e);
    return r;
}

// ---------------------------------------------------------------------
//  Polynomial
// ---------------------------------------------------------------------

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(Rational c) {
    Polynomial p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

Polynomial Polynomial::monomial(std::size_t k, Rational c) {
    Polynomial p;
    if (c != 0) {
        p.coeffs_.assign(k + 1, Rational(0));
        p.coeffs_[k] = std::move(c);
    }
    return p;
}

Polynomial Polynomial::x_pow_minus_one(std::size_t n) {
    Polynomial p;
    p.coeffs_.assign(n + 1, Rational(0));
    p.coeffs_[0] = -1;
    p.coeffs_[n] = 1;
    p.normalize(); // n == 0 collapses to zero
    return p;
}

Polynomial Polynomial::geometric(std::size_t step, std::size_t count) {
    Polynomial p;
    if (count == 0) return p;
    if (step == 0) return constant(Rational(static_cast<unsigned long>(count)));
    p.coeffs_.assign(step * (count - 1) + 1, Rational(0));
    for (std::size_t t = 0; t < count; ++t) p.coeffs_[t * step] = 1;
    return p;
}

std::optional<std::size_t> Polynomial::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

const Rational& Polynomial::coeff(std::size_t k) const {
    static const Rational kZero(0);
    return k < coeffs_.size() ? coeffs_[k] : kZero;
}

bool Polynomial::is_monic() const {
    return !coeffs_.empty() && coeffs_.back() == 1;
}

bool Polynomial::is_integral() const {
    for (const Rational& c : coeffs_) {
        if (c.get_den() != 1) return false;
    }
    return true;
}

Rational Polynomial::evaluate(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (Rational& c : r.coeffs_) c = -c;
    return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t k = 0; k < r.coeffs_.size(); ++k) {
        r.coeffs_[k] = a.coeff(k) + b.coeff(k);
    }
    r.normalize();
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t k = 0; k < r.coeffs_.size(); ++k) {
        r.coeffs_[k] = a.coeff(k) - b.coeff(k);
    }
    r.normalize();
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Polynomial r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    r.normalize();
    return r;
}

Polynomial operator*(const Rational& c, const Polynomial& a) {
    if (c == 0) return {};
    Polynomial r = a;
    for (Rational& x : r.coeffs_) x *= c;
    return r;
}

Polynomial operator*(const Polynomial& a, const Rational& c) { return c * a; }

// ---------------------------------------------------------------------
//  Division
// ---------------------------------------------------------------------

std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& m) {
    auto mdeg = m.degree();
    if (!mdeg || *mdeg < 1 || !m.is_monic()) {
        throw NonMonicModulus("modulus must be monic of degree >= 1, got " + to_text(m));
    }
    std::vector<Rational> rem(a.coeffs());
    std::vector<Rational> quot;
    if (rem.size() > *mdeg) quot.assign(rem.size() - *mdeg, Rational(0));
    for (std::size_t k = rem.size(); k-- > *mdeg;) {
        Rational factor = rem[k];
        if (factor == 0) continue;
        quot[k - *mdeg] = factor;
        rem[k] = 0;
        for (std::size_t t = 0; t < *mdeg; ++t) {
            rem[k - *mdeg + t] -= factor * m.coeff(t);
        }
    }
    rem.resize(std::min<std::size_t>(rem.size(), *mdeg));
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial poly_rem(const Polynomial& a, const Polynomial& m) {
    return poly_divmod(a, m).second;
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& m) {
    auto [q, r] = poly_divmod(a, m);
    if (!r.is_zero()) {
        throw InexactDivision("division left remainder " + to_text(r));
    }
    return q;
}

// ---------------------------------------------------------------------
//  Exponent folds
// ---------------------------------------------------------------------

Polynomial simplify(const Polynomial& a, std::uint64_t n) {
    if (n == 0) throw DomainError("simplify: n must be positive");
    std::vector<Rational> folded(n, Rational(0));
    const auto& cs = a.coeffs();
    for (std::size_t j = 0; j < cs.size(); ++j) folded[j % n] += cs[j];
    return Polynomial(std::move(folded));
}

Rational coeff_class(const Polynomial& a, std::uint64_t n, long long i) {
    if (n == 0) throw DomainError("coeff_class: n must be positive");
    std::uint64_t target = static_cast<std::uint64_t>(((i % static_cast<long long>(n)) +
                                                       static_cast<long long>(n)) %
                                                      static_cast<long long>(n));
    Rational sum(0);
    const auto& cs = a.coeffs();
    for (std::size_t j = target; j < cs.size(); j += n) sum += cs[j];
    return sum;
}

bool is_periodic(const Polynomial& a, std::uint64_t n, std::uint64_t d) {
    if (n == 0 || d == 0) throw DomainError("is_periodic: n and d must be positive");
    if (d % n == 0) return false;
    Polynomial s = simplify(a, n);
    for (std::uint64_t i = 0; i < n; ++i) {
        if (s.coeff(i) != s.coeff((i + d) % n)) return false;
    }
    return true;
}

IntegralityWitness integrality(const Polynomial& a) {
    BigInt common = 1;
    for (const Rational& c : a.coeffs()) {
        BigInt den = c.get_den();
        mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), den.get_mpz_t());
    }
    return {common == 1, common};
}

} // namespace modenum
