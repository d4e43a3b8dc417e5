#include <doctest.h>

#include <random>

#include "modenum/errors.hpp"
#include "modenum/number_theory.hpp"
#include "modenum/polynomial.hpp"
#include "test_helpers.hpp"

using namespace modenum;
using modenum::testing::random_int_poly;
using modenum::testing::random_monic_poly;

namespace {

Polynomial P(const char* text) { return parse_polynomial(text); }

} // namespace

TEST_SUITE("polynomial") {

TEST_CASE("construction and normalization") {
    CHECK(Polynomial::zero().is_zero());
    CHECK(!Polynomial::zero().degree().has_value());
    CHECK(Polynomial({Rational(0), Rational(0)}).is_zero());
    CHECK(Polynomial::one().degree() == 0);
    CHECK(Polynomial::monomial(3).degree() == 3);
    CHECK(Polynomial::monomial(3, Rational(0)).is_zero());
    CHECK(Polynomial::x_pow_minus_one(4).coeff(0) == -1);
    CHECK(Polynomial::x_pow_minus_one(0).is_zero());
    CHECK(Polynomial::geometric(2, 3) == P("1 + x^2 + x^4"));
}

TEST_CASE("arith basics") {
    CHECK(P("x + 1") * P("x - 1") == P("x^2 - 1"));
    Polynomial a = P("3 + 2*x^1 + 7*x^5");
    CHECK(a + Polynomial::zero() == a);
    // schoolbook expansion by hand: (1+q+q^2)(1+q) = 1+2q+2q^2+q^3
    CHECK(P("1 + q + q^2") * P("1 + q") == P("1 + 2*x^1 + 2*x^2 + 1*x^3"));
    CHECK(a - a == Polynomial::zero());
    CHECK((-a) + a == Polynomial::zero());
    CHECK(Rational(2) * a == a + a);
}

TEST_CASE("arith ring laws on random triples") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 50; ++trial) {
        Polynomial a = random_int_poly(rng, 12);
        Polynomial b = random_int_poly(rng, 12);
        Polynomial c = random_int_poly(rng, 12);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("poly_rem basics") {
    CHECK(poly_rem(P("x^2"), P("x + 1")) == Polynomial::one());
    CHECK(poly_rem(P("x^6 - 1"), cyclotomic(6)).is_zero());
    // long division by hand: x^3 == -x and x^2 == -1 mod x^2+1
    CHECK(poly_rem(P("1 + 2*x^1 + 1*x^2 + 1*x^3"), P("x^2 + 1")) == P("x"));
    CHECK(poly_rem(P("1 + 2*x^1 + 1*x^3"), P("x^2 + 1")) == P("1 + x"));
    CHECK_THROWS_AS(poly_rem(P("x"), P("2*x^1 + 1")), NonMonicModulus);
    CHECK_THROWS_AS(poly_rem(P("x"), P("5")), NonMonicModulus);
    CHECK_THROWS_AS(poly_rem(P("x"), Polynomial::zero()), NonMonicModulus);
}

TEST_CASE("poly_rem round trip on random inputs") {
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<std::size_t> mdeg(1, 8);
    for (int trial = 0; trial < 200; ++trial) {
        Polynomial a = random_int_poly(rng, 50);
        Polynomial m = random_monic_poly(rng, mdeg(rng));
        auto [q, r] = poly_divmod(a, m);
        CHECK(q * m + r == a);
        if (!r.is_zero()) CHECK(*r.degree() < *m.degree());
    }
}

TEST_CASE("divide_exact") {
    Polynomial prod = P("1 + q + q^2") * P("1 + q");
    CHECK(divide_exact(prod, P("1 + q + q^2")) == P("1 + q"));
    CHECK_THROWS_AS(divide_exact(P("x^2 + 1"), P("x + 1")), InexactDivision);
}

TEST_CASE("simplify") {
    CHECK(simplify(P("1 + x + x^2 + x^3 + x^4"), 3) == P("2 + 2*x^1 + x^2"));
    Polynomial a = P("5 + x^2 - 3*x^3");
    CHECK(simplify(a, 7) == a); // deg < n is the identity case
    CHECK(simplify(P("x^7"), 4) == P("x^3"));
    CHECK(simplify(Polynomial::zero(), 5).is_zero());
    CHECK_THROWS_AS(simplify(a, 0), DomainError);
}

TEST_CASE("simplify equals remainder modulo x^n - 1") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::uint64_t> nd(1, 20);
    for (int trial = 0; trial < 200; ++trial) {
        Polynomial a = random_int_poly(rng, 60);
        std::uint64_t n = nd(rng);
        CHECK(simplify(a, n) == poly_rem(a, Polynomial::x_pow_minus_one(n)));
    }
}

TEST_CASE("coeff_class") {
    Polynomial a = P("1 + x + x^2 + x^3 + x^4");
    CHECK(coeff_class(a, 3, 0) == 2);
    CHECK(coeff_class(a, 3, 1) == 2);
    CHECK(coeff_class(a, 3, 2) == 1);
    // class index is periodic and accepts any integer
    for (long long i = -7; i <= 7; ++i) {
        CHECK(coeff_class(a, 3, i) == coeff_class(a, 3, i + 3));
    }
    // N(3) enumerated over all 8 subsets of {1,2,3}
    Polynomial n3 = P("1 + x + x^2 + 2*x^3 + x^4 + x^5 + x^6");
    CHECK(coeff_class(n3, 3, 0) == 4);
}

TEST_CASE("is_periodic") {
    Polynomial a = P("1 + 2*x^1 + 1*x^2 + 2*x^3 + 1*x^4 + 2*x^5 + 1*x^6 + 2*x^7");
    CHECK(is_periodic(a, 8, 2));
    CHECK(is_periodic(a, 8, 4));
    CHECK(!is_periodic(a, 8, 1));
    CHECK(is_periodic(a, 4, 2));
    for (std::uint64_t d = 1; d <= 16; ++d) CHECK(!is_periodic(a, 2, d));
    CHECK(!is_periodic(a, 8, 8)); // d == 0 mod n is excluded by definition
    CHECK(!is_periodic(a, 8, 16));
}

TEST_CASE("periodic polynomials vanish modulo the cyclotomic polynomial") {
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<int> coeff(-9, 9);
    for (std::uint64_t n : {2, 4, 6, 9, 12}) {
        for (std::uint64_t d : divisors(n).divisors) {
            if (d == n) continue;
            // tile a random block of length d to build a periodic polynomial
            std::vector<Rational> cs(n);
            for (std::uint64_t t = 0; t < d; ++t) cs[t] = coeff(rng);
            for (std::uint64_t t = d; t < n; ++t) cs[t] = cs[t - d];
            Polynomial a(std::move(cs));
            if (a.is_zero()) continue;
            CHECK(is_periodic(a, n, d));
            CHECK(poly_rem(simplify(a, n), cyclotomic(n)).is_zero());
        }
    }
    // arbitrary polynomials: the implication must hold whenever the
    // predicate fires
    for (int trial = 0; trial < 100; ++trial) {
        Polynomial a = random_int_poly(rng, 16);
        for (std::uint64_t n = 1; n <= 10; ++n) {
            for (std::uint64_t d = 1; d < n; ++d) {
                if (is_periodic(a, n, d)) {
                    CHECK(poly_rem(simplify(a, n), cyclotomic(n)).is_zero());
                }
            }
        }
    }
}

TEST_CASE("integrality witness") {
    CHECK(integrality(P("3 + x^2")).is_integral);
    CHECK(integrality(P("3 + x^2")).common_denominator == 1);
    auto w = integrality(P("1/2 + 1/3*x^1"));
    CHECK(!w.is_integral);
    CHECK(w.common_denominator == 6);
    CHECK(integrality(Polynomial::zero()).is_integral);
}

TEST_CASE("evaluate") {
    CHECK(P("x^2 - 1").evaluate(Rational(3)) == 8);
    CHECK(Polynomial::zero().evaluate(Rational(5)) == 0);
    CHECK(P("1/2 + 1/2*x^1").evaluate(Rational(1)) == 1);
}

TEST_CASE("text format round trip") {
    CHECK(to_text(Polynomial::zero()) == "0");
    CHECK(to_text(P("0")) == "0");
    CHECK(to_text(cyclotomic(6)) == "1 + -1*x^1 + 1*x^2");
    CHECK(to_text(P("1/2 - 1/2*x")) == "1/2 + -1/2*x^1");
    // parser accepts loose variants
    CHECK(P("x^2-1") == P("-1 + 1*x^2"));
    CHECK(P("3x") == P("3*x^1"));
    CHECK(P("-x") == Polynomial::monomial(1, Rational(-1)));
    CHECK(P("x + x") == P("2*x^1"));
    CHECK_THROWS_AS(parse_polynomial(""), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x^"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("2 + * 3"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("y + 1"), ParseError);

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        Polynomial a = random_int_poly(rng, 10);
        CHECK(parse_polynomial(to_text(a)) == a);
    }
}

}
