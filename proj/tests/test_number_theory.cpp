#include <doctest.h>

#include <numeric>

#include "modenum/errors.hpp"
#include "modenum/number_theory.hpp"

using namespace modenum;

TEST_SUITE("number_theory") {

TEST_CASE("divisors") {
    CHECK(divisors(1).divisors == std::vector<std::uint64_t>{1});
    CHECK(divisors(12).divisors == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
        CHECK(divisors(p).divisors == std::vector<std::uint64_t>{1, p});
    }
    CHECK(divisors(36).divisors == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 9, 12, 18, 36});
    CHECK_THROWS_AS(divisors(0), DomainError);
}

TEST_CASE("moebius") {
    CHECK(moebius(1) == 1);
    CHECK(moebius(2) == -1);
    CHECK(moebius(4) == 0);
    CHECK(moebius(6) == 1);
    CHECK(moebius(12) == 0);
    CHECK(moebius(30) == -1);
    // sum over divisors is the unit impulse at n = 1
    for (std::uint64_t n = 1; n <= 100; ++n) {
        int sum = 0;
        for (std::uint64_t d : divisors(n).divisors) sum += moebius(d);
        CHECK(sum == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("euler_phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(2) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(97) == 96);
    for (std::uint64_t n = 1; n <= 200; ++n) {
        std::uint64_t sum = 0;
        for (std::uint64_t d : divisors(n).divisors) sum += euler_phi(d);
        CHECK(sum == n);
    }
}

TEST_CASE("cyclotomic small cases") {
    CHECK(cyclotomic(1) == parse_polynomial("x - 1"));
    CHECK(cyclotomic(2) == parse_polynomial("x + 1"));
    CHECK(cyclotomic(3) == parse_polynomial("x^2 + x + 1"));
    CHECK(cyclotomic(4) == parse_polynomial("x^2 + 1"));
    // dividing x^6-1 by the lower cyclotomic polynomials by hand
    CHECK(cyclotomic(6) == parse_polynomial("x^2 - x + 1"));
    CHECK(cyclotomic(12) == parse_polynomial("x^4 - x^2 + 1"));
    CHECK_THROWS_AS(cyclotomic(0), DomainError);
}

TEST_CASE("product of cyclotomic polynomials over divisors") {
    for (std::uint64_t n = 1; n <= 40; ++n) {
        Polynomial prod = Polynomial::one();
        for (std::uint64_t d : divisors(n).divisors) prod = prod * cyclotomic(d);
        CHECK(prod == Polynomial::x_pow_minus_one(n));
        CHECK(cyclotomic(n).is_monic());
        CHECK(*cyclotomic(n).degree() == euler_phi(n));
        CHECK(cyclotomic(n).is_integral());
    }
}

TEST_CASE("ramanujan special values") {
    for (std::uint64_t n = 1; n <= 100; ++n) {
        CHECK(ramanujan(n, 0) == static_cast<long long>(euler_phi(n)));
        CHECK(ramanujan(n, 1) == moebius(n));
    }
    // moebius sum over d in {1,2}: mu(6) + 2*mu(3)
    CHECK(ramanujan(6, 2) == -1);
    CHECK(ramanujan(5, 10) == 4);
    CHECK_THROWS_AS(ramanujan(0, 3), DomainError);
}

TEST_CASE("ramanujan forms agree and depend only on the gcd") {
    for (std::uint64_t n = 1; n <= 100; ++n) {
        for (std::uint64_t l = 0; l < n; ++l) {
            long long v = ramanujan_moebius_sum(n, static_cast<long long>(l));
            CHECK(v == ramanujan_hoelder(n, static_cast<long long>(l)));
            CHECK(v == ramanujan(n, static_cast<long long>(l)));
        }
    }
    for (std::uint64_t n = 1; n <= 40; ++n) {
        for (long long l = -2 * static_cast<long long>(n); l <= 2 * static_cast<long long>(n);
             ++l) {
            std::uint64_t l0 = static_cast<std::uint64_t>(((l % static_cast<long long>(n)) +
                                                           static_cast<long long>(n)) %
                                                          static_cast<long long>(n));
            std::uint64_t g = l0 == 0 ? n : std::gcd(n, l0);
            CHECK(ramanujan(n, l) == ramanujan(n, static_cast<long long>(g)));
        }
    }
}

TEST_CASE("ramanujan sums over divisors detect multiples") {
    for (std::uint64_t n = 1; n <= 100; ++n) {
        for (long long l = -2 * static_cast<long long>(n); l <= 2 * static_cast<long long>(n);
             ++l) {
            long long sum = 0;
            for (std::uint64_t d : divisors(n).divisors) sum += ramanujan(d, l);
            bool multiple = (l % static_cast<long long>(n)) == 0;
            CHECK(sum == (multiple ? static_cast<long long>(n) : 0));
        }
    }
}

TEST_CASE("geometric quotients modulo cyclotomic polynomials") {
    // (x^n-1)/(x^j-1) is 0 mod cyclotomic(d) when d does not divide j,
    // and n/j when it does.
    for (std::uint64_t n = 1; n <= 24; ++n) {
        for (std::uint64_t j : divisors(n).divisors) {
            Polynomial quotient = Polynomial::geometric(j, n / j);
            CHECK(quotient * Polynomial::x_pow_minus_one(j) == Polynomial::x_pow_minus_one(n));
            for (std::uint64_t d : divisors(n).divisors) {
                if (j % d == 0) {
                    Polynomial expected = Polynomial::constant(Rational(n / j));
                    CHECK(poly_rem(quotient - expected, cyclotomic(d)).is_zero());
                } else {
                    CHECK(poly_rem(quotient, cyclotomic(d)).is_zero());
                }
            }
        }
    }
}

}
