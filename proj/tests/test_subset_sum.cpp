#include <doctest.h>

#include "modenum/dyck.hpp"
#include "modenum/errors.hpp"
#include "modenum/number_theory.hpp"
#include "modenum/subset_sum.hpp"

using namespace modenum;

namespace {

// Direct subset enumeration: the independent oracle for small j.
BigInt subsets_with_sum_class(std::uint64_t n, std::uint64_t j, std::uint64_t i) {
    BigInt count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << j); ++mask) {
        std::uint64_t sum = 0;
        for (std::uint64_t t = 0; t < j; ++t) {
            if ((mask >> t) & 1) sum += t + 1;
        }
        if (sum % n == i) count += 1;
    }
    return count;
}

} // namespace

TEST_SUITE("subset_sum") {

TEST_CASE("subset_sum_poly") {
    CHECK(subset_sum_poly(0) == Polynomial::one());
    CHECK(subset_sum_poly(1) == parse_polynomial("1 + x"));
    // all eight subsets of {1,2,3}
    CHECK(subset_sum_poly(3) == parse_polynomial("1 + x + x^2 + 2*x^3 + x^4 + x^5 + x^6"));
    for (std::uint64_t j = 0; j <= 20; ++j) {
        CHECK(subset_sum_poly(j).evaluate(Rational(1)) == Rational(pow2(j)));
    }
}

TEST_CASE("subset_sum_residue closed forms") {
    CHECK_THROWS_AS(subset_sum_residue(5, 0), DomainError);
    CHECK_THROWS_AS(subset_sum_residue(5, 6), DomainError);
    // odd d = j leaves the constant 2
    for (std::uint64_t d : {1, 3, 5, 7, 9}) {
        CHECK(subset_sum_residue(d, d) == Polynomial::constant(Rational(2)));
    }
    for (std::uint64_t j = 1; j <= 14; ++j) {
        for (std::uint64_t d = 1; d <= j; ++d) {
            Polynomial residue = subset_sum_residue(j, d);
            if (d % 2 == 0) CHECK(residue.is_zero());
            CHECK(poly_rem(subset_sum_poly(j) - residue, cyclotomic(d)).is_zero());
        }
    }
}

TEST_CASE("subset_sum_class worked example") {
    // the number of subsets of {1..22} with sum congruent to 5 mod 12
    CHECK(subset_sum_class({12, 22, 5}) == 349504);
    CHECK(subset_sum_class({3, 3, 0}) == 4); // {}, {3}, {1,2}, {1,2,3}
    CHECK_THROWS_AS(subset_sum_class({5, 4, 0}), DomainError);
    CHECK_THROWS_AS(subset_sum_class({0, 4, 0}), DomainError);
}

TEST_CASE("subset_sum_class matches enumeration and sums to 2^j") {
    for (std::uint64_t j = 1; j <= 14; ++j) {
        for (std::uint64_t n = 1; n <= j; ++n) {
            BigInt row = 0;
            for (std::uint64_t i = 0; i < n; ++i) {
                BigInt got = subset_sum_class({n, j, static_cast<long long>(i)});
                CHECK(got == subsets_with_sum_class(n, j, i));
                row += got;
            }
            CHECK(row == pow2(j));
        }
    }
}

TEST_CASE("kitchloo-style special case") {
    // when n <= j and every odd divisor of n divides j:
    // (1/n) sum over odd d|n of 2^(j/d) c_d(i)
    for (std::uint64_t n : {2, 3, 4, 6, 9, 12}) {
        for (std::uint64_t j = n; j <= 24; j += n) {
            bool all_divide = true;
            for (std::uint64_t d : divisors(n).divisors) {
                if (d % 2 == 1 && j % d != 0) all_divide = false;
            }
            REQUIRE(all_divide); // n | j makes the hypothesis automatic
            for (std::uint64_t i = 0; i < n; ++i) {
                Rational expect(0);
                for (std::uint64_t d : divisors(n).divisors) {
                    if (d % 2 == 0) continue;
                    expect += Rational(pow2(j / d)) * ramanujan(d, static_cast<long long>(i));
                }
                expect /= Rational(static_cast<unsigned long>(n));
                CHECK(Rational(subset_sum_class({n, j, static_cast<long long>(i)})) == expect);
            }
        }
    }
}

TEST_CASE("subset_sum_brute") {
    CHECK(subset_sum_brute(12, 22, 5) == 349504);
    CHECK(subset_sum_brute(3, 3, 0) == 4);
    CHECK(subset_sum_brute(3, 3, -2) == subset_sum_brute(3, 3, 1));
    CHECK_THROWS_AS(subset_sum_brute(3, 25, 0), DomainError);
    CHECK_THROWS_AS(subset_sum_brute(3, 10, 0, 9), DomainError);
    for (std::uint64_t j = 0; j <= 10; ++j) {
        for (std::uint64_t n = 1; n <= 6; ++n) {
            for (std::uint64_t i = 0; i < n; ++i) {
                CHECK(subset_sum_brute(n, j, static_cast<long long>(i)) ==
                      subsets_with_sum_class(n, j, i));
            }
        }
    }
}

TEST_CASE("cyclic shifts rotate subset sums") {
    // the proof device behind the residue lemma: over the rotation orbit of
    // any length-d word with k ones (0 < k < d), the subset-sum generating
    // function is periodic on d with period k
    for (std::uint64_t d = 2; d <= 10; ++d) {
        for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << d) - 1; ++mask) {
            std::vector<bool> letters(d);
            std::uint64_t k = 0;
            for (std::uint64_t t = 0; t < d; ++t) {
                letters[t] = (mask >> t) & 1;
                k += letters[t];
            }
            Word w{std::move(letters)};
            std::vector<Rational> hist(d * (d + 1) / 2 + 1, Rational(0));
            Word cur = w;
            for (std::uint64_t t = 0; t < d; ++t) {
                std::uint64_t sum = 0;
                for (std::uint64_t p = 0; p < d; ++p) {
                    if (cur.letter(p)) sum += p + 1;
                }
                hist[sum] += 1;
                cur = gamma(cur);
            }
            Polynomial gf{std::move(hist)};
            CHECK(is_periodic(gf, d, k));
            CHECK(poly_rem(simplify(gf, d), cyclotomic(d)).is_zero());
        }
    }
}

}
