#include "modenum/subset_sum.hpp"

#include <bit>

#include "modenum/errors.hpp"
#include "modenum/number_theory.hpp"

namespace modenum {

Polynomial subset_sum_poly(std::uint64_t j) {
    Polynomial r = Polynomial::one();
    for (std::uint64_t t = 1; t <= j; ++t) {
        r = r * (Polynomial::one() + Polynomial::monomial(t));
    }
    return r;
}

Polynomial subset_sum_residue(std::uint64_t j, std::uint64_t d) {
    if (d == 0 || d > j) {
        throw DomainError("subset_sum_residue requires 0 < d <= j");
    }
    if (d % 2 == 0) return Polynomial::zero();
    return Rational(pow2(j / d)) * subset_sum_poly(j % d);
}

BigInt subset_sum_class(const SubsetSumQuery& q) {
    if (q.n == 0 || q.n > q.j) {
        throw DomainError("subset_sum_class requires 0 < n <= j");
    }
    Rational total(0);
    for (std::uint64_t d : divisors(q.n).divisors) {
        if (d % 2 == 0) continue;
        Polynomial base = simplify(subset_sum_poly(q.j % d), d);
        Rational inner(0);
        for (std::uint64_t s = 0; s < d; ++s) {
            const Rational& c = base.coeff(s);
            if (c == 0) continue;
            inner += c * ramanujan(d, q.i - static_cast<long long>(s));
        }
        total += Rational(pow2(q.j / d)) * inner;
    }
    total /= Rational(static_cast<unsigned long>(q.n));
    BigInt count = to_integer_checked(total);
    if (count < 0) throw NonIntegerResult("subset_sum_class produced a negative value");
    return count;
}

BigInt subset_sum_brute(std::uint64_t n, std::uint64_t j, long long i, std::uint64_t max_j) {
    if (n == 0) throw DomainError("subset_sum_brute: n must be positive");
    if (j > max_j || j >= 63) {
        throw DomainError("subset_sum_brute: j = " + std::to_string(j) +
                          " exceeds the enumeration cap of " + std::to_string(max_j));
    }
    std::uint64_t target =
        static_cast<std::uint64_t>(((i % static_cast<long long>(n)) + static_cast<long long>(n)) %
                                   static_cast<long long>(n));
    // Gray-code walk over all subsets: each step toggles one element, so
    // the running sum is maintained in O(1).
    std::uint64_t count = (target == 0) ? 1 : 0; // the empty set
    std::uint64_t sum = 0;
    std::uint64_t members = 0; // bit t set <=> element t+1 in the subset
    const std::uint64_t total = std::uint64_t(1) << j;
    for (std::uint64_t t = 1; t < total; ++t) {
        unsigned bit = static_cast<unsigned>(std::countr_zero(t));
        std::uint64_t value = (bit + 1) % n;
        if (members >> bit & 1) {
            sum = (sum + n - value) % n;
        } else {
            sum = (sum + value) % n;
        }
        members ^= std::uint64_t(1) << bit;
        if (sum == target) ++count;
    }
    return BigInt(static_cast<unsigned long>(count));
}

} // namespace modenum
