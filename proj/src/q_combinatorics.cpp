#include "modenum/q_combinatorics.hpp"

#include <cassert>
#include <map>
#include <mutex>
#include <numeric>

#include "modenum/errors.hpp"
#include "modenum/number_theory.hpp"

namespace modenum {

Polynomial q_factorial(std::uint64_t s) {
    static std::mutex mtx;
    static std::map<std::uint64_t, Polynomial> cache;
    {
        std::lock_guard lock(mtx);
        auto it = cache.find(s);
        if (it != cache.end()) return it->second;
    }
    Polynomial r = Polynomial::one();
    for (std::uint64_t t = 2; t <= s; ++t) r = r * Polynomial::geometric(1, t);
    std::lock_guard lock(mtx);
    return cache.emplace(s, std::move(r)).first->second;
}

Polynomial q_multinomial(const MultiIndex& mi) {
    std::uint64_t sum = 0;
    for (std::uint64_t k : mi.ks) sum += k;
    if (sum != mi.j) return Polynomial::zero();
    Polynomial r = q_factorial(mi.j);
    for (std::uint64_t k : mi.ks) {
        if (k > 1) r = divide_exact(r, q_factorial(k));
    }
    return r;
}

Polynomial q_binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return Polynomial::zero();
    return q_multinomial({n, {k, n - k}});
}

Polynomial q_multinomial_residue(const MultiIndex& mi, std::uint64_t n) {
    if (n == 0) throw DomainError("q_multinomial_residue: n must be positive");
    std::vector<std::uint64_t> quot_digits, rem_digits;
    quot_digits.reserve(mi.ks.size());
    rem_digits.reserve(mi.ks.size());
    for (std::uint64_t k : mi.ks) {
        quot_digits.push_back(k / n);
        rem_digits.push_back(k % n);
    }
    BigInt outer = multinomial(mi.j / n, quot_digits);
    if (outer == 0) return Polynomial::zero();
    return Rational(outer) * q_multinomial({mi.j % n, rem_digits});
}

Rational q_multinomial_class(const MultiIndex& mi, std::uint64_t n, long long i) {
    if (n == 0) throw DomainError("q_multinomial_class: n must be positive");
    Rational total(0);
    for (std::uint64_t d : divisors(n).divisors) {
        std::uint64_t digit_sum = 0;
        std::vector<std::uint64_t> quot_digits, rem_digits;
        quot_digits.reserve(mi.ks.size());
        rem_digits.reserve(mi.ks.size());
        for (std::uint64_t k : mi.ks) {
            quot_digits.push_back(k / d);
            rem_digits.push_back(k % d);
            digit_sum += k % d;
        }
        // Divisors whose remainder digits overflow contribute nothing: the
        // remainder-digit q-multinomial is zero there.
        if (digit_sum >= d) continue;
        BigInt outer = multinomial(mi.j / d, quot_digits);
        if (outer == 0) continue;
        Polynomial base = simplify(q_multinomial({mi.j % d, rem_digits}), d);
        Rational inner(0);
        for (std::uint64_t s = 0; s < d; ++s) {
            const Rational& c = base.coeff(s);
            if (c == 0) continue;
            inner += c * ramanujan(d, i - static_cast<long long>(s));
        }
        total += Rational(outer) * inner;
    }
    return total / Rational(static_cast<unsigned long>(n));
}

Rational q_multinomial_class_simple(const MultiIndex& mi, std::uint64_t n, long long i) {
    if (n == 0) throw DomainError("q_multinomial_class_simple: n must be positive");
    if (mi.j % n != 0) {
        throw DomainError("q_multinomial_class_simple requires n | j");
    }
    std::uint64_t g = n;
    for (std::uint64_t k : mi.ks) g = std::gcd(g, k);
    Rational total(0);
    for (std::uint64_t d : divisors(g).divisors) {
        std::vector<std::uint64_t> scaled;
        scaled.reserve(mi.ks.size());
        for (std::uint64_t k : mi.ks) scaled.push_back(k / d);
        total += Rational(multinomial(mi.j / d, scaled)) * ramanujan(d, i);
    }
    return total / Rational(static_cast<unsigned long>(n));
}

Polynomial q_catalan(std::uint64_t j) {
    static std::mutex mtx;
    static std::map<std::uint64_t, Polynomial> cache;
    {
        std::lock_guard lock(mtx);
        auto it = cache.find(j);
        if (it != cache.end()) return it->second;
    }
    // (1-q)/(1-q^(j+1)) * [2j choose j] == (q-1) * [2j choose j] / (q^(j+1)-1)
    Polynomial numer = q_binomial(2 * j, j) * Polynomial::x_pow_minus_one(1);
    Polynomial r = divide_exact(numer, Polynomial::x_pow_minus_one(j + 1));
    std::lock_guard lock(mtx);
    return cache.emplace(j, std::move(r)).first->second;
}

Polynomial q_catalan_residue(std::uint64_t j, std::uint64_t n) {
    if (n < 2) throw DomainError("q_catalan_residue: n must be at least 2");
    std::uint64_t g = j % n;
    if (2 * g < n) {
        Rational outer(binomial((2 * j - 2 * g) / n, (j - g) / n));
        return outer * q_catalan(g);
    }
    if (g == n - 1) {
        BigInt outer = binomial((2 * j - n + 2) / n, (j + 1) / n);
        return Polynomial::monomial(1, Rational(-outer));
    }
    return Polynomial::zero();
}

BigInt catalan_major_count(const CatalanQuery& q) {
    if (q.n == 0) throw DomainError("catalan_major_count: n must be positive");
    Rational total(catalan_number(q.j));
    for (std::uint64_t d : divisors(q.n).divisors) {
        if (d == 1) continue;
        std::uint64_t g = q.j % d;
        if (2 * g < d) {
            Polynomial base = simplify(q_catalan(g), d);
            Rational inner(0);
            for (std::uint64_t s = 0; s < d; ++s) {
                const Rational& c = base.coeff(s);
                if (c == 0) continue;
                inner += c * ramanujan(d, q.i - static_cast<long long>(s));
            }
            total += Rational(binomial(2 * q.j / d, q.j / d)) * inner;
        } else if (g == d - 1) {
            total -= Rational(binomial(2 * q.j / d, q.j / d)) * ramanujan(d, q.i - 1);
        }
    }
    total /= Rational(static_cast<unsigned long>(q.n));
    BigInt count = to_integer_checked(total);
    if (count < 0) throw NonIntegerResult("catalan_major_count produced a negative value");
    return count;
}

} // namespace modenum
