#include "modenum/number_theory.hpp"

#include <cassert>
#include <map>
#include <mutex>
#include <numeric>

#include "modenum/errors.hpp"

namespace modenum {

DivisorList divisors(std::uint64_t n) {
    if (n == 0) throw DomainError("divisors: n must be positive");
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return {n, std::move(small)};
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    if (n == 0) throw DomainError("factorize: n must be positive");
    std::vector<std::pair<std::uint64_t, unsigned>> factors;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        factors.emplace_back(p, e);
    }
    if (n > 1) factors.emplace_back(n, 1);
    return factors;
}

int moebius(std::uint64_t n) {
    int sign = 1;
    for (const auto& [p, e] : factorize(n)) {
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t phi = n;
    for (const auto& [p, e] : factorize(n)) phi -= phi / p;
    return phi;
}

Polynomial cyclotomic(std::uint64_t n) {
    if (n == 0) throw DomainError("cyclotomic: n must be positive");
    static std::mutex mtx;
    static std::map<std::uint64_t, Polynomial> cache;
    {
        std::lock_guard lock(mtx);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    // x^n - 1 divided by the product of the lower cyclotomic polynomials.
    Polynomial lower = Polynomial::one();
    for (std::uint64_t d : divisors(n).divisors) {
        if (d != n) lower = lower * cyclotomic(d);
    }
    Polynomial phi_n = divide_exact(Polynomial::x_pow_minus_one(n), lower);
    assert(phi_n.is_monic() && *phi_n.degree() == euler_phi(n));
    std::lock_guard lock(mtx);
    return cache.emplace(n, std::move(phi_n)).first->second;
}

namespace {

std::uint64_t reduce_mod(std::uint64_t n, long long l) {
    long long m = l % static_cast<long long>(n);
    if (m < 0) m += static_cast<long long>(n);
    return static_cast<std::uint64_t>(m);
}

} // namespace

long long ramanujan_moebius_sum(std::uint64_t n, long long l) {
    std::uint64_t l0 = reduce_mod(n, l);
    std::uint64_t g = l0 == 0 ? n : std::gcd(n, l0);
    long long sum = 0;
    for (std::uint64_t d : divisors(g).divisors) {
        sum += static_cast<long long>(d) * moebius(n / d);
    }
    return sum;
}

long long ramanujan_hoelder(std::uint64_t n, long long l) {
    std::uint64_t l0 = reduce_mod(n, l);
    std::uint64_t g = l0 == 0 ? n : std::gcd(n, l0);
    std::uint64_t m = n / g;
    long long num = moebius(m) * static_cast<long long>(euler_phi(n));
    return num / static_cast<long long>(euler_phi(m));
}

long long ramanujan(std::uint64_t n, long long l) {
    if (n == 0) throw DomainError("ramanujan: n must be positive");
    static std::mutex mtx;
    static std::map<std::uint64_t, std::vector<long long>> cache;
    std::lock_guard lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) {
        std::vector<long long> table(n);
        for (std::uint64_t t = 0; t < n; ++t) {
            table[t] = ramanujan_moebius_sum(n, static_cast<long long>(t));
            assert(table[t] == ramanujan_hoelder(n, static_cast<long long>(t)));
        }
        it = cache.emplace(n, std::move(table)).first;
    }
    return it->second[reduce_mod(n, l)];
}

} // namespace modenum
