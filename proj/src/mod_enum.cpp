#include "modenum/mod_enum.hpp"

#include <algorithm>
#include <cassert>

#include "modenum/errors.hpp"
#include "modenum/number_theory.hpp"

namespace modenum {

namespace {

void require_complete(std::uint64_t n, const std::map<std::uint64_t, Polynomial>& residues,
                      const char* who) {
    const auto& ds = divisors(n).divisors;
    bool ok = residues.size() == ds.size() &&
              std::all_of(ds.begin(), ds.end(),
                          [&](std::uint64_t d) { return residues.count(d) != 0; });
    if (!ok) {
        throw DomainError(std::string(who) + ": residue keys must be exactly the divisors of " +
                          std::to_string(n));
    }
}

} // namespace

ResidueSystem ResidueSystem::make(std::uint64_t n, std::map<std::uint64_t, Polynomial> residues) {
    if (n == 0) throw DomainError("ResidueSystem: n must be positive");
    require_complete(n, residues, "ResidueSystem");
    return {n, std::move(residues)};
}

ResidueSystem ResidueSystem::trivial(std::uint64_t n, const Polynomial& f) {
    std::map<std::uint64_t, Polynomial> residues;
    for (std::uint64_t d : divisors(n).divisors) residues.emplace(d, f);
    return {n, std::move(residues)};
}

Rational g_coeff(const Polynomial& a, std::uint64_t n, long long i) {
    if (n == 0) throw DomainError("g_coeff: n must be positive");
    Rational sum(0);
    const auto& cs = a.coeffs();
    for (std::size_t s = 0; s < cs.size(); ++s) {
        if (cs[s] == 0) continue;
        sum += cs[s] * ramanujan(n, i - static_cast<long long>(s));
    }
    return sum;
}

Polynomial g_poly(const Polynomial& a, std::uint64_t n) {
    if (n == 0) throw DomainError("g_poly: n must be positive");
    // Folding a modulo x^n - 1 first leaves every g_coeff term unchanged
    // because c_n(i - s) only depends on s mod n.
    Polynomial folded = simplify(a, n);
    Rational inv_n = make_rational(1, n);
    std::vector<Rational> out(n, Rational(0));
    for (std::uint64_t i = 0; i < n; ++i) {
        out[i] = inv_n * g_coeff(folded, n, static_cast<long long>(i));
    }
    return Polynomial(std::move(out));
}

Rational simplify_class_from_residues(const ResidueSystem& rs, long long i) {
    require_complete(rs.n, rs.residues, "simplify_from_residues");
    Rational sum(0);
    for (const auto& [d, m_d] : rs.residues) {
        Polynomial folded = simplify(m_d, d);
        for (std::uint64_t s = 0; s < d; ++s) {
            const Rational& c = folded.coeff(s);
            if (c == 0) continue;
            sum += c * ramanujan(d, i - static_cast<long long>(s));
        }
    }
    return sum / Rational(static_cast<unsigned long>(rs.n));
}

Polynomial simplify_from_residues(const ResidueSystem& rs) {
    require_complete(rs.n, rs.residues, "simplify_from_residues");
    const std::uint64_t n = rs.n;
    std::vector<Rational> out(n, Rational(0));
    for (const auto& [d, m_d] : rs.residues) {
        Polynomial folded = simplify(m_d, d);
        for (std::uint64_t s = 0; s < d; ++s) {
            const Rational& c = folded.coeff(s);
            if (c == 0) continue;
            for (std::uint64_t i = 0; i < n; ++i) {
                out[i] += c * ramanujan(d, static_cast<long long>(i) - static_cast<long long>(s));
            }
        }
    }
    Rational inv_n = make_rational(1, n);
    for (Rational& v : out) v *= inv_n;
    return Polynomial(std::move(out));
}

Polynomial crt_combine(const std::map<std::uint64_t, Polynomial>& targets, std::uint64_t n) {
    if (n == 0) throw DomainError("crt_combine: n must be positive");
    require_complete(n, targets, "crt_combine");
    auto ds = divisors(n).divisors;
    // Descending sweep; each step fixes the congruence at every divisor of
    // d without disturbing the ones already established.
    Polynomial e = targets.at(ds.back());
    for (auto it = ds.rbegin() + 1; it != ds.rend(); ++it) {
        std::uint64_t d = *it;
        Rational scale = make_rational(d, n);
        Polynomial correction = (targets.at(d) - e) * scale;
        e = e + correction * Polynomial::geometric(d, n / d);
    }
    return simplify(e, n);
}

Polynomial canonical_rep(const Polynomial& a, std::uint64_t n) {
    Polynomial rep = g_poly(a, n);
#ifndef NDEBUG
    // The three defining properties: n-simplified, congruent to a modulo
    // cyclotomic(n), and congruent to 0 modulo x^d - 1 for proper d | n.
    assert(!rep.degree() || *rep.degree() < n);
    if (n > 1) {
        assert(poly_rem(rep - a, cyclotomic(n)).is_zero());
        for (std::uint64_t d : divisors(n).divisors) {
            if (d == n) continue;
            assert(poly_rem(rep, Polynomial::x_pow_minus_one(d)).is_zero());
        }
    } else {
        assert(poly_rem(rep - a, cyclotomic(1)).is_zero());
    }
#endif
    return rep;
}

bool invariant_equal(const Polynomial& a, const Polynomial& b, std::uint64_t n) {
    if (n == 0) throw DomainError("invariant_equal: n must be positive");
    if (!integrality(a).is_integral || !integrality(b).is_integral) {
        throw NonIntegralInput("invariant_equal requires integer-coefficient polynomials");
    }
    return g_poly(a, n) == g_poly(b, n);
}

} // namespace modenum
