#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "modenum/polynomial.hpp"

namespace modenum::testing {

/// Random integer polynomial with coefficients in [lo, hi]; trailing zeros
/// may shorten the stored degree.
inline Polynomial random_int_poly(std::mt19937_64& rng, std::size_t max_deg, int lo = -9,
                                  int hi = 9) {
    std::uniform_int_distribution<int> coeff(lo, hi);
    std::uniform_int_distribution<std::size_t> deg(0, max_deg);
    std::vector<Rational> cs(deg(rng) + 1);
    for (auto& c : cs) c = coeff(rng);
    return Polynomial(std::move(cs));
}

/// Random monic integer polynomial of degree exactly deg >= 1.
inline Polynomial random_monic_poly(std::mt19937_64& rng, std::size_t deg, int lo = -9,
                                    int hi = 9) {
    std::uniform_int_distribution<int> coeff(lo, hi);
    std::vector<Rational> cs(deg + 1);
    for (std::size_t k = 0; k < deg; ++k) cs[k] = coeff(rng);
    cs[deg] = 1;
    return Polynomial(std::move(cs));
}

} // namespace modenum::testing
