#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "modenum/numbers.hpp"

namespace modenum {

enum class Provenance { closed_form, oracle, both_agree };

inline std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::closed_form: return "closed-form";
        case Provenance::oracle: return "oracle";
        case Provenance::both_agree: return "both-agree";
    }
    return "?";
}

/// Result of a modular enumeration: one value per class index 0..n-1,
/// plus how the values were obtained.  When provenance is both_agree the
/// closed form and the brute-force oracle matched exactly.
struct CountTable {
    std::uint64_t n = 1;
    std::vector<Rational> values;
    Provenance provenance = Provenance::closed_form;
};

} // namespace modenum
