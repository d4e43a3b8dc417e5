#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "modenum/polynomial.hpp"

namespace modenum {

/// Finite binary word.  Stored as a bit sequence; the 1-based position
/// conventions of major index and descent count live in those functions,
/// not here.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<bool> letters) : letters_(std::move(letters)) {}

    /// Parses an ASCII 0/1 string; throws ParseError on other characters.
    static Word from_string(std::string_view s);
    std::string to_string() const;

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    bool letter(std::size_t pos) const { return letters_[pos]; } // 0-based
    void set(std::size_t pos, bool v) { letters_[pos] = v; }

    std::size_t ones() const;
    std::size_t zeros() const { return size() - ones(); }

    friend bool operator==(const Word& a, const Word& b) {
        return a.letters_ == b.letters_;
    }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
    friend bool operator<(const Word& a, const Word& b) {
        return a.letters_ < b.letters_;
    }

private:
    std::vector<bool> letters_;
};

/// At least as many zeros as ones.
bool is_flat(const Word& w);
/// Every prefix is flat.  The empty word is a Dyck word.
bool is_dyck(const Word& w);

/// Sum of 1-based positions i with w_i = 1 and w_{i+1} = 0.
std::size_t major_index(const Word& w);

/// Number of 10 adjacencies, plus one if the word ends in 1 and starts
/// with 0.
std::size_t descent_count(const Word& w);

/// Cyclic shift: final letter killed and reinserted at the front.
/// Throws EmptyWord.
Word gamma(const Word& w);
Word gamma_inv(const Word& w);

/// The modified rotation on flat non-Dyck words: gamma(w) when that is
/// non-Dyck, otherwise gamma(w) with the first letter and the letter at
/// the smallest balanced prefix swapped.  Throws NotFlatNonDyck.
Word delta(const Word& w);
Word delta_inv(const Word& w);

/// The sequence w, delta(w), ..., delta^(n-1)(w) for n = |w|; one more
/// application returns w.
std::vector<Word> delta_orbit(const Word& w);

enum class WordKind { all, flat, dyck };

/// Major-index generating function over all words of the given kind with
/// the given letter counts, by exhaustive generation.
Polynomial enumerate_major(WordKind kind, std::size_t ones, std::size_t zeros);

/// All Dyck words with the given letter counts, lexicographic order.
std::vector<Word> dyck_words(std::size_t ones, std::size_t zeros);

/// Block classification of a Dyck word of length k*d: every d-block is
/// all ones, all zeros, or contains a single one (type 2) or a single
/// zero (type 3), with the letters before a type-2 block balanced and the
/// letters through the end of a type-3 block balanced.  Non-Dyck words
/// are never d-rigid.  Throws LengthNotDivisible when d does not divide
/// |w|, DomainError when d < 2.
bool is_d_rigid(const Word& w, std::uint64_t d);

/// d-rigid with every type-2 block ending in one and every type-3 block
/// beginning with zero.
bool is_d_straightened(const Word& w, std::uint64_t d);

/// Major-index generating function over n-rigid Dyck words with the given
/// letter counts.  Throws LengthNotDivisible when n does not divide
/// ones + zeros.
Polynomial enumerate_rigid_major(std::uint64_t n, std::size_t ones, std::size_t zeros);

/// Closed-form count of d-straightened Dyck words: binomial(j+k, k).
/// The letter counts are (d*j zeros, d*k ones) when j >= k and
/// (d*k - 1 zeros, d*j + 1 ones) otherwise.
BigInt count_straightened(std::uint64_t d, std::uint64_t j, std::uint64_t k);

/// Exhaustive counterpart of count_straightened: enumerates candidate
/// block sequences and counts those passing is_d_straightened.
BigInt count_straightened_exhaustive(std::uint64_t d, std::uint64_t j, std::uint64_t k);

/// Exhaustive count of d-straightened words with raw letter counts.
BigInt count_straightened_words(std::uint64_t d, std::size_t ones, std::size_t zeros);

} // namespace modenum
