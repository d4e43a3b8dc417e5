#include "modenum/dyck.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "modenum/errors.hpp"

namespace modenum {

Word Word::from_string(std::string_view s) {
    std::vector<bool> letters;
    letters.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1') {
            throw ParseError("word: expected only 0/1 characters, got '" + std::string(1, c) + "'");
        }
        letters.push_back(c == '1');
    }
    return Word(std::move(letters));
}

std::string Word::to_string() const {
    std::string s;
    s.reserve(size());
    for (bool b : letters_) s += b ? '1' : '0';
    return s;
}

std::size_t Word::ones() const {
    return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), true));
}

bool is_flat(const Word& w) { return w.zeros() >= w.ones(); }

bool is_dyck(const Word& w) {
    long balance = 0; // zeros minus ones over the prefix
    for (std::size_t p = 0; p < w.size(); ++p) {
        balance += w.letter(p) ? -1 : 1;
        if (balance < 0) return false;
    }
    return true;
}

std::size_t major_index(const Word& w) {
    std::size_t m = 0;
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
        if (w.letter(p) && !w.letter(p + 1)) m += p + 1; // 1-based position
    }
    return m;
}

std::size_t descent_count(const Word& w) {
    std::size_t d = 0;
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
        if (w.letter(p) && !w.letter(p + 1)) ++d;
    }
    if (!w.empty() && w.letter(w.size() - 1) && !w.letter(0)) ++d;
    return d;
}

Word gamma(const Word& w) {
    if (w.empty()) throw EmptyWord("gamma: empty word");
    std::vector<bool> out;
    out.reserve(w.size());
    out.push_back(w.letter(w.size() - 1));
    for (std::size_t p = 0; p + 1 < w.size(); ++p) out.push_back(w.letter(p));
    return Word(std::move(out));
}

Word gamma_inv(const Word& w) {
    if (w.empty()) throw EmptyWord("gamma_inv: empty word");
    std::vector<bool> out;
    out.reserve(w.size());
    for (std::size_t p = 1; p < w.size(); ++p) out.push_back(w.letter(p));
    out.push_back(w.letter(0));
    return Word(std::move(out));
}

namespace {

void require_flat_non_dyck(const Word& w, const char* who) {
    if (!is_flat(w) || is_dyck(w)) {
        throw NotFlatNonDyck(std::string(who) + ": word must be flat and non-Dyck, got \"" +
                             w.to_string() + "\"");
    }
}

} // namespace

Word delta(const Word& w) {
    require_flat_non_dyck(w, "delta");
    Word r = gamma(w);
    if (!is_dyck(r)) return r; // shifting case 1
    // Shifting case 2: smallest k whose prefix is balanced; exists because
    // w is flat and non-Dyck.  The rotated word is Dyck, so it starts with
    // a zero and position k holds a one; swap them.
    long balance = 0;
    std::size_t k = 0;
    for (std::size_t p = 0; p < r.size(); ++p) {
        balance += r.letter(p) ? -1 : 1;
        if (balance == 0) {
            k = p + 1;
            break;
        }
    }
    assert(k >= 2 && !r.letter(0) && r.letter(k - 1));
    r.set(0, true);
    r.set(k - 1, false);
    return r;
}

Word delta_inv(const Word& w) {
    require_flat_non_dyck(w, "delta_inv");
    if (!w.letter(0)) return gamma_inv(w);
    // Word begins with a one.  When some prefix carries at least two more
    // ones than zeros, the plain rotation preimage works (case 1 again).
    long excess = 0; // ones minus zeros
    for (std::size_t p = 0; p < w.size(); ++p) {
        excess += w.letter(p) ? 1 : -1;
        if (excess >= 2) return gamma_inv(w);
    }
    // Every prefix has at most one extra one.  Take the largest k whose
    // length-(k-1) prefix has more ones than zeros; flatness forces a zero
    // at position k.  Swapping it to the front yields the Dyck word whose
    // rotation preimage maps forward onto w through shifting case 2.
    excess = 0;
    std::size_t k = 0;
    for (std::size_t len = 0; len < w.size(); ++len) {
        if (excess > 0) k = len + 1;
        excess += w.letter(len) ? 1 : -1;
    }
    assert(k >= 2 && !w.letter(k - 1));
    Word u = w;
    u.set(0, false);
    u.set(k - 1, true);
    assert(is_dyck(u));
    return gamma_inv(u);
}

std::vector<Word> delta_orbit(const Word& w) {
    require_flat_non_dyck(w, "delta_orbit");
    std::vector<Word> orbit;
    orbit.reserve(w.size());
    Word cur = w;
    for (std::size_t t = 0; t < w.size(); ++t) {
        orbit.push_back(cur);
        if (t + 1 < w.size()) cur = delta(cur);
    }
    return orbit;
}

// ---------------------------------------------------------------------
//  Exhaustive generation
// ---------------------------------------------------------------------

namespace {

template <typename Visit>
void gen_words(std::vector<bool>& buf, std::size_t ones_left, std::size_t zeros_left,
               long balance, bool dyck_only, Visit&& visit) {
    if (ones_left == 0 && zeros_left == 0) {
        visit(buf);
        return;
    }
    if (zeros_left > 0) {
        buf.push_back(false);
        gen_words(buf, ones_left, zeros_left - 1, balance + 1, dyck_only, visit);
        buf.pop_back();
    }
    if (ones_left > 0 && (!dyck_only || balance > 0)) {
        buf.push_back(true);
        gen_words(buf, ones_left - 1, zeros_left, balance - 1, dyck_only, visit);
        buf.pop_back();
    }
}

Polynomial histogram_to_poly(const std::vector<BigInt>& hist) {
    std::vector<Rational> coeffs;
    coeffs.reserve(hist.size());
    for (const BigInt& c : hist) coeffs.emplace_back(c);
    return Polynomial(std::move(coeffs));
}

} // namespace

Polynomial enumerate_major(WordKind kind, std::size_t ones, std::size_t zeros) {
    if (kind != WordKind::all && zeros < ones) return Polynomial::zero(); // no flat words
    std::size_t n = ones + zeros;
    std::vector<BigInt> hist(n == 0 ? 1 : n * (n - 1) / 2 + 1, BigInt(0));
    std::vector<bool> buf;
    buf.reserve(n);
    gen_words(buf, ones, zeros, 0, kind == WordKind::dyck,
              [&](const std::vector<bool>& letters) { hist[major_index(Word(letters))] += 1; });
    return histogram_to_poly(hist);
}

std::vector<Word> dyck_words(std::size_t ones, std::size_t zeros) {
    std::vector<Word> out;
    if (zeros < ones) return out;
    std::vector<bool> buf;
    buf.reserve(ones + zeros);
    gen_words(buf, ones, zeros, 0, true,
              [&](const std::vector<bool>& letters) { out.emplace_back(letters); });
    return out;
}

// ---------------------------------------------------------------------
//  Rigid and straightened words
// ---------------------------------------------------------------------

namespace {

void require_block_length(const Word& w, std::uint64_t d, const char* who) {
    if (d < 2) throw DomainError(std::string(who) + ": d must be greater than one");
    if (w.size() % d != 0) {
        throw LengthNotDivisible(std::string(who) + ": word length " +
                                 std::to_string(w.size()) + " is not divisible by " +
                                 std::to_string(d));
    }
}

enum class RigidCheck { rigid, straightened };

bool check_rigid(const Word& w, std::uint64_t d, RigidCheck mode) {
    if (!is_dyck(w)) return false;
    const std::size_t blocks = w.size() / d;
    long balance = 0; // zeros minus ones seen so far
    for (std::size_t b = 0; b < blocks; ++b) {
        std::size_t block_ones = 0;
        for (std::size_t t = 0; t < d; ++t) block_ones += w.letter(b * d + t) ? 1 : 0;
        std::size_t block_zeros = d - block_ones;
        long balance_before = balance;
        balance += static_cast<long>(block_zeros) - static_cast<long>(block_ones);
        if (block_ones == 0 || block_ones == d) continue;
        bool type2 = block_zeros == d - 1; // single one
        bool type3 = block_ones == d - 1;  // single zero
        if (!type2 && !type3) return false;
        if (type2 && balance_before != 0) return false;
        if (type3 && balance != 0) return false;
        if (mode == RigidCheck::straightened) {
            if (type2 && !w.letter(b * d + d - 1)) return false; // must end in one
            if (type3 && w.letter(b * d)) return false;          // must begin with zero
        }
    }
    return true;
}

} // namespace

bool is_d_rigid(const Word& w, std::uint64_t d) {
    require_block_length(w, d, "is_d_rigid");
    return check_rigid(w, d, RigidCheck::rigid);
}

bool is_d_straightened(const Word& w, std::uint64_t d) {
    require_block_length(w, d, "is_d_straightened");
    return check_rigid(w, d, RigidCheck::straightened);
}

Polynomial enumerate_rigid_major(std::uint64_t n, std::size_t ones, std::size_t zeros) {
    if (n < 2) throw DomainError("enumerate_rigid_major: n must be greater than one");
    if ((ones + zeros) % n != 0) {
        throw LengthNotDivisible("enumerate_rigid_major: ones + zeros must be divisible by n");
    }
    std::size_t len = ones + zeros;
    std::vector<BigInt> hist(len == 0 ? 1 : len * (len - 1) / 2 + 1, BigInt(0));
    std::vector<bool> buf;
    buf.reserve(len);
    gen_words(buf, ones, zeros, 0, true, [&](const std::vector<bool>& letters) {
        Word w(letters);
        if (check_rigid(w, n, RigidCheck::rigid)) hist[major_index(w)] += 1;
    });
    return histogram_to_poly(hist);
}

BigInt count_straightened(std::uint64_t d, std::uint64_t j, std::uint64_t k) {
    if (d < 2) throw DomainError("count_straightened: d must be greater than one");
    return binomial(j + k, k);
}

BigInt count_straightened_words(std::uint64_t d, std::size_t ones, std::size_t zeros) {
    if (d < 2) throw DomainError("count_straightened_words: d must be greater than one");
    if ((ones + zeros) % d != 0) {
        throw LengthNotDivisible("count_straightened_words: length must be divisible by d");
    }
    // Straightened words are built from four block shapes only: all zeros,
    // all ones, 0^(d-1) 1 and 0 1^(d-1).  Enumerate block sequences with
    // the right letter counts and keep those the predicate accepts.
    std::vector<std::vector<bool>> shapes;
    {
        std::set<std::vector<bool>> seen;
        std::vector<bool> pure0(d, false), pure1(d, true);
        std::vector<bool> single1(d, false), single0(d, true);
        single1[d - 1] = true;
        single0[0] = false;
        for (auto& s : {pure0, pure1, single1, single0}) {
            if (seen.insert(s).second) shapes.push_back(s);
        }
    }
    std::size_t blocks = (ones + zeros) / d;
    BigInt count = 0;
    std::vector<bool> buf;
    buf.reserve(ones + zeros);
    auto rec = [&](auto&& self, std::size_t b, std::size_t ones_left) -> void {
        if (b == blocks) {
            if (ones_left == 0 && is_d_straightened(Word(buf), d)) count += 1;
            return;
        }
        for (const auto& shape : shapes) {
            std::size_t shape_ones =
                static_cast<std::size_t>(std::count(shape.begin(), shape.end(), true));
            if (shape_ones > ones_left) continue;
            if (ones_left - shape_ones > (blocks - b - 1) * d) continue;
            buf.insert(buf.end(), shape.begin(), shape.end());
            self(self, b + 1, ones_left - shape_ones);
            buf.resize(buf.size() - d);
        }
    };
    rec(rec, 0, ones);
    return count;
}

BigInt count_straightened_exhaustive(std::uint64_t d, std::uint64_t j, std::uint64_t k) {
    if (d < 2) throw DomainError("count_straightened_exhaustive: d must be greater than one");
    std::size_t zeros, ones;
    if (j >= k) {
        zeros = static_cast<std::size_t>(d * j);
        ones = static_cast<std::size_t>(d * k);
    } else {
        zeros = static_cast<std::size_t>(d * k - 1);
        ones = static_cast<std::size_t>(d * j + 1);
    }
    return count_straightened_words(d, ones, zeros);
}

} // namespace modenum
