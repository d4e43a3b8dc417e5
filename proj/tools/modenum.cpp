// modenum: exact modular enumeration of combinatorial generating functions.
//
// Every subcommand prints an aligned text table (or a bare value) by
// default and machine-readable JSON with --json.  --verify reruns the
// computation through an independent brute-force oracle and exits
// nonzero on mismatch.  Exit codes: 0 ok, 2 usage, 3 oracle mismatch,
// 4 domain error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "modenum/count_table.hpp"
#include "modenum/dyck.hpp"
#include "modenum/errors.hpp"
#include "modenum/json_io.hpp"
#include "modenum/mod_enum.hpp"
#include "modenum/number_theory.hpp"
#include "modenum/polynomial.hpp"
#include "modenum/q_combinatorics.hpp"
#include "modenum/subset_sum.hpp"

using namespace modenum;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitDomain = 4;

std::uint64_t brute_cap() {
    if (const char* env = std::getenv("MODENUM_MAX_BRUTE")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw DomainError("MODENUM_MAX_BRUTE is not a number");
        }
    }
    return std::uint64_t(1) << 24;
}

std::uint64_t brute_cap_bits() {
    std::uint64_t cap = brute_cap();
    std::uint64_t bits = 0;
    while ((std::uint64_t(1) << (bits + 1)) <= cap && bits < 62) ++bits;
    return bits;
}

void emit_poly(const Polynomial& p, bool as_json) {
    if (as_json) {
        std::cout << json{{"result", poly_to_json(p)}}.dump() << "\n";
    } else {
        std::cout << to_text(p) << "\n";
    }
}

void emit_value(const Rational& v, bool as_json) {
    if (as_json) {
        std::cout << json{{"result", rational_to_string(v)}}.dump() << "\n";
    } else {
        std::cout << rational_to_string(v) << "\n";
    }
}

void emit_table(const CountTable& t, bool as_json, const json& extra = json::object()) {
    if (as_json) {
        json out = count_table_to_json(t);
        for (auto& [k, v] : extra.items()) out[k] = v;
        std::cout << out.dump() << "\n";
        return;
    }
    std::size_t width = 5; // len("count")
    for (const Rational& v : t.values) width = std::max(width, rational_to_string(v).size());
    std::size_t iw = std::max<std::size_t>(1, std::to_string(t.n - 1).size());
    std::cout << std::string(iw > 1 ? iw - 1 : 0, ' ') << "i  count\n";
    for (std::uint64_t i = 0; i < t.n; ++i) {
        std::string is = std::to_string(i);
        std::string vs = rational_to_string(t.values[i]);
        std::cout << std::string(iw - is.size(), ' ') << is << "  " << vs << "\n";
    }
    std::cout << "provenance: " << to_string(t.provenance) << "\n";
}

int report_mismatch(const std::string& what) {
    std::cerr << "verify: MISMATCH in " << what << "\n";
    return kExitMismatch;
}

// --- inversion-number oracle for q-multinomials ------------------------

Polynomial inversion_gf_oracle(const MultiIndex& mi, std::uint64_t cap) {
    BigInt total = multinomial(mi.j, mi.ks);
    if (total > cap) {
        throw DomainError("qmultinomial --verify: " + total.get_str() +
                          " permutations exceed MODENUM_MAX_BRUTE");
    }
    std::vector<int> word;
    for (std::size_t part = 0; part < mi.ks.size(); ++part) {
        for (std::uint64_t t = 0; t < mi.ks[part]; ++t) word.push_back(static_cast<int>(part));
    }
    if (word.size() != mi.j) return Polynomial::zero(); // parts do not sum to j
    std::vector<BigInt> hist(mi.j * mi.j / 2 + 2, BigInt(0));
    do {
        std::size_t inv = 0;
        for (std::size_t a = 0; a < word.size(); ++a) {
            for (std::size_t b = a + 1; b < word.size(); ++b) {
                if (word[a] > word[b]) ++inv;
            }
        }
        hist[inv] += 1;
    } while (std::next_permutation(word.begin(), word.end()));
    std::vector<Rational> coeffs(hist.begin(), hist.end());
    return Polynomial(std::move(coeffs));
}

// --- subcommand handlers ------------------------------------------------

int run_simplify(const std::string& poly_text, std::uint64_t n, bool verify, bool as_json) {
    Polynomial a = parse_polynomial(poly_text);
    Polynomial s = simplify(a, n);
    if (verify && s != poly_rem(a, Polynomial::x_pow_minus_one(n))) {
        return report_mismatch("simplify vs remainder by x^n - 1");
    }
    emit_poly(s, as_json);
    return kExitOk;
}

int run_cyclotomic(std::uint64_t n, bool verify, bool as_json) {
    Polynomial phi = cyclotomic(n);
    if (verify) {
        // independent route: product over d | n of (x^(n/d) - 1)^moebius(d)
        Polynomial numer = Polynomial::one();
        Polynomial denom = Polynomial::one();
        for (std::uint64_t d : divisors(n).divisors) {
            int mu = moebius(d);
            if (mu == 1) numer = numer * Polynomial::x_pow_minus_one(n / d);
            if (mu == -1) denom = denom * Polynomial::x_pow_minus_one(n / d);
        }
        if (divide_exact(numer, denom) != phi) {
            return report_mismatch("cyclotomic recursion vs moebius product");
        }
    }
    emit_poly(phi, as_json);
    return kExitOk;
}

int run_ramanujan(std::uint64_t n, long long l, bool verify, bool as_json) {
    long long c = ramanujan(n, l);
    if (verify) {
        if (c != ramanujan_moebius_sum(n, l) || c != ramanujan_hoelder(n, l)) {
            return report_mismatch("ramanujan moebius sum vs totient closed form");
        }
        long long sum = 0;
        for (std::uint64_t d : divisors(n).divisors) sum += ramanujan(d, l);
        long long l0 = l % static_cast<long long>(n);
        if (sum != ((l0 == 0) ? static_cast<long long>(n) : 0)) {
            return report_mismatch("ramanujan divisor sum identity");
        }
    }
    emit_value(Rational(static_cast<long>(c)), as_json);
    return kExitOk;
}

int run_grep_invariant(const std::string& poly_text, std::uint64_t n, bool verify,
                       bool as_json) {
    Polynomial a = parse_polynomial(poly_text);
    Polynomial rep = canonical_rep(a, n);
    if (verify) {
        bool ok = poly_rem(rep - a, cyclotomic(n)).is_zero();
        for (std::uint64_t d : divisors(n).divisors) {
            if (d != n && !poly_rem(rep, Polynomial::x_pow_minus_one(d)).is_zero()) ok = false;
        }
        if (!ok) return report_mismatch("canonical representative congruences");
    }
    emit_poly(rep, as_json);
    return kExitOk;
}

int run_crt(const std::vector<std::string>& residue_args, std::uint64_t n, bool verify,
            bool as_json) {
    std::map<std::uint64_t, Polynomial> targets;
    for (const std::string& arg : residue_args) {
        auto eq = arg.find('=');
        if (eq == std::string::npos) {
            throw ParseError("crt: --residue expects d=POLY, got \"" + arg + "\"");
        }
        std::uint64_t d = std::stoull(arg.substr(0, eq));
        targets[d] = parse_polynomial(arg.substr(eq + 1));
    }
    Polynomial combined = crt_combine(targets, n);
    if (verify) {
        for (const auto& [d, target] : targets) {
            if (!poly_rem(combined - target, cyclotomic(d)).is_zero()) {
                return report_mismatch("crt congruence at divisor " + std::to_string(d));
            }
        }
        if (combined != simplify_from_residues(ResidueSystem::make(n, targets))) {
            return report_mismatch("crt sweep vs invariant reconstruction");
        }
    }
    emit_poly(combined, as_json);
    return kExitOk;
}

int run_qmultinomial(std::uint64_t j, const std::vector<std::uint64_t>& ks,
                     std::optional<std::uint64_t> n, std::optional<long long> i, bool verify,
                     bool as_json) {
    MultiIndex mi{j, ks};
    if (!n) {
        Polynomial p = q_multinomial(mi);
        if (verify && p != inversion_gf_oracle(mi, brute_cap())) {
            return report_mismatch("q-multinomial vs inversion-statistic enumeration");
        }
        emit_poly(p, as_json);
        return kExitOk;
    }
    Polynomial expanded;
    if (verify) expanded = q_multinomial(mi);
    if (i) {
        Rational v = q_multinomial_class(mi, *n, *i);
        if (verify && v != coeff_class(expanded, *n, *i)) {
            return report_mismatch("q-multinomial class vs expanded polynomial");
        }
        emit_value(v, as_json);
        return kExitOk;
    }
    CountTable table{*n, {}, verify ? Provenance::both_agree : Provenance::closed_form};
    for (std::uint64_t cls = 0; cls < *n; ++cls) {
        Rational v = q_multinomial_class(mi, *n, static_cast<long long>(cls));
        if (verify && v != coeff_class(expanded, *n, static_cast<long long>(cls))) {
            return report_mismatch("q-multinomial class vs expanded polynomial");
        }
        table.values.push_back(std::move(v));
    }
    emit_table(table, as_json, {{"j", j}});
    return kExitOk;
}

int run_qcatalan(std::uint64_t j, std::optional<std::uint64_t> n, bool verify, bool as_json) {
    if (!n) {
        Polynomial p = q_catalan(j);
        if (verify) {
            if (catalan_number(j) > brute_cap()) {
                throw DomainError("qcatalan --verify: Dyck enumeration exceeds MODENUM_MAX_BRUTE");
            }
            if (p != enumerate_major(WordKind::dyck, j, j)) {
                return report_mismatch("q-Catalan vs Dyck-word enumeration");
            }
        }
        emit_poly(p, as_json);
        return kExitOk;
    }
    Polynomial residue = q_catalan_residue(j, *n);
    if (verify && !poly_rem(q_catalan(j) - residue, cyclotomic(*n)).is_zero()) {
        return report_mismatch("q-Catalan residue vs cyclotomic remainder");
    }
    emit_poly(residue, as_json);
    return kExitOk;
}

int run_catalan(std::uint64_t j, std::uint64_t n, std::optional<long long> i, bool verify,
                bool as_json) {
    Polynomial gf;
    if (verify) {
        if (catalan_number(j) > brute_cap()) {
            throw DomainError("catalan --verify: Dyck enumeration exceeds MODENUM_MAX_BRUTE");
        }
        gf = enumerate_major(WordKind::dyck, j, j);
    }
    if (i) {
        BigInt v = catalan_major_count({j, n, *i});
        if (verify && Rational(v) != coeff_class(gf, n, *i)) {
            return report_mismatch("catalan count vs Dyck-word enumeration");
        }
        emit_value(Rational(v), as_json);
        return kExitOk;
    }
    CountTable table{n, {}, verify ? Provenance::both_agree : Provenance::closed_form};
    for (std::uint64_t cls = 0; cls < n; ++cls) {
        BigInt v = catalan_major_count({j, n, static_cast<long long>(cls)});
        if (verify && Rational(v) != coeff_class(gf, n, static_cast<long long>(cls))) {
            return report_mismatch("catalan count vs Dyck-word enumeration");
        }
        table.values.emplace_back(v);
    }
    emit_table(table, as_json, {{"j", j}});
    return kExitOk;
}

int run_subsetsum(std::uint64_t j, std::uint64_t n, std::optional<long long> i, bool verify,
                  bool as_json) {
    // closed form needs n <= j; otherwise fall back to the polynomial oracle
    bool theorem_path = n >= 1 && n <= j;
    Polynomial expanded;
    if (!theorem_path) expanded = subset_sum_poly(j);

    auto one_class = [&](long long cls) -> Rational {
        if (theorem_path) return Rational(subset_sum_class({n, j, cls}));
        return coeff_class(expanded, n, cls);
    };
    auto check_class = [&](long long cls, const Rational& got) -> bool {
        if (j > brute_cap_bits()) {
            throw DomainError("subsetsum --verify: 2^" + std::to_string(j) +
                              " subsets exceed MODENUM_MAX_BRUTE");
        }
        return got == Rational(subset_sum_brute(n, j, cls, 62));
    };

    Provenance base = theorem_path ? Provenance::closed_form : Provenance::oracle;
    if (i) {
        Rational v = one_class(*i);
        if (verify && !check_class(*i, v)) {
            return report_mismatch("subset-sum count vs subset enumeration");
        }
        emit_value(v, as_json);
        return kExitOk;
    }
    CountTable table{n, {}, verify ? Provenance::both_agree : base};
    for (std::uint64_t cls = 0; cls < n; ++cls) {
        Rational v = one_class(static_cast<long long>(cls));
        if (verify && !check_class(static_cast<long long>(cls), v)) {
            return report_mismatch("subset-sum count vs subset enumeration");
        }
        table.values.push_back(std::move(v));
    }
    emit_table(table, as_json, {{"j", j}});
    return kExitOk;
}

// --- dyck subcommands ---------------------------------------------------

int run_dyck_major(const std::string& word_text, bool as_json) {
    Word w = Word::from_string(word_text);
    if (as_json) {
        std::cout << json{{"word", w.to_string()},
                          {"length", w.size()},
                          {"ones", w.ones()},
                          {"flat", is_flat(w)},
                          {"dyck", is_dyck(w)},
                          {"major_index", major_index(w)},
                          {"descent_count", descent_count(w)}}
                         .dump()
                  << "\n";
        return kExitOk;
    }
    std::cout << "word           " << w.to_string() << "\n"
              << "length         " << w.size() << "\n"
              << "ones           " << w.ones() << "\n"
              << "flat           " << (is_flat(w) ? "true" : "false") << "\n"
              << "dyck           " << (is_dyck(w) ? "true" : "false") << "\n"
              << "major_index    " << major_index(w) << "\n"
              << "descent_count  " << descent_count(w) << "\n";
    return kExitOk;
}

int run_dyck_orbit(const std::string& word_text, bool verify, bool as_json) {
    Word w = Word::from_string(word_text);
    auto orbit = delta_orbit(w);
    if (verify) {
        if (delta(orbit.back()) != w) return report_mismatch("delta orbit closure");
        for (std::size_t t = 0; t + 1 < orbit.size(); ++t) {
            if (delta_inv(orbit[t + 1]) != orbit[t]) {
                return report_mismatch("delta inverse roundtrip");
            }
        }
    }
    if (as_json) {
        json rows = json::array();
        for (const Word& u : orbit) {
            rows.push_back({{"word", u.to_string()}, {"major_index", major_index(u)}});
        }
        std::cout << json{{"orbit", rows}}.dump() << "\n";
        return kExitOk;
    }
    std::size_t tw = std::to_string(orbit.size() - 1).size();
    for (std::size_t t = 0; t < orbit.size(); ++t) {
        std::string ts = std::to_string(t);
        std::cout << std::string(tw - ts.size(), ' ') << ts << "  " << orbit[t].to_string()
                  << "  major=" << major_index(orbit[t]) << "\n";
    }
    return kExitOk;
}

int run_dyck_rigid(const std::string& word_text, std::uint64_t d, bool as_json) {
    Word w = Word::from_string(word_text);
    bool rigid = is_d_rigid(w, d);
    bool straightened = is_d_straightened(w, d);
    if (as_json) {
        std::cout << json{{"word", w.to_string()},
                          {"d", d},
                          {"rigid", rigid},
                          {"straightened", straightened}}
                         .dump()
                  << "\n";
        return kExitOk;
    }
    std::cout << "rigid         " << (rigid ? "true" : "false") << "\n"
              << "straightened  " << (straightened ? "true" : "false") << "\n";
    return kExitOk;
}

int run_dyck_genfun(const std::string& kind_text, std::uint64_t ones, std::uint64_t zeros,
                    std::optional<std::uint64_t> rigid_n, bool as_json) {
    Polynomial gf;
    if (rigid_n) {
        gf = enumerate_rigid_major(*rigid_n, ones, zeros);
    } else {
        WordKind kind = WordKind::dyck;
        if (kind_text == "all") kind = WordKind::all;
        else if (kind_text == "flat") kind = WordKind::flat;
        else if (kind_text != "dyck") throw DomainError("dyck genfun: unknown kind " + kind_text);
        gf = enumerate_major(kind, ones, zeros);
    }
    emit_poly(gf, as_json);
    return kExitOk;
}

int run_dyck_classes(std::uint64_t n, bool as_json) {
    if (n == 0 || n > 22) throw DomainError("dyck classes: n must be in 1..22");
    // orbit count of delta over all flat non-Dyck words of length n
    std::set<Word> seen;
    std::uint64_t classes = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        std::vector<bool> letters(n);
        for (std::uint64_t p = 0; p < n; ++p) letters[p] = (mask >> p) & 1;
        Word w(std::move(letters));
        if (!is_flat(w) || is_dyck(w) || seen.count(w)) continue;
        ++classes;
        Word cur = w;
        do {
            seen.insert(cur);
            cur = delta(cur);
        } while (cur != w);
    }
    if (as_json) {
        std::cout << json{{"n", n}, {"classes", classes}}.dump() << "\n";
    } else {
        std::cout << classes << "\n";
    }
    return kExitOk;
}

// --- property sweep -----------------------------------------------------

struct SweepState {
    int failures = 0;
    void record(const std::string& name, bool ok) {
        std::cout << (ok ? "ok   " : "FAIL ") << name << "\n";
        if (!ok) ++failures;
    }
};

void sweep_poly(SweepState& st, std::mt19937_64& rng, int trials) {
    auto random_poly = [&](std::size_t max_deg) {
        std::uniform_int_distribution<int> coeff(-9, 9);
        std::uniform_int_distribution<std::size_t> deg(0, max_deg);
        std::vector<Rational> cs(deg(rng) + 1);
        for (auto& c : cs) c = coeff(rng);
        return Polynomial(std::move(cs));
    };
    bool ok = true;
    std::uniform_int_distribution<std::size_t> mdeg(1, 8);
    std::uniform_int_distribution<int> coeff(-9, 9);
    for (int t = 0; t < trials && ok; ++t) {
        Polynomial a = random_poly(50);
        std::vector<Rational> mcs(mdeg(rng) + 1);
        for (auto& c : mcs) c = coeff(rng);
        mcs.back() = 1;
        Polynomial m(std::move(mcs));
        auto [q, r] = poly_divmod(a, m);
        ok = q * m + r == a && (r.is_zero() || *r.degree() < *m.degree());
    }
    st.record("poly: division round trip", ok);
    ok = true;
    for (int t = 0; t < trials && ok; ++t) {
        Polynomial a = random_poly(60);
        for (std::uint64_t n = 1; n <= 20 && ok; ++n) {
            ok = simplify(a, n) == poly_rem(a, Polynomial::x_pow_minus_one(n));
        }
    }
    st.record("poly: simplify equals remainder mod x^n-1", ok);
}

void sweep_number_theory(SweepState& st, std::uint64_t max_n) {
    bool ok = true;
    for (std::uint64_t n = 1; n <= std::min<std::uint64_t>(max_n, 60) && ok; ++n) {
        Polynomial prod = Polynomial::one();
        for (std::uint64_t d : divisors(n).divisors) prod = prod * cyclotomic(d);
        ok = prod == Polynomial::x_pow_minus_one(n);
    }
    st.record("nt: cyclotomic product equals x^n-1", ok);
    ok = true;
    for (std::uint64_t n = 1; n <= 100 && ok; ++n) {
        for (std::uint64_t l = 0; l < n && ok; ++l) {
            ok = ramanujan_moebius_sum(n, static_cast<long long>(l)) ==
                 ramanujan_hoelder(n, static_cast<long long>(l));
        }
    }
    st.record("nt: ramanujan moebius sum equals totient form", ok);
    ok = true;
    for (std::uint64_t n = 1; n <= std::min<std::uint64_t>(max_n, 40) && ok; ++n) {
        for (std::uint64_t j : divisors(n).divisors) {
            Polynomial quotient = Polynomial::geometric(j, n / j);
            for (std::uint64_t d : divisors(n).divisors) {
                Polynomial expected = (j % d == 0)
                                          ? Polynomial::constant(Rational(n / j))
                                          : Polynomial::zero();
                if (!poly_rem(quotient - expected, cyclotomic(d)).is_zero()) ok = false;
            }
        }
    }
    st.record("nt: geometric quotient residues", ok);
}

void sweep_reconstruction(SweepState& st, std::mt19937_64& rng, int trials, std::uint64_t max_n) {
    auto random_poly = [&](std::size_t max_deg) {
        std::uniform_int_distribution<int> coeff(-9, 9);
        std::uniform_int_distribution<std::size_t> deg(0, max_deg);
        std::vector<Rational> cs(deg(rng) + 1);
        for (auto& c : cs) c = coeff(rng);
        return Polynomial(std::move(cs));
    };
    bool ok = true;
    for (int t = 0; t < trials && ok; ++t) {
        Polynomial f = random_poly(80);
        for (std::uint64_t n = 1; n <= std::min<std::uint64_t>(max_n, 24) && ok; ++n) {
            ok = simplify_from_residues(ResidueSystem::trivial(n, f)) == simplify(f, n);
        }
    }
    st.record("reconstruct: trivial residues give the simplification", ok);
    ok = true;
    for (std::uint64_t n = 1; n <= std::min<std::uint64_t>(max_n, 24) && ok; ++n) {
        std::map<std::uint64_t, Polynomial> targets;
        for (std::uint64_t d : divisors(n).divisors) targets[d] = random_poly(10);
        Polynomial combined = crt_combine(targets, n);
        for (std::uint64_t d : divisors(n).divisors) {
            if (!poly_rem(combined - targets.at(d), cyclotomic(d)).is_zero()) ok = false;
        }
        if (combined != simplify_from_residues(ResidueSystem::make(n, targets))) ok = false;
    }
    st.record("reconstruct: crt sweep agrees with invariant formula", ok);
    ok = true;
    for (int t = 0; t < trials && ok; ++t) {
        Polynomial a = random_poly(50);
        for (std::uint64_t n = 1; n <= std::min<std::uint64_t>(max_n, 36) && ok; ++n) {
            Polynomial rep = canonical_rep(a, n);
            ok = poly_rem(rep - a, cyclotomic(n)).is_zero();
            for (std::uint64_t d : divisors(n).divisors) {
                if (d != n && !poly_rem(rep, Polynomial::x_pow_minus_one(d)).is_zero()) {
                    ok = false;
                }
            }
        }
    }
    st.record("reconstruct: canonical representative congruences", ok);
    ok = true;
    std::uniform_int_distribution<std::uint64_t> nd(1, std::min<std::uint64_t>(max_n, 20));
    for (int t = 0; t < trials * 4 && ok; ++t) {
        Polynomial a = random_poly(24);
        Polynomial b = random_poly(24);
        std::uint64_t n = nd(rng);
        ok = invariant_equal(a, b, n) == poly_rem(a - b, cyclotomic(n)).is_zero();
    }
    st.record("reconstruct: complete invariant matches remainder oracle", ok);
}

void sweep_qmultinomial(SweepState& st, std::uint64_t max_j) {
    bool lucas_ok = true, class_ok = true;
    for (std::uint64_t j = 0; j <= std::min<std::uint64_t>(max_j, 10); ++j) {
        for (std::uint64_t a = 0; 2 * a <= j; ++a) {
            MultiIndex mi{j, {a, j - a}};
            Polynomial full = q_multinomial(mi);
            for (std::uint64_t n = 1; n <= 8; ++n) {
                if (!poly_rem(full - q_multinomial_residue(mi, n), cyclotomic(n)).is_zero()) {
                    lucas_ok = false;
                }
                for (std::uint64_t i = 0; i < n; ++i) {
                    if (q_multinomial_class(mi, n, static_cast<long long>(i)) !=
                        coeff_class(full, n, static_cast<long long>(i))) {
                        class_ok = false;
                    }
                }
            }
        }
    }
    st.record("qmulti: q-Lucas residue congruence", lucas_ok);
    st.record("qmulti: divisor-sum classes match expansion", class_ok);
}

void sweep_qcatalan(SweepState& st, std::uint64_t max_j) {
    bool res_ok = true, count_ok = true;
    for (std::uint64_t j = 0; j <= std::min<std::uint64_t>(max_j, 12); ++j) {
        for (std::uint64_t n = 2; n <= 10; ++n) {
            if (!poly_rem(q_catalan(j) - q_catalan_residue(j, n), cyclotomic(n)).is_zero()) {
                res_ok = false;
            }
        }
    }
    for (std::uint64_t j = 0; j <= std::min<std::uint64_t>(max_j, 8); ++j) {
        Polynomial gf = enumerate_major(WordKind::dyck, j, j);
        for (std::uint64_t n = 1; n <= 10; ++n) {
            for (std::uint64_t i = 0; i < n; ++i) {
                if (Rational(catalan_major_count({j, n, static_cast<long long>(i)})) !=
                    coeff_class(gf, n, static_cast<long long>(i))) {
                    count_ok = false;
                }
            }
        }
    }
    st.record("qcat: residue congruence", res_ok);
    st.record("qcat: major-index counts match enumeration", count_ok);
}

void sweep_dyck(SweepState& st, std::uint64_t max_len) {
    bool bij_ok = true, orbit_ok = true, prop_ok = true, t_ok = true, filter_ok = true;
    for (std::size_t len = 2; len <= std::min<std::uint64_t>(max_len, 12); ++len) {
        std::set<Word> images;
        std::uint64_t count = 0;
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << len); ++mask) {
            std::vector<bool> letters(len);
            for (std::size_t p = 0; p < len; ++p) letters[p] = (mask >> p) & 1;
            Word w(std::move(letters));
            if (!is_flat(w) || is_dyck(w)) continue;
            ++count;
            Word d = delta(w);
            images.insert(d);
            if (delta_inv(d) != w) bij_ok = false;
            auto orbit = delta_orbit(w);
            if (delta(orbit.back()) != w) orbit_ok = false;
            if (w.ones() >= 2) {
                long n = static_cast<long>(len);
                long step = -1;
                for (std::size_t t = 0; t < orbit.size(); ++t) {
                    const Word& next = t + 1 < orbit.size() ? orbit[t + 1] : w;
                    long s = ((static_cast<long>(major_index(next)) -
                               static_cast<long>(major_index(orbit[t]))) %
                                  n +
                              n) %
                             n;
                    if (t == 0) {
                        step = s;
                        if (s == 0) prop_ok = false;
                    } else if (s != step) {
                        prop_ok = false;
                    }
                }
            }
        }
        if (images.size() != count) bij_ok = false;
    }
    st.record("dyck: delta is a bijection with working inverse", bij_ok);
    st.record("dyck: delta orbits close after n steps", orbit_ok);
    st.record("dyck: orbit major-index steps constant nonzero mod n", prop_ok);
    for (std::uint64_t d = 2; d <= 4; ++d) {
        for (std::uint64_t j = 0; j <= 6; ++j) {
            for (std::uint64_t k = 0; j + k <= 6; ++k) {
                if (count_straightened_exhaustive(d, j, k) != binomial(j + k, k)) t_ok = false;
            }
        }
    }
    st.record("dyck: straightened counts are binomials", t_ok);
    for (std::size_t len = 2; len <= std::min<std::uint64_t>(max_len, 10); ++len) {
        for (std::uint64_t n : divisors(len).divisors) {
            if (n < 2) continue;
            for (std::size_t a = 0; a <= len; ++a) {
                Polynomial x = enumerate_major(WordKind::dyck, a, len - a);
                Polynomial y = enumerate_rigid_major(n, a, len - a);
                if (!poly_rem(x - y, cyclotomic(n)).is_zero()) filter_ok = false;
            }
        }
    }
    st.record("dyck: rigid filtering preserves the residue", filter_ok);
}

void sweep_subset(SweepState& st, std::uint64_t max_j) {
    bool res_ok = true, class_ok = true;
    for (std::uint64_t j = 1; j <= std::min<std::uint64_t>(max_j, 14); ++j) {
        for (std::uint64_t d = 1; d <= j; ++d) {
            if (!poly_rem(subset_sum_poly(j) - subset_sum_residue(j, d), cyclotomic(d))
                     .is_zero()) {
                res_ok = false;
            }
        }
        for (std::uint64_t n = 1; n <= j; ++n) {
            for (std::uint64_t i = 0; i < n; ++i) {
                if (subset_sum_class({n, j, static_cast<long long>(i)}) !=
                    subset_sum_brute(n, j, static_cast<long long>(i))) {
                    class_ok = false;
                }
            }
        }
    }
    st.record("subset: residue congruences", res_ok);
    st.record("subset: classes match enumeration", class_ok);
    st.record("subset: worked example 349504", subset_sum_class({12, 22, 5}) == 349504);
}

int run_sweep(const std::string& group, std::uint64_t seed, int trials, std::uint64_t max_n,
              std::uint64_t max_j, std::uint64_t max_len) {
    std::mt19937_64 rng(seed);
    SweepState st;
    bool all = group == "all";
    if (all || group == "poly") sweep_poly(st, rng, trials);
    if (all || group == "nt") sweep_number_theory(st, max_n);
    if (all || group == "reconstruct") sweep_reconstruction(st, rng, trials, max_n);
    if (all || group == "qmulti") sweep_qmultinomial(st, max_j);
    if (all || group == "qcat") sweep_qcatalan(st, max_j);
    if (all || group == "dyck") sweep_dyck(st, max_len);
    if (all || group == "subset") sweep_subset(st, max_j);
    std::cout << (st.failures == 0 ? "all checks passed" : "FAILURES: ")
              << (st.failures == 0 ? "" : std::to_string(st.failures)) << "\n";
    return st.failures == 0 ? kExitOk : kExitMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact modular enumeration of combinatorial generating functions"};
    app.require_subcommand(1);

    // simplify
    std::string poly_text;
    std::uint64_t n_arg = 1;
    long long l_arg = 0;
    bool verify = false, as_json = false;
    auto add_common = [&](CLI::App* cmd, bool with_verify = true) {
        cmd->add_flag("--json", as_json, "JSON output");
        if (with_verify) cmd->add_flag("--verify", verify, "cross-check with an oracle");
    };

    auto* simplify_cmd = app.add_subcommand("simplify", "remainder modulo x^n - 1");
    simplify_cmd->add_option("-p,--poly", poly_text, "polynomial text")->required();
    simplify_cmd->add_option("-n", n_arg, "modulus exponent n")->required();
    add_common(simplify_cmd);

    auto* cyclo_cmd = app.add_subcommand("cyclotomic", "n-th cyclotomic polynomial");
    cyclo_cmd->add_option("n", n_arg, "index n")->required();
    add_common(cyclo_cmd);

    auto* ram_cmd = app.add_subcommand("ramanujan", "Ramanujan sum c_n(l)");
    ram_cmd->add_option("n", n_arg, "index n")->required();
    ram_cmd->add_option("l", l_arg, "argument l")->required();
    add_common(ram_cmd);

    auto* grep_cmd = app.add_subcommand(
        "grep-invariant", "canonical representative modulo the n-th cyclotomic polynomial");
    grep_cmd->add_option("-p,--poly", poly_text, "polynomial text")->required();
    grep_cmd->add_option("-n", n_arg, "modulus index n")->required();
    add_common(grep_cmd);

    std::vector<std::string> residue_args;
    auto* crt_cmd = app.add_subcommand("crt", "combine residues modulo cyclotomic polynomials");
    crt_cmd->add_option("-n", n_arg, "target modulus x^n - 1")->required();
    crt_cmd->add_option("-r,--residue", residue_args, "d=POLY, one per divisor of n")
        ->required();
    add_common(crt_cmd);

    std::uint64_t j_arg = 0;
    std::vector<std::uint64_t> ks_arg;
    std::optional<std::uint64_t> n_opt;
    std::optional<long long> i_opt;
    std::uint64_t n_value = 0;
    long long i_value = 0;
    auto* qmu_cmd = app.add_subcommand("qmultinomial", "q-multinomial coefficient");
    qmu_cmd->add_option("-j", j_arg, "top index")->required();
    qmu_cmd->add_option("-k,--ks", ks_arg, "lower indices")->required()->delimiter(',');
    auto* qmu_n = qmu_cmd->add_option("-n", n_value, "fold modulo x^n - 1");
    auto* qmu_i = qmu_cmd->add_option("-i", i_value, "single class index")->needs(qmu_n);
    add_common(qmu_cmd);

    auto* qca_cmd = app.add_subcommand("qcatalan", "q-Catalan polynomial or its residue");
    qca_cmd->add_option("-j", j_arg, "index")->required();
    auto* qca_n = qca_cmd->add_option("-n", n_value, "residue modulo the n-th cyclotomic");
    add_common(qca_cmd);

    auto* cat_cmd = app.add_subcommand("catalan", "Dyck words by major index modulo n");
    cat_cmd->add_option("-j", j_arg, "ones (and zeros) per word")->required();
    cat_cmd->add_option("-n", n_arg, "modulus")->required();
    auto* cat_i = cat_cmd->add_option("-i", i_value, "single class index");
    add_common(cat_cmd);

    auto* sub_cmd = app.add_subcommand("subsetsum", "subsets of {1..j} by sum modulo n");
    sub_cmd->add_option("-j", j_arg, "ground-set size")->required();
    sub_cmd->add_option("-n", n_arg, "modulus")->required();
    auto* sub_i = sub_cmd->add_option("-i", i_value, "single class index");
    add_common(sub_cmd);

    // dyck family
    std::string word_text, kind_text = "dyck";
    std::uint64_t d_arg = 2, ones_arg = 0, zeros_arg = 0;
    std::uint64_t rigid_n_value = 0;
    auto* dyck_cmd = app.add_subcommand("dyck", "binary-word queries");
    dyck_cmd->require_subcommand(1);
    auto* dmaj_cmd = dyck_cmd->add_subcommand("major", "statistics of one word");
    dmaj_cmd->add_option("word", word_text, "0/1 word")->required();
    add_common(dmaj_cmd, false);
    auto* dorb_cmd = dyck_cmd->add_subcommand("orbit", "delta orbit of a flat non-Dyck word");
    dorb_cmd->add_option("word", word_text, "0/1 word")->required();
    add_common(dorb_cmd);
    auto* drig_cmd = dyck_cmd->add_subcommand("rigid", "rigidity classification");
    drig_cmd->add_option("word", word_text, "0/1 word")->required();
    drig_cmd->add_option("-d", d_arg, "block size")->required();
    add_common(drig_cmd, false);
    auto* dgen_cmd = dyck_cmd->add_subcommand("genfun", "major-index generating function");
    dgen_cmd->add_option("--kind", kind_text, "all | flat | dyck");
    dgen_cmd->add_option("-a,--ones", ones_arg, "number of ones")->required();
    dgen_cmd->add_option("-b,--zeros", zeros_arg, "number of zeros")->required();
    auto* dgen_rigid = dgen_cmd->add_option("--rigid", rigid_n_value, "restrict to n-rigid words");
    add_common(dgen_cmd, false);
    auto* dcls_cmd = dyck_cmd->add_subcommand("classes", "delta equivalence classes");
    dcls_cmd->add_option("-n", n_arg, "word length")->required();
    add_common(dcls_cmd, false);

    // sweep
    std::string group = "all";
    std::uint64_t seed = 12345;
    int trials = 10;
    std::uint64_t max_n = 24, max_j = 10, max_len = 12;
    auto* sweep_cmd = app.add_subcommand("sweep", "run the property-check suite");
    sweep_cmd->add_option("--group", group,
                          "all | poly | nt | reconstruct | qmulti | qcat | dyck | subset");
    sweep_cmd->add_option("--seed", seed, "random seed");
    sweep_cmd->add_option("--trials", trials, "random trials per check");
    sweep_cmd->add_option("--max-n", max_n, "modulus ceiling");
    sweep_cmd->add_option("--max-j", max_j, "index ceiling");
    sweep_cmd->add_option("--max-len", max_len, "word-length ceiling");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (simplify_cmd->parsed()) return run_simplify(poly_text, n_arg, verify, as_json);
        if (cyclo_cmd->parsed()) return run_cyclotomic(n_arg, verify, as_json);
        if (ram_cmd->parsed()) return run_ramanujan(n_arg, l_arg, verify, as_json);
        if (grep_cmd->parsed()) return run_grep_invariant(poly_text, n_arg, verify, as_json);
        if (crt_cmd->parsed()) return run_crt(residue_args, n_arg, verify, as_json);
        if (qmu_cmd->parsed()) {
            if (qmu_n->count() > 0) n_opt = n_value;
            if (qmu_i->count() > 0) i_opt = i_value;
            return run_qmultinomial(j_arg, ks_arg, n_opt, i_opt, verify, as_json);
        }
        if (qca_cmd->parsed()) {
            if (qca_n->count() > 0) n_opt = n_value;
            return run_qcatalan(j_arg, n_opt, verify, as_json);
        }
        if (cat_cmd->parsed()) {
            if (cat_i->count() > 0) i_opt = i_value;
            return run_catalan(j_arg, n_arg, i_opt, verify, as_json);
        }
        if (sub_cmd->parsed()) {
            if (sub_i->count() > 0) i_opt = i_value;
            return run_subsetsum(j_arg, n_arg, i_opt, verify, as_json);
        }
        if (dyck_cmd->parsed()) {
            if (dmaj_cmd->parsed()) return run_dyck_major(word_text, as_json);
            if (dorb_cmd->parsed()) return run_dyck_orbit(word_text, verify, as_json);
            if (drig_cmd->parsed()) return run_dyck_rigid(word_text, d_arg, as_json);
            if (dgen_cmd->parsed()) {
                std::optional<std::uint64_t> rigid_n;
                if (dgen_rigid->count() > 0) rigid_n = rigid_n_value;
                return run_dyck_genfun(kind_text, ones_arg, zeros_arg, rigid_n, as_json);
            }
            if (dcls_cmd->parsed()) return run_dyck_classes(n_arg, as_json);
        }
        if (sweep_cmd->parsed()) {
            return run_sweep(group, seed, trials, max_n, max_j, max_len);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
