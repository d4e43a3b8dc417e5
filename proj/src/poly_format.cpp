#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "modenum/errors.hpp"
#include "modenum/polynomial.hpp"

namespace modenum {

std::string to_text(const Polynomial& a) {
    if (a.is_zero()) return "0";
    std::string out;
    const auto& cs = a.coeffs();
    for (std::size_t k = 0; k < cs.size(); ++k) {
        if (cs[k] == 0) continue;
        if (!out.empty()) out += " + ";
        std::string c = cs[k].get_num().get_str();
        if (cs[k].get_den() != 1) c += "/" + cs[k].get_den().get_str();
        if (k == 0) {
            out += c;
        } else {
            out += c + "*x^" + std::to_string(k);
        }
    }
    return out;
}

namespace {

void skip_spaces(std::string_view s, std::size_t& p) {
    while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
}

BigInt parse_digits(std::string_view s, std::size_t& p, std::string_view what) {
    std::size_t start = p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    if (p == start) throw ParseError("polynomial: expected " + std::string(what) +
                                     " at offset " + std::to_string(start));
    return BigInt(std::string(s.substr(start, p - start)));
}

// One term: [sign] [coefficient [/ den]] ['*'] [x ['^' exp]]
void parse_term(std::string_view s, std::size_t& p, std::vector<Rational>& acc) {
    int sign = 1;
    skip_spaces(s, p);
    while (p < s.size() && (s[p] == '+' || s[p] == '-')) {
        if (s[p] == '-') sign = -sign;
        ++p;
        skip_spaces(s, p);
    }
    bool have_coeff = false;
    BigInt num = 1, den = 1;
    if (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) {
        num = parse_digits(s, p, "coefficient");
        have_coeff = true;
        if (p < s.size() && s[p] == '/') {
            ++p;
            den = parse_digits(s, p, "denominator");
        }
    }
    skip_spaces(s, p);
    if (p < s.size() && s[p] == '*') {
        ++p;
        skip_spaces(s, p);
    }
    std::uint64_t exp = 0;
    if (p < s.size() && (s[p] == 'x' || s[p] == 'q')) {
        ++p;
        exp = 1;
        skip_spaces(s, p);
        if (p < s.size() && s[p] == '^') {
            ++p;
            skip_spaces(s, p);
            BigInt e = parse_digits(s, p, "exponent");
            if (!e.fits_ulong_p()) throw ParseError("polynomial: exponent too large");
            exp = e.get_ui();
        }
    } else if (!have_coeff) {
        throw ParseError("polynomial: expected term at offset " + std::to_string(p));
    }
    if (sign < 0) num = -num;
    if (acc.size() <= exp) acc.resize(exp + 1, Rational(0));
    acc[exp] += make_rational(num, den);
}

} // namespace

Polynomial parse_polynomial(std::string_view text) {
    std::size_t p = 0;
    skip_spaces(text, p);
    if (p == text.size()) throw ParseError("polynomial: empty input");
    std::vector<Rational> acc;
    parse_term(text, p, acc);
    for (;;) {
        skip_spaces(text, p);
        if (p == text.size()) break;
        if (text[p] != '+' && text[p] != '-') {
            throw ParseError("polynomial: unexpected character '" +
                             std::string(1, text[p]) + "' at offset " + std::to_string(p));
        }
        parse_term(text, p, acc);
    }
    return Polynomial(std::move(acc));
}

} // namespace modenum
