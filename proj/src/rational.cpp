#include "locus/rational.hpp"

#include "locus/errors.hpp"

#include <cctype>
#include <cstdlib>

namespace locus {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational rational_from_string(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw InvalidArgument("empty rational literal");

    bool negative = false;
    std::size_t pos = 0;
    if (s[pos] == '+' || s[pos] == '-') {
        negative = s[pos] == '-';
        ++pos;
    }
    std::string body = s.substr(pos);
    if (body.empty()) throw InvalidArgument("bad rational literal: " + text);

    // p/q form
    if (auto slash = body.find('/'); slash != std::string::npos) {
        std::string num = body.substr(0, slash);
        std::string den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw InvalidArgument("bad rational literal: " + text);
        Integer den_value{den};
        if (den_value == 0) throw InvalidArgument("zero denominator: " + text);
        Rational r{Integer(num), den_value};
        r.canonicalize();
        return negative ? Rational(-r) : r;
    }

    // [digits][.digits][(e|E)[sign]digits]
    long exponent = 0;
    if (auto e = body.find_first_of("eE"); e != std::string::npos) {
        std::string exp = body.substr(e + 1);
        body = body.substr(0, e);
        if (exp.empty()) throw InvalidArgument("bad rational literal: " + text);
        bool eneg = false;
        std::size_t epos = 0;
        if (exp[epos] == '+' || exp[epos] == '-') {
            eneg = exp[epos] == '-';
            ++epos;
        }
        std::string edigits = exp.substr(epos);
        if (!all_digits(edigits)) throw InvalidArgument("bad rational literal: " + text);
        exponent = std::strtol(edigits.c_str(), nullptr, 10);
        if (eneg) exponent = -exponent;
    }

    std::string digits = body;
    long frac_digits = 0;
    if (auto dot = body.find('.'); dot != std::string::npos) {
        std::string whole = body.substr(0, dot);
        std::string frac = body.substr(dot + 1);
        if (whole.empty() && frac.empty())
            throw InvalidArgument("bad rational literal: " + text);
        if (!whole.empty() && !all_digits(whole))
            throw InvalidArgument("bad rational literal: " + text);
        if (!frac.empty() && !all_digits(frac))
            throw InvalidArgument("bad rational literal: " + text);
        digits = whole + frac;
        frac_digits = static_cast<long>(frac.size());
    } else if (!all_digits(body)) {
        throw InvalidArgument("bad rational literal: " + text);
    }
    if (digits.empty()) throw InvalidArgument("bad rational literal: " + text);

    Integer mantissa(digits);
    Rational r(mantissa);
    long shift = exponent - frac_digits;
    if (shift > 0) {
        Integer p10;
        mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(shift));
        r *= Rational(p10);
    } else if (shift < 0) {
        Integer p10;
        mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(-shift));
        r /= Rational(p10);
    }
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

std::string rational_text(const Rational& value) {
    return value.get_str();
}

double rational_to_double(const Rational& value) {
    return value.get_d();
}

} // namespace locus
