#include "tscalc/rational.hpp"

#include "tscalc/errors.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace tscalc {

bool is_integer(const Rational& q) {
    return denominator(q) == 1;
}

long to_long(const Rational& q) {
    if (!is_integer(q)) {
        throw Error("not an integer: " + format_rational(q));
    }
    const Integer n = numerator(q);
    if (n > std::numeric_limits<long>::max() || n < std::numeric_limits<long>::min()) {
        throw Error("integer out of range: " + n.str());
    }
    return n.convert_to<long>();
}

double to_double(const Rational& q) {
    return q.convert_to<double>();
}

Rational rat_ipow(const Rational& base, long exp) {
    if (exp < 0) {
        if (base == 0) {
            throw SingularityError("0 raised to a negative power");
        }
        return rat_ipow(Rational(denominator(base), numerator(base)), -exp);
    }
    Rational result(1);
    Rational b = base;
    unsigned long e = static_cast<unsigned long>(exp);
    while (e != 0) {
        if (e & 1UL) {
            result *= b;
        }
        e >>= 1UL;
        if (e != 0) {
            b *= b;
        }
    }
    return result;
}

Rational rat_abs(const Rational& q) {
    return q < 0 ? Rational(-q) : q;
}

Integer rat_floor(const Rational& q) {
    const Integer n = numerator(q);
    const Integer d = denominator(q);
    Integer quot = n / d;  // truncates toward zero
    if (quot * d > n) {
        --quot;
    }
    return quot;
}

Integer rat_ceil(const Rational& q) {
    const Integer n = numerator(q);
    const Integer d = denominator(q);
    Integer quot = n / d;
    if (quot * d < n) {
        ++quot;
    }
    return quot;
}

namespace {

std::string strip(const std::string& text) {
    auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
    auto begin = std::find_if_not(text.begin(), text.end(), is_space);
    auto end = std::find_if_not(text.rbegin(), text.rend(), is_space).base();
    return begin < end ? std::string(begin, end) : std::string();
}

Integer parse_integer(std::string s) {
    if (!s.empty() && s.front() == '+') {
        s.erase(s.begin());
    }
    bool negative = false;
    if (!s.empty() && s.front() == '-') {
        negative = true;
        s.erase(s.begin());
    }
    // cpp_int would read a leading 0 as an octal prefix
    while (s.size() > 1 && s.front() == '0') {
        s.erase(s.begin());
    }
    if (s.empty() ||
        s.find_first_not_of("0123456789") != std::string::npos) {
        throw Error("invalid integer literal: '" + s + "'");
    }
    const Integer value(s);
    return negative ? Integer(-value) : value;
}

Rational parse_decimal(const std::string& s) {
    // [sign] digits [. digits] [eE [sign] digits]
    std::string mantissa = s;
    long exp10 = 0;
    const auto epos = s.find_first_of("eE");
    if (epos != std::string::npos) {
        mantissa = s.substr(0, epos);
        const std::string exp_part = s.substr(epos + 1);
        const Integer e = parse_integer(exp_part);
        if (e > 100000 || e < -100000) {
            throw Error("decimal exponent out of range: '" + s + "'");
        }
        exp10 = e.convert_to<long>();
    }
    std::string digits = mantissa;
    std::size_t frac_len = 0;
    const auto dot = mantissa.find('.');
    if (dot != std::string::npos) {
        frac_len = mantissa.size() - dot - 1;
        digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
    }
    if (digits.empty() || digits == "-" || digits == "+") {
        throw Error("invalid rational literal: '" + s + "'");
    }
    Rational value(parse_integer(digits));
    value /= rat_ipow(Rational(10), static_cast<long>(frac_len));
    value *= rat_ipow(Rational(10), exp10);
    return value;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const std::string s = strip(text);
    if (s.empty()) {
        throw Error("empty rational literal");
    }
    const auto slash = s.find('/');
    if (slash != std::string::npos) {
        const Integer num = parse_integer(strip(s.substr(0, slash)));
        const Integer den = parse_integer(strip(s.substr(slash + 1)));
        if (den == 0) {
            throw Error("zero denominator in '" + s + "'");
        }
        return Rational(num, den);
    }
    if (s.find('.') != std::string::npos || s.find_first_of("eE") != std::string::npos) {
        return parse_decimal(s);
    }
    return Rational(parse_integer(s));
}

std::string format_rational(const Rational& q) {
    if (is_integer(q)) {
        return numerator(q).str();
    }
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace tscalc
