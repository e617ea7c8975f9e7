#include "collide/rational.hpp"

#include "collide/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace collide {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

BigInt parse_digits(std::string_view digits, std::string_view context) {
    if (digits.empty()) throw ConfigError("empty number in '" + std::string(context) + "'");
    BigInt v = 0;
    for (char c : digits) {
        if (c < '0' || c > '9')
            throw ConfigError("invalid digit '" + std::string(1, c) + "' in '" +
                              std::string(context) + "'");
        v = v * 10 + (c - '0');
    }
    return v;
}

BigInt pow10(int64_t k) {
    BigInt v = 1;
    for (int64_t i = 0; i < k; ++i) v *= 10;
    return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) throw ConfigError("empty rational literal");

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw ConfigError("sign without digits in '" + std::string(text) + "'");

    // p/q form
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_digits(s.substr(0, slash), text);
        BigInt den = parse_digits(s.substr(slash + 1), text);
        if (den == 0) throw ConfigError("zero denominator in '" + std::string(text) + "'");
        Rational r(num, den);
        return negative ? Rational(-r) : r;
    }

    // decimal with optional exponent
    std::string_view mantissa = s;
    int64_t exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        mantissa = s.substr(0, e);
        std::string_view es = s.substr(e + 1);
        bool eneg = false;
        if (!es.empty() && (es.front() == '+' || es.front() == '-')) {
            eneg = es.front() == '-';
            es.remove_prefix(1);
        }
        BigInt ev = parse_digits(es, text);
        if (ev > 100000) throw ConfigError("exponent out of range in '" + std::string(text) + "'");
        exponent = ev.convert_to<int64_t>();
        if (eneg) exponent = -exponent;
    }

    std::string_view int_part = mantissa;
    std::string_view frac_part;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
        int_part = mantissa.substr(0, dot);
        frac_part = mantissa.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty())
        throw ConfigError("no digits in '" + std::string(text) + "'");

    BigInt digits = 0;
    for (std::string_view part : {int_part, frac_part})
        for (char c : part) {
            if (c < '0' || c > '9')
                throw ConfigError("invalid digit '" + std::string(1, c) + "' in '" +
                                  std::string(text) + "'");
            digits = digits * 10 + (c - '0');
        }

    int64_t scale = static_cast<int64_t>(frac_part.size()) - exponent;
    Rational r;
    if (scale >= 0)
        r = Rational(digits, pow10(scale));
    else
        r = Rational(digits * pow10(-scale), 1);
    return negative ? Rational(-r) : r;
}

std::string format_rational(const Rational& value) {
    std::string num = numerator(value).str();
    if (denominator(value) == 1) return num;
    return num + "/" + denominator(value).str();
}

double rational_to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace collide
