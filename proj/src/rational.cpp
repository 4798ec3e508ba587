#include "rational.hpp"

#include <algorithm>

namespace ivfg {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty())
        return false;
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return c >= '0' && c <= '9'; });
}

// Strips leading zeros so the cpp_int constructor cannot read them as an
// octal prefix.
BigInt from_digits(std::string_view s) {
    const auto first = s.find_first_not_of('0');
    if (first == std::string_view::npos)
        return BigInt(0);
    return BigInt(std::string(s.substr(first)));
}

} // namespace

std::optional<Rational> parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        auto num = text.substr(0, slash);
        auto den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            return std::nullopt;
        BigInt d = from_digits(den);
        if (d == 0)
            return std::nullopt;
        return Rational(from_digits(num), d);
    }
    auto dot = text.find('.');
    if (dot == std::string_view::npos) {
        if (!all_digits(text))
            return std::nullopt;
        return Rational(from_digits(text));
    }
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac))
        return std::nullopt;
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
    BigInt numerator = from_digits(whole) * scale + from_digits(frac);
    return Rational(numerator, scale);
}

std::string format_rational(const Rational& value) {
    BigInt num = boost::multiprecision::numerator(value);
    BigInt den = boost::multiprecision::denominator(value);
    const bool negative = num < 0;
    if (negative)
        num = -num;

    BigInt rest = den;
    unsigned twos = 0, fives = 0;
    while (rest % 2 == 0) {
        rest /= 2;
        ++twos;
    }
    while (rest % 5 == 0) {
        rest /= 5;
        ++fives;
    }
    std::string sign = negative ? "-" : "";
    if (rest != 1)
        return sign + num.str() + "/" + den.str();

    const unsigned digits = std::max(twos, fives);
    if (digits == 0)
        return sign + num.str();

    BigInt scaled = num * boost::multiprecision::pow(BigInt(10), digits) / den;
    std::string s = scaled.str();
    if (s.size() <= digits)
        s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
    return sign + s;
}

} // namespace ivfg
