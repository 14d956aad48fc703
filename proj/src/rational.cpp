#include "triwalk/rational.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <stdexcept>

namespace triwalk {

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    auto check_int = [](const std::string& part) {
        if (part.empty()) throw std::invalid_argument("malformed rational literal");
        std::size_t i = (part[0] == '+' || part[0] == '-') ? 1 : 0;
        if (i == part.size()) throw std::invalid_argument("malformed rational literal");
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                throw std::invalid_argument("malformed rational literal: " + part);
    };
    if (slash == std::string::npos) {
        check_int(s);
        return Rational(BigInt(s));
    }
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    check_int(num);
    check_int(den);
    BigInt d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + text);
    return Rational(BigInt(num), d);
}

std::string to_decimal(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string to_fraction_string(const Rational& r) {
    BigInt num = numerator(r), den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace triwalk
