#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace cactus {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p", "-p" or "p/q". Throws InvalidInput on malformed text or q = 0.
inline Rational parse_rational(std::string_view text) {
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char ch : s)
            if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
        return true;
    };
    auto to_int = [](std::string_view s) {
        if (!s.empty() && s.front() == '+') s.remove_prefix(1);
        return Integer(std::string(s));
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_int(text)) throw InvalidInput("malformed rational '" + std::string(text) + "'");
        return Rational(to_int(text));
    }
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den.front() == '-' || den.front() == '+')
        throw InvalidInput("malformed rational '" + std::string(text) + "'");
    Integer d = to_int(den);
    if (d == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
    return Rational(to_int(num), d);
}

/// Lowest terms, positive denominator; integers print without "/1".
inline std::string to_string(const Rational& q) { return q.str(); }

inline int sign(const Rational& q) { return q.sign(); }

}  // namespace cactus
