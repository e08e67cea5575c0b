#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace sfreecut {

using Int = boost::multiprecision::mpz_int;

/// Exact rational scalar. mpq_rational keeps values in lowest terms with a
/// positive denominator, which is exactly the invariant the geometry needs;
/// no floating point enters anywhere downstream of this type.
using Rat = boost::multiprecision::mpq_rational;

using IntVec = std::vector<Int>;

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline Int rat_floor(const Rat& r) {
    Int num = numerator(r), den = denominator(r);
    Int q = num / den; // truncates toward zero
    if (num < 0 && q * den != num) --q;
    return q;
}

inline Int rat_ceil(const Rat& r) {
    Int num = numerator(r), den = denominator(r);
    Int q = num / den;
    if (num > 0 && q * den != num) ++q;
    return q;
}

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

/// Canonical text form: "p" when the value is integral, "p/q" otherwise.
inline std::string rat_to_string(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += '/';
        s += denominator(r).str();
    }
    return s;
}

/// Strict parser for the canonical text form. Accepts optional leading '-',
/// decimal digits, optionally '/' and a nonzero denominator.
inline Rat parse_rat(std::string_view text) {
    auto fail = [&](const char* why) -> Rat {
        throw ParseError("bad rational \"" + std::string(text) + "\": " + why);
    };
    if (text.empty()) return fail("empty");
    size_t slash = text.find('/');
    auto parse_int = [&](std::string_view part, bool allow_sign) -> Int {
        if (part.empty()) fail("missing digits");
        size_t i = 0;
        if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
        if (i == part.size()) fail("missing digits");
        for (size_t k = i; k < part.size(); ++k)
            if (part[k] < '0' || part[k] > '9') fail("unexpected character");
        return Int(std::string(part));
    };
    if (slash == std::string_view::npos) return Rat(parse_int(text, true));
    Int num = parse_int(text.substr(0, slash), true);
    Int den = parse_int(text.substr(slash + 1), false);
    if (den == 0) fail("zero denominator");
    return Rat(num, den); // mpq canonicalizes to lowest terms
}

} // namespace sfreecut
