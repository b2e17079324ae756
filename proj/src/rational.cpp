#include "lfvop/rational.hpp"

#include <cctype>
#include <sstream>

#include "lfvop/errors.hpp"

namespace lfvop {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

/// Digits-only conversion. Leading zeros are stripped first: the cpp_int
/// string constructor would otherwise read them as an octal prefix.
Integer from_digits(std::string_view digits) {
    while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
    return Integer{std::string(digits)};
}

Integer parse_integer(std::string_view s, std::string_view original) {
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) {
        throw ParseError("not a rational literal: '" + std::string(original) + "'");
    }
    Integer value = from_digits(s);
    if (negative) value = -value;
    return value;
}

Integer pow10(std::size_t exponent) {
    Integer result(1);
    for (std::size_t i = 0; i < exponent; ++i) result *= 10;
    return result;
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw ZeroDenominator("rational with zero denominator");
    }
    // cpp_rational's two-argument constructor rejects negative denominators;
    // dividing two integer-valued rationals canonicalizes signs and terms.
    return Rational(num) / Rational(den);
}

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) {
        throw ParseError("empty rational literal");
    }

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        Integer num = parse_integer(s.substr(0, slash), text);
        Integer den = parse_integer(s.substr(slash + 1), text);
        return make_rational(num, den);
    }

    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view head = s.substr(0, dot);
        std::string_view frac = s.substr(dot + 1);
        bool negative = false;
        if (!head.empty() && (head.front() == '+' || head.front() == '-')) {
            negative = head.front() == '-';
            head.remove_prefix(1);
        }
        if ((head.empty() && frac.empty()) || (!head.empty() && !all_digits(head)) ||
            (!frac.empty() && !all_digits(frac))) {
            throw ParseError("not a rational literal: '" + std::string(text) + "'");
        }
        Integer whole = head.empty() ? Integer(0) : from_digits(head);
        Integer digits = frac.empty() ? Integer(0) : from_digits(frac);
        Integer scale = pow10(frac.size());
        Integer num = whole * scale + digits;
        if (negative) num = -num;
        return make_rational(num, scale);
    }

    return Rational(parse_integer(s, text));
}

std::string to_string(const Rational& value) {
    std::ostringstream out;
    out << value;
    return out.str();
}

}  // namespace lfvop
