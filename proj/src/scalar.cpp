#include "lefschetz/scalar.hpp"

#include <algorithm>
#include <cctype>

#include "lefschetz/errors.hpp"

namespace lefschetz {

namespace {

bool is_decimal_integer(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Integer parse_integer(std::string_view text) {
    if (!is_decimal_integer(text)) throw PreconditionError("not an integer: '" + std::string(text) + "'");
    if (text.front() == '+') text.remove_prefix(1);
    return Integer(std::string(text), 10);
}

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && den_text.front() == '-')
        throw PreconditionError("denominator must be unsigned: '" + std::string(text) + "'");
    Integer den = parse_integer(den_text);
    if (den == 0) throw PreconditionError("zero denominator: '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

std::string to_string(const Integer& z) { return z.get_str(10); }

}  // namespace lefschetz
