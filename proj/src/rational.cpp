#include "tropmod/rational.hpp"

#include "tropmod/error.hpp"

#include <cctype>

namespace tropmod {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
    if (!is_integer_literal(num) || (slash != std::string_view::npos && (!is_integer_literal(den) || den.front() == '-' || den.front() == '+')))
        throw Error(ErrorCode::ParseError, "not a rational literal: '" + std::string(text) + "'");

    auto strip_plus = [](std::string_view s) { return s.front() == '+' ? s.substr(1) : s; };
    BigInt p(std::string(strip_plus(num)), 10);
    BigInt q(1);
    if (slash != std::string_view::npos) {
        q = BigInt(std::string(den), 10);
        if (q == 0)
            throw Error(ErrorCode::ParseError, "zero denominator: '" + std::string(text) + "'");
    }
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value)
{
    Rational r = value;
    r.canonicalize();
    return r.get_str(10);
}

} // namespace tropmod
