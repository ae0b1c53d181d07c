#include "tgraph/alpha.hpp"

#include <cctype>
#include <charconv>
#include <limits>

namespace tgraph {

namespace {

long long parse_integer(std::string_view text, std::string_view whole)
{
    long long value = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || text.empty())
        throw AlphaError("alpha: cannot parse '" + std::string(whole) + "'");
    return value;
}

Alpha::Rational checked(Alpha::Rational r, std::string_view whole)
{
    if (r < 0 || r >= 1)
        throw AlphaError("alpha: '" + std::string(whole) + "' is outside [0, 1)");
    return r;
}

} // namespace

Alpha::Alpha(long long num, long long den)
{
    if (den == 0)
        throw AlphaError("alpha: zero denominator");
    value_ = checked(Rational(num, den), std::to_string(num) + "/" + std::to_string(den));
}

Alpha::Alpha(Rational value) : value_(checked(value, "rational")) {}

Alpha Alpha::parse(std::string_view text)
{
    if (text.empty())
        throw AlphaError("alpha: empty string");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        const long long num = parse_integer(text.substr(0, slash), text);
        const long long den = parse_integer(text.substr(slash + 1), text);
        if (den == 0)
            throw AlphaError("alpha: zero denominator in '" + std::string(text) + "'");
        return Alpha(checked(Rational(num, den), text));
    }

    // decimal literal: exact rational of the written digits
    auto dot = text.find('.');
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if (int_part.empty() && frac_part.empty())
        throw AlphaError("alpha: cannot parse '" + std::string(text) + "'");
    if (frac_part.size() > 17)
        throw AlphaError("alpha: too many decimal digits in '" + std::string(text) + "'");

    long long whole = int_part.empty() ? 0 : parse_integer(int_part, text);
    long long frac = frac_part.empty() ? 0 : parse_integer(frac_part, text);
    if (!frac_part.empty() && (frac_part.front() == '-' || frac_part.front() == '+'))
        throw AlphaError("alpha: cannot parse '" + std::string(text) + "'");
    long long den = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i)
        den *= 10;
    if (whole < 0 || (whole == 0 && !int_part.empty() && int_part.front() == '-'))
        throw AlphaError("alpha: '" + std::string(text) + "' is outside [0, 1)");
    if (whole > std::numeric_limits<long long>::max() / den - 1)
        throw AlphaError("alpha: '" + std::string(text) + "' is outside [0, 1)");
    return Alpha(checked(Rational(whole * den + frac, den), text));
}

double Alpha::value() const noexcept
{
    return static_cast<double>(value_.numerator()) / static_cast<double>(value_.denominator());
}

std::string Alpha::to_string() const
{
    return std::to_string(value_.numerator()) + "/" + std::to_string(value_.denominator());
}

} // namespace tgraph
