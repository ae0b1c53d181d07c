#pragma once

#include <boost/rational.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace tgraph {

/// Exact weight of the degree term in A_alpha = alpha*D + (1-alpha)*A.
/// Always in [0, 1); kept rational so that alpha == 1/2 is an exact test.
class Alpha {
public:
    using Rational = boost::rational<long long>;

    Alpha() = default;
    Alpha(long long num, long long den);
    explicit Alpha(Rational value);

    /// Accepts "p/q", an integer, or a decimal literal ("0.75" -> 3/4).
    static Alpha parse(std::string_view text);

    [[nodiscard]] Rational exact() const noexcept { return value_; }
    [[nodiscard]] double value() const noexcept;
    [[nodiscard]] bool is_half() const noexcept { return value_ == Rational(1, 2); }
    [[nodiscard]] bool at_least_half() const noexcept { return value_ >= Rational(1, 2); }

    /// Always "p/q", including "0/1".
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Alpha&, const Alpha&) = default;
    friend bool operator<(const Alpha& a, const Alpha& b) { return a.value_ < b.value_; }

private:
    Rational value_{0, 1};
};

class AlphaError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace tgraph
