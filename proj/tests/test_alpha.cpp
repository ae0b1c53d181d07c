#include <doctest.h>

#include "tgraph/alpha.hpp"

using tgraph::Alpha;
using tgraph::AlphaError;

TEST_CASE("fractions parse exactly")
{
    CHECK(Alpha::parse("1/2").is_half());
    CHECK(Alpha::parse("2/4").is_half());
    CHECK(Alpha::parse("3/4").to_string() == "3/4");
    CHECK(Alpha::parse("0").to_string() == "0/1");
    CHECK(Alpha::parse("9/10").value() == doctest::Approx(0.9));
}

TEST_CASE("decimals become the rational of their digits")
{
    CHECK(Alpha::parse("0.5").is_half());
    CHECK(Alpha::parse("0.75") == Alpha(3, 4));
    CHECK(Alpha::parse("0.6") == Alpha(3, 5));
    CHECK(Alpha::parse(".25") == Alpha(1, 4));
}

TEST_CASE("out of range and malformed input is rejected")
{
    CHECK_THROWS_AS(Alpha::parse("1"), AlphaError);
    CHECK_THROWS_AS(Alpha::parse("3/2"), AlphaError);
    CHECK_THROWS_AS(Alpha::parse("-1/3"), AlphaError);
    CHECK_THROWS_AS(Alpha::parse("1/0"), AlphaError);
    CHECK_THROWS_AS(Alpha::parse("abc"), AlphaError);
    CHECK_THROWS_AS(Alpha::parse(""), AlphaError);
    CHECK_THROWS_AS(Alpha::parse("0.5x"), AlphaError);
    CHECK_THROWS_AS(Alpha(1, 1), AlphaError);
}

TEST_CASE("ordering and the half threshold")
{
    CHECK(Alpha(1, 3) < Alpha(1, 2));
    CHECK_FALSE(Alpha(1, 3).at_least_half());
    CHECK(Alpha(1, 2).at_least_half());
    CHECK(Alpha(3, 5).at_least_half());
    CHECK_FALSE(Alpha(3, 5).is_half());
}
