#include "pasta/decimal.hpp"

#include <doctest.h>

using namespace pasta;

TEST_CASE("plain decimals parse") {
    auto d = parse_decimal("3.61");
    REQUIRE(d);
    CHECK(d->mantissa == 361);
    CHECK(d->scale == 2);
    CHECK(render_exact(*d) == "3.61");

    CHECK(render_exact(*parse_decimal("97")) == "97");
    CHECK(render_exact(*parse_decimal("07")) == "7");
    CHECK(render_exact(*parse_decimal("-0.050")) == "-0.05");
    CHECK(render_exact(*parse_decimal(".5")) == "0.5");
    CHECK(render_exact(*parse_decimal("5.")) == "5");
    CHECK(render_exact(*parse_decimal("5.000")) == "5");
}

TEST_CASE("stripping rules") {
    CHECK(render_exact(*parse_decimal("1,234")) == "1234");
    CHECK(render_exact(*parse_decimal(" 42\t")) == "42");
    CHECK(render_exact(*parse_decimal("$5")) == "5");
    CHECK(render_exact(*parse_decimal("\xE2\x82\xAC" "9.5")) == "9.5");
    CHECK(render_exact(*parse_decimal("\xC2\xA3" "12")) == "12");
    CHECK(render_exact(*parse_decimal("85%")) == "85");
    CHECK(render_exact(*parse_decimal("$1,234.50")) == "1234.5");
    CHECK(render_exact(*parse_decimal("-5%")) == "-5");
}

TEST_CASE("rejections") {
    CHECK_FALSE(parse_decimal(""));
    CHECK_FALSE(parse_decimal("night moves"));
    CHECK_FALSE(parse_decimal("1.2.3"));
    CHECK_FALSE(parse_decimal("."));
    CHECK_FALSE(parse_decimal("-"));
    CHECK_FALSE(parse_decimal("$"));
    CHECK_FALSE(parse_decimal("1.2,3"));   // separator right of the point
    CHECK_FALSE(parse_decimal("1.2345678")); // more than 6 fraction digits
    CHECK_FALSE(parse_decimal("10000000000000000")); // above 10^15
    CHECK(parse_decimal("1000000000000000"));        // exactly 10^15
    CHECK_FALSE(parse_decimal("5-2"));
    CHECK_FALSE(parse_decimal("-$5")); // sign must follow the currency mark
}

TEST_CASE("exact comparison") {
    CHECK(compare(*parse_decimal("07"), *parse_decimal("7")) == 0);
    CHECK(compare(*parse_decimal("3.6"), *parse_decimal("3.61")) < 0);
    CHECK(compare(*parse_decimal("-1"), *parse_decimal("0.5")) < 0);
    CHECK(compare(*parse_decimal("2.50"), *parse_decimal("2.5")) == 0);
    CHECK(compare(*parse_decimal("10"), *parse_decimal("9.999999")) > 0);
}

TEST_CASE("integer detection") {
    CHECK(parse_decimal("5.000")->is_integer());
    CHECK_FALSE(parse_decimal("5.001")->is_integer());
    CHECK(parse_decimal("0")->is_integer());
}
