#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "disord/error.hpp"
#include "disord/mvp_text.hpp"
#include "disord/random.hpp"

using namespace disord;

TEST_CASE("separators: '*' and whitespace are interchangeable") {
    Mvp a = parse_mvp("3*x*y");
    CHECK(a == parse_mvp("3 x y"));
    CHECK(a == parse_mvp("3 * x * y"));
    CHECK(a == parse_mvp("3*x y"));
    CHECK(mvp_terms_string(a) == "3 x y");
}

TEST_CASE("coefficients are optional, signs fold in") {
    CHECK(parse_mvp("x") == parse_mvp("1 x"));
    CHECK(parse_mvp("-x + 4") == parse_mvp("4 - x"));
    CHECK(parse_mvp("+x") == parse_mvp("x"));
    CHECK(parse_mvp("2.5 x").terms()[0].coeff == 2.5);
    CHECK(parse_mvp("7") == constant_mvp(7));
    CHECK(parse_mvp("3 - 3").zero());
}

TEST_CASE("exponents: integers, ^1 implicit, repeated variables combine") {
    CHECK(parse_mvp("x^2 y") == parse_mvp("y x^2"));
    CHECK(parse_mvp("x^1") == parse_mvp("x"));
    CHECK(parse_mvp("x x") == parse_mvp("x^2"));
    CHECK(parse_mvp("x^3 x^-3") == constant_mvp(1));
    CHECK(parse_mvp("x^-2").terms()[0].mono.key() == "x^-2");
}

TEST_CASE("multi-character symbols") {
    Mvp p = parse_mvp("3 alpha beta_2^4");
    CHECK(p.terms()[0].mono.key() == "alpha beta_2^4");
}

TEST_CASE("parse errors carry 1-based positions") {
    CHECK_THROWS_WITH_AS(parse_mvp(""), "parse error at position 1: expected a coefficient "
                                        "or symbol, got end of input",
                         Error);
    CHECK_THROWS_WITH_AS(parse_mvp("3x"),
                         "parse error at position 2: expected '*' or whitespace between factors",
                         Error);
    CHECK_THROWS_WITH_AS(parse_mvp("x^y"),
                         "parse error at position 3: expected an integer exponent, got 'y'",
                         Error);
    CHECK_THROWS_WITH_AS(parse_mvp("x^1.5"),
                         "parse error at position 3: expected an integer exponent, got '1.5'",
                         Error);
    CHECK_THROWS_WITH_AS(parse_mvp("x + + y"),
                         "parse error at position 5: expected a coefficient or symbol, got '+'",
                         Error);
    CHECK_THROWS_WITH_AS(parse_mvp("x y ("),
                         "parse error at position 5: unexpected character '('", Error);
    CHECK_THROWS_WITH_AS(parse_mvp("3 4 x"),
                         "parse error at position 3: expected '+' or '-', got '4'", Error);
    try {
        parse_mvp("x$");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ParseError);
    }
}

TEST_CASE("canonical print: separators, unit coefficients, leading minus") {
    CHECK(mvp_terms_string(parse_mvp("x^2 + 4 - 3*x*y*z")) == "4  -  3 x y z  +  x^2");
    CHECK(mvp_terms_string(parse_mvp("x - y")) == "x  -  y");
    CHECK(mvp_terms_string(parse_mvp("-x + 0")) == "-x");
    CHECK(mvp_terms_string(parse_mvp("-2 x - 4")) == "-4  -  2 x");
    CHECK(mvp_terms_string(parse_mvp("1 x y")) == "x y");
    CHECK(mvp_terms_string(parse_mvp("-1 x")) == "-x");
    CHECK(mvp_terms_string(Mvp()) == "0");
    CHECK(mvp_terms_string(constant_mvp(1)) == "1");
    CHECK(mvp_terms_string(parse_mvp("0.5 x")) == "0.5 x");
}

TEST_CASE("reference display strings") {
    Mvp a = parse_mvp("5 a c^3 + a^2 d^2 f^2 + 4 a^3 b e^3 + 3 b c f + 2 b^2 e^3");
    CHECK(print_mvp(a) ==
          "mvp object algebraically equal to\n"
          "5 a c^3  +  a^2 d^2 f^2  +  4 a^3 b e^3  +  3 b c f  +  2 b^2 e^3");

    Mvp b = parse_mvp("3 + 5*a*b - 7*a*b*x^2 + 2*a*b^2*c*d*x*y -6*x*y + 8*a*b*c*d*x");
    CHECK(mvp_terms_string(b) ==
          "3  +  5 a b  +  8 a b c d x  -  7 a b x^2  +  2 a b^2 c d x y  -  6 x y");
}

TEST_CASE("print then parse is the identity") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 1000; ++i) {
        Mvp p = rmvp_poly(rng());
        CHECK(parse_mvp(mvp_terms_string(p)) == p);
        Mvp d = p - rmvp_poly(rng());  // negative coefficients too
        CHECK(parse_mvp(mvp_terms_string(d)) == d);
    }
    CHECK(parse_mvp(mvp_terms_string(parse_mvp("0.25 x^3 - 1.5 y"))) ==
          parse_mvp("0.25 x^3 - 1.5 y"));
}
