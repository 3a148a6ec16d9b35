#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cayley/element.hpp"

using namespace cayley;

TEST_CASE("token text round trip") {
    const GroupTable g = q8();
    const std::string text = "x g:a x^-1 s:b";
    const ElementWord e = parse_element(g, text);
    REQUIRE(e.tokens.size() == 4);
    CHECK(e.tokens[0] == Token::x(1));
    CHECK(e.tokens[1] == Token::group(*g.find("a")));
    CHECK(e.tokens[2] == Token::x(-1));
    CHECK(e.tokens[3] == Token::state(*g.find("b")));
    CHECK(to_string(g, e) == text);
    CHECK(parse_element(g, "").tokens.empty());
}

TEST_CASE("parse rejects unknown tokens and names") {
    const GroupTable g = q8();
    CHECK_THROWS_AS(parse_element(g, "g:zz"), std::invalid_argument);
    CHECK_THROWS_AS(parse_element(g, "y"), std::invalid_argument);
    CHECK_THROWS_AS(parse_element(g, "s:"), std::invalid_argument);
    CHECK_THROWS_AS(parse_letters(g, "a zz"), std::invalid_argument);
}

TEST_CASE("x exponent counts states as single x factors") {
    const GroupTable g = q8();
    CHECK(x_exponent(parse_element(g, "s:a s:b x^-1")) == 1);
    CHECK(x_exponent(parse_element(g, "g:a g:b")) == 0);
    CHECK(x_exponent(parse_element(g, "x x x^-1")) == 1);
}

TEST_CASE("conjugate words spell out the x powers") {
    const ElementWord w = conjugate_word(3, -2);
    REQUIRE(w.tokens.size() == 5);
    CHECK(w.tokens[0] == Token::x(-1));
    CHECK(w.tokens[1] == Token::x(-1));
    CHECK(w.tokens[2] == Token::group(3));
    CHECK(w.tokens[3] == Token::x(1));
    CHECK(w.tokens[4] == Token::x(1));
    CHECK(conjugate_word(3, 0).tokens == std::vector<Token>{Token::group(3)});
}

TEST_CASE("regroup collects letters at their running x exponent") {
    const GroupTable g = q8();
    const Regrouped r = regroup(g, parse_element(g, "x g:a x^-1 g:b"));
    REQUIRE(r.conjugates.size() == 2);
    CHECK(r.conjugates[0] == Conjugate{1, *g.find("a")});
    CHECK(r.conjugates[1] == Conjugate{0, *g.find("b")});
    CHECK(r.x_exp == 0);
}

TEST_CASE("regroup expands states into a letter and an x") {
    const GroupTable g = q8();
    const Regrouped r = regroup(g, parse_element(g, "s:a"));
    REQUIRE(r.conjugates.size() == 1);
    CHECK(r.conjugates[0] == Conjugate{0, g.inv(*g.find("a"))});
    CHECK(r.x_exp == 1);
}

TEST_CASE("concat joins token lists") {
    const GroupTable g = q8();
    const ElementWord e =
        concat(parse_element(g, "x g:a"), parse_element(g, "x^-1"));
    CHECK(to_string(g, e) == "x g:a x^-1");
}
