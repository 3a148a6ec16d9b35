#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <random>

#include "cayley/rng.hpp"
#include "cayley/tree_action.hpp"

using namespace cayley;

namespace {

std::vector<Elem> random_word(std::mt19937_64& rng, int k, size_t len) {
    std::vector<Elem> w(len);
    for (auto& a : w) a = static_cast<Elem>(bounded_draw(rng, static_cast<uint64_t>(k)));
    return w;
}

ElementWord random_element(std::mt19937_64& rng, const GroupTable& g, size_t len) {
    ElementWord e;
    for (size_t i = 0; i < len; ++i) {
        switch (bounded_draw(rng, 4)) {
            case 0: e.tokens.push_back(Token::x(1)); break;
            case 1: e.tokens.push_back(Token::x(-1)); break;
            case 2:
                e.tokens.push_back(Token::state(
                    static_cast<Elem>(bounded_draw(rng, static_cast<uint64_t>(g.size)))));
                break;
            default:
                e.tokens.push_back(Token::group(
                    static_cast<Elem>(bounded_draw(rng, static_cast<uint64_t>(g.size)))));
        }
    }
    return e;
}

}  // namespace

TEST_CASE("closed forms of the three token kinds") {
    const GroupTable g = q8();
    const Elem a = *g.find("a"), a2 = *g.find("a2"), b = *g.find("b");
    const std::vector<Elem> w = {b, a, a2};

    CHECK(evaluate(g, parse_element(g, "x"), w) ==
          std::vector<Elem>{b, *g.find("ab"), a});
    CHECK(evaluate(g, parse_element(g, "x^-1"), w) ==
          std::vector<Elem>{b, *g.find("a3b"), *g.find("ab")});
    CHECK(evaluate(g, parse_element(g, "g:a"), w) == std::vector<Elem>{*g.find("ab"), a, a2});
    // State b is b^-1 x: first letter becomes b^-1*b = 1, then the x quotients.
    CHECK(evaluate(g, parse_element(g, "s:b"), w) ==
          std::vector<Elem>{0, *g.find("ab"), a});
}

TEST_CASE("words compose rightmost first") {
    const GroupTable g = d8();
    std::mt19937_64 rng(11);
    for (int i = 0; i < 25; ++i) {
        const ElementWord e1 = random_element(rng, g, 3);
        const ElementWord e2 = random_element(rng, g, 3);
        const std::vector<Elem> w = random_word(rng, 8, 6);
        CHECK(evaluate(g, concat(e1, e2), w) == evaluate(g, e1, evaluate(g, e2, w)));
    }
}

TEST_CASE("inverse words undo the action") {
    const GroupTable g = q8();
    std::mt19937_64 rng(12);
    for (int i = 0; i < 25; ++i) {
        const ElementWord e = random_element(rng, g, 4);
        const std::vector<Elem> w = random_word(rng, 8, 6);
        CHECK(evaluate(g, inverse_word(g, e), evaluate(g, e, w)) == w);
    }
}

TEST_CASE("wreath coordinates factor the action") {
    const GroupTable g = q8();
    std::mt19937_64 rng(13);
    for (int i = 0; i < 15; ++i) {
        const ElementWord e = random_element(rng, g, 3);
        const WreathCoordinates wc = wreath_coordinates(g, e);
        for (int j = 0; j < 5; ++j) {
            std::vector<Elem> w = random_word(rng, 8, 5);
            const Elem head = w[0];
            const std::vector<Elem> tail(w.begin() + 1, w.end());
            const std::vector<Elem> image = evaluate(g, e, w);
            CHECK(image[0] == wc.root[static_cast<size_t>(head)]);
            const std::vector<Elem> section =
                evaluate(g, wc.sections[static_cast<size_t>(head)], tail);
            CHECK(std::vector<Elem>(image.begin() + 1, image.end()) == section);
        }
    }
}

TEST_CASE("depth of nonnegative conjugates is level plus one") {
    for (const GroupTable& g : {q8(), d8()})
        for (int n = 0; n <= 3; ++n)
            for (Elem e = 1; e < g.size; ++e)
                CHECK(depth(g, conjugate_word(e, n), 8) == n + 1);
    CHECK(depth(q8(), ElementWord{}, 8) == 0);
}

TEST_CASE("negative conjugates exceed every depth bound") {
    const GroupTable g = q8();
    for (Elem e = 1; e < g.size; ++e)
        CHECK_FALSE(depth(g, conjugate_word(e, -1), 8).has_value());
}

TEST_CASE("equality at depth tracks the x exponent first") {
    const GroupTable g = q8();
    CHECK(equal_at_depth(g, parse_element(g, "x"), parse_element(g, "x"), 6));
    CHECK_FALSE(equal_at_depth(g, parse_element(g, "x"), parse_element(g, "x^-1"), 6));
    CHECK_FALSE(equal_at_depth(g, parse_element(g, "x x^-1"), parse_element(g, "x"), 6));
    // s:1 is exactly x.
    CHECK(equal_at_depth(g, parse_element(g, "s:1"), parse_element(g, "x"), 6));
}

TEST_CASE("presentation sweep passes at small scale") {
    const PresentationReport r = verify_presentation(q8(), 2, 8);
    CHECK(r.instances == 25 * 64);
    CHECK(r.ok());
}

TEST_CASE("presentation sweep rejects groups outside the hypothesis") {
    GroupTable c6 = cyclic_group(6);  // abelian: fine
    CHECK(verify_presentation(c6, 1, 4).ok());
    // S3 built from a table violates the class-2 gate.
    const std::vector<std::array<int, 3>> perms = {
        {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    std::vector<std::vector<Elem>> rows(6, std::vector<Elem>(6));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            std::array<int, 3> prod{};
            for (int p = 0; p < 3; ++p) prod[p] = perms[i][perms[j][p]];
            rows[i][j] = static_cast<Elem>(
                std::find(perms.begin(), perms.end(), prod) - perms.begin());
        }
    const GroupTable s3 = from_table({"e", "r", "r2", "s", "rs", "r2s"}, rows);
    CHECK_THROWS_AS(verify_presentation(s3, 1, 4), std::domain_error);
}

TEST_CASE("conjugate depth probe follows the halved level") {
    const GroupTable g = q8();
    const Elem a = *g.find("a"), b = *g.find("b");
    for (int n = 0; n <= 4; ++n)
        CHECK(conjugate_depth_probe(g, a, b, n, 10) == ceil_half(n) + 1);
    CHECK_THROWS_AS(conjugate_depth_probe(g, a, *g.find("a2"), 1, 10),
                    std::invalid_argument);
}

TEST_CASE("positive state words stay distinct") {
    const FreeSemigroupReport r = free_semigroup_check(q8(), 2, 4);
    CHECK(r.words == 8 + 64);
    CHECK(r.ok());
}

TEST_CASE("ceiling halves") {
    CHECK(ceil_half(0) == 0);
    CHECK(ceil_half(1) == 1);
    CHECK(ceil_half(2) == 1);
    CHECK(ceil_half(3) == 2);
    CHECK(ceil_half(-1) == 0);
    CHECK(ceil_half(-2) == -1);
    CHECK(ceil_half(-3) == -1);
    CHECK(ceil_half(-4) == -2);
}
