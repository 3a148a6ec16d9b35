#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "cayley/normal_form.hpp"
#include "cayley/rng.hpp"
#include "cayley/tree_action.hpp"

using namespace cayley;

namespace {

NormalForm random_form(std::mt19937_64& rng, const GroupTable& g, int lo, int hi) {
    NormalForm p;
    for (int level = lo; level <= hi; ++level) {
        const Elem e = static_cast<Elem>(bounded_draw(rng, static_cast<uint64_t>(g.size)));
        if (e != 0) p.factors.push_back({level, e});
    }
    return p;
}

}  // namespace

TEST_CASE("reducing a worked product") {
    const GroupTable g = q8();
    const NormalForm p = reduce(g, parse_element(g, "x x g:a x^-1 x^-1 g:b"));
    CHECK(p.x_exp == 0);
    REQUIRE(p.factors.size() == 3);
    CHECK(p.factors[0] == Conjugate{0, *g.find("b")});
    CHECK(p.factors[1] == Conjugate{1, *g.find("a2")});
    CHECK(p.factors[2] == Conjugate{2, *g.find("a")});
}

TEST_CASE("identity words reduce to the identity form") {
    const GroupTable g = q8();
    CHECK(reduce(g, ElementWord{}).is_identity());
    CHECK(reduce(g, parse_element(g, "x x^-1 g:1")).is_identity());
    CHECK(reduce(g, parse_element(g, "g:a g:a3")).is_identity());
    const NormalForm x_only = reduce(g, parse_element(g, "x"));
    CHECK(x_only.x_exp == 1);
    CHECK(x_only.factors.empty());
    CHECK_FALSE(x_only.is_torsion());
}

TEST_CASE("reduce rejects groups outside the rewrite hypothesis") {
    // Dihedral of order 16 has class 3.
    auto idx = [](int s, int e) { return e * 8 + s; };
    std::vector<std::string> names(16);
    std::vector<std::vector<Elem>> rows(16, std::vector<Elem>(16));
    for (int s = 0; s < 8; ++s)
        for (int e = 0; e < 2; ++e)
            names[static_cast<size_t>(idx(s, e))] =
                e == 0 ? (s == 0 ? "1" : "r" + std::to_string(s))
                       : "r" + std::to_string(s) + "f";
    for (int s1 = 0; s1 < 8; ++s1)
        for (int e1 = 0; e1 < 2; ++e1)
            for (int s2 = 0; s2 < 8; ++s2)
                for (int e2 = 0; e2 < 2; ++e2) {
                    const int s = e1 == 0 ? (s1 + s2) % 8 : (s1 - s2 + 8) % 8;
                    rows[static_cast<size_t>(idx(s1, e1))][static_cast<size_t>(idx(s2, e2))] =
                        idx(s, e1 ^ e2);
                }
    const GroupTable d16 = from_table(names, rows);
    CHECK_THROWS_AS(reduce(d16, parse_element(d16, "g:r1")), std::domain_error);
}

TEST_CASE("normal form levels are strictly increasing and nontrivial") {
    const GroupTable g = q8();
    std::mt19937_64 rng(21);
    for (int i = 0; i < 50; ++i) {
        ElementWord e;
        for (int t = 0; t < 6; ++t) {
            const int pick = static_cast<int>(bounded_draw(rng, 3));
            if (pick == 0) e.tokens.push_back(Token::x(1));
            else if (pick == 1) e.tokens.push_back(Token::x(-1));
            else e.tokens.push_back(Token::group(
                static_cast<Elem>(bounded_draw(rng, 8))));
        }
        const NormalForm p = reduce(g, e);
        for (size_t f = 0; f < p.factors.size(); ++f) {
            CHECK(p.factors[f].g != 0);
            if (f) CHECK(p.factors[f - 1].level < p.factors[f].level);
        }
        CHECK(p.x_exp == x_exponent(e));
    }
}

TEST_CASE("round trip through expand") {
    const GroupTable g = q8();
    std::mt19937_64 rng(22);
    for (int i = 0; i < 40; ++i) {
        NormalForm p = random_form(rng, g, -2, 2);
        p.x_exp = static_cast<int>(bounded_draw(rng, 5)) - 2;
        CHECK(reduce(g, expand(p)) == p);
    }
}

TEST_CASE("normal-form product and inverse behave as group operations") {
    const GroupTable g = q8();
    std::mt19937_64 rng(23);
    for (int i = 0; i < 40; ++i) {
        NormalForm p = random_form(rng, g, -2, 2);
        NormalForm q = random_form(rng, g, -1, 3);
        p.x_exp = static_cast<int>(bounded_draw(rng, 3)) - 1;
        q.x_exp = static_cast<int>(bounded_draw(rng, 3)) - 1;

        // Cross-route: symbolic product vs reduction of the concatenated words.
        const NormalForm via_words = reduce(g, concat(expand(p), expand(q)));
        CHECK(nf_mul(g, p, q) == via_words);

        CHECK(nf_mul(g, p, nf_inverse(g, p)).is_identity());
        CHECK(nf_mul(g, nf_inverse(g, p), p).is_identity());

        const NormalForm r = random_form(rng, g, 0, 2);
        CHECK(nf_mul(g, nf_mul(g, p, q), r) == nf_mul(g, p, nf_mul(g, q, r)));
    }
}

TEST_CASE("exchange sort preserves the product and reports central corrections") {
    const GroupTable g = q8();
    std::mt19937_64 rng(24);
    const auto increasing = [](int n, int m) { return n < m; };
    for (int i = 0; i < 60; ++i) {
        std::vector<Conjugate> list;
        const int len = 1 + static_cast<int>(bounded_draw(rng, 4));
        for (int t = 0; t < len; ++t)
            list.push_back({static_cast<int>(bounded_draw(rng, 5)) - 2,
                            static_cast<Elem>(1 + bounded_draw(rng, 7))});
        const NormalForm direct = reduce(g, expand(NormalForm{0, list}));

        std::vector<Conjugate> corrections;
        std::vector<Conjugate> sorted = exchange_sort(g, list, increasing, corrections);
        for (size_t f = 1; f < sorted.size(); ++f)
            CHECK(sorted[f - 1].level <= sorted[f].level);
        std::vector<Conjugate> rebuilt = sorted;
        rebuilt.insert(rebuilt.end(), corrections.begin(), corrections.end());
        CHECK(reduce(g, expand(NormalForm{0, rebuilt})) == direct);

        const StructuralReport sr = structural_report(g);
        for (const Conjugate& c : corrections)
            CHECK(std::find(sr.center.begin(), sr.center.end(), c.g) != sr.center.end());
    }
}

TEST_CASE("torsion orders") {
    const GroupTable g = q8();
    CHECK(torsion_order(g, NormalForm{}) == 1);
    CHECK(torsion_order(g, reduce(g, parse_element(g, "g:a"))) == 4);
    CHECK(torsion_order(g, reduce(g, parse_element(g, "g:a2"))) == 2);
    CHECK(torsion_order(g, reduce(g, parse_element(g, "x g:a x^-1"))) == 4);
    CHECK_FALSE(torsion_order(g, reduce(g, parse_element(g, "x"))).has_value());

    std::mt19937_64 rng(25);
    for (int i = 0; i < 30; ++i) {
        const NormalForm p = random_form(rng, g, -1, 2);
        const auto n = torsion_order(g, p);
        REQUIRE(n.has_value());
        CHECK(*n >= 1);
        CHECK(2 * g.size % *n == 0);
        // Multiplying p by itself order times lands on the identity.
        NormalForm acc;
        for (long t = 0; t < *n; ++t) acc = nf_mul(g, acc, p);
        CHECK(acc.is_identity());
    }
}

TEST_CASE("canonical split of a worked example") {
    const GroupTable g = q8();
    const NormalForm p = reduce(g, parse_element(g, "x x g:a x^-1 x^-1 g:b"));
    const CanonicalSplit s = canonical_split(g, p, SplitBasis::q8());
    REQUIRE(s.a_part.size() == 1);
    CHECK(s.a_part[0] == std::pair<int, int>{2, 1});
    CHECK(s.b_part == std::vector<int>{0});
    CHECK(s.c_part.empty());
}

TEST_CASE("canonical split isolates central commutator factors") {
    const GroupTable g = q8();
    const NormalForm p{0, {{0, *g.find("a2")}}};
    const CanonicalSplit s = canonical_split(g, p, SplitBasis::q8());
    CHECK(s.a_part.empty());
    CHECK(s.b_part.empty());
    CHECK(s.c_part == std::vector<int>{0});
}

TEST_CASE("canonical split under the modular basis") {
    const GroupTable g = modular_group(4);
    const Elem a = *g.find("a");
    const Elem a3 = g.mul(g.mul(a, a), a);
    const CanonicalSplit s = canonical_split(g, NormalForm{0, {{1, a3}}},
                                             SplitBasis::modular(4));
    REQUIRE(s.a_part.size() == 1);
    CHECK(s.a_part[0] == std::pair<int, int>{1, 3});
    CHECK(s.b_part.empty());
    CHECK(s.c_part.empty());
}

TEST_CASE("canonical split rejects non-torsion forms and foreign bases") {
    const GroupTable g = q8();
    CHECK_THROWS_AS(canonical_split(g, NormalForm{1, {}}, SplitBasis::q8()),
                    std::domain_error);
    CHECK_THROWS_AS(canonical_split(g, NormalForm{}, SplitBasis::modular(4)),
                    std::domain_error);
    CHECK_THROWS_AS(canonical_split(cyclic_group(8), NormalForm{}, SplitBasis::q8()),
                    std::domain_error);
}

TEST_CASE("split blocks recombine to the original form") {
    const GroupTable g = modular_group(4);
    const SplitBasis basis = SplitBasis::modular(4);
    const Elem a = *g.find("a"), b = *g.find("b"), c = g.commutator(a, b);
    std::mt19937_64 rng(26);
    for (int i = 0; i < 40; ++i) {
        const NormalForm p = random_form(rng, g, -2, 2);
        const CanonicalSplit s = canonical_split(g, p, basis);
        NormalForm a_block, b_block, c_block;
        for (const auto& [level, exp] : s.a_part) {
            Elem as = 0;
            for (int t = 0; t < exp; ++t) as = g.mul(as, a);
            a_block.factors.push_back({level, as});
        }
        for (int level : s.b_part) b_block.factors.push_back({level, b});
        for (int level : s.c_part) c_block.factors.push_back({level, c});
        CHECK(nf_mul(g, nf_mul(g, a_block, b_block), c_block) == p);
    }
}

TEST_CASE("basis detection") {
    CHECK(detect_split_basis(q8())->kind == SplitBasis::Kind::Q8);
    const auto d8_basis = detect_split_basis(d8());
    REQUIRE(d8_basis.has_value());
    CHECK(d8_basis->kind == SplitBasis::Kind::Modular);
    CHECK(d8_basis->n == 3);
    CHECK(detect_split_basis(modular_group(5))->n == 5);
    CHECK_FALSE(detect_split_basis(cyclic_group(8)).has_value());
    CHECK_FALSE(detect_split_basis(direct_product(q8(), cyclic_group(2))).has_value());
}

TEST_CASE("consistency audit over short state words") {
    const GroupTable g = q8();
    std::vector<ElementWord> sample;
    sample.push_back(ElementWord{});
    for (Elem s = 0; s < g.size; ++s) {
        sample.push_back(ElementWord{{Token::state(s)}});
        for (Elem t = 0; t < g.size; ++t)
            sample.push_back(ElementWord{{Token::state(s), Token::state(t)}});
    }
    const ConsistencyReport r = nf_consistency(g, sample, 5);
    CHECK(r.checked == 73);
    CHECK(r.ok());
    CHECK(r.distinct_pairs > 0);
}
