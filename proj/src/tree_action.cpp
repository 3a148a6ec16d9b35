#include "cayley/tree_action.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cayley {

std::vector<Elem> evaluate(const GroupTable& g, const ElementWord& e, std::span<const Elem> w) {
    for (Elem a : w)
        if (a < 0 || a >= g.size) throw std::out_of_range("evaluate: letter out of range");
    std::vector<Elem> cur(w.begin(), w.end());
    for (auto it = e.tokens.rbegin(); it != e.tokens.rend(); ++it) {
        switch (it->kind) {
            case Token::Kind::State: {
                // reset-automaton run from state t.g
                Elem state = it->g;
                for (auto& a : cur) {
                    const Elem out = g.mul(g.inv(state), a);
                    state = a;
                    a = out;
                }
                break;
            }
            case Token::Kind::XPow:
                if (it->e == 1) {
                    Elem prev = 0;
                    for (auto& a : cur) {
                        const Elem out = g.mul(g.inv(prev), a);
                        prev = a;
                        a = out;
                    }
                } else {
                    Elem acc = 0;
                    for (auto& a : cur) {
                        acc = g.mul(acc, a);
                        a = acc;
                    }
                }
                break;
            case Token::Kind::Group:
                if (!cur.empty()) cur[0] = g.mul(it->g, cur[0]);
                break;
        }
    }
    return cur;
}

WreathCoordinates wreath_coordinates(const GroupTable& g, const ElementWord& e) {
    const int k = g.size;
    WreathCoordinates acc;
    acc.root.resize(static_cast<size_t>(k));
    for (int a = 0; a < k; ++a) acc.root[static_cast<size_t>(a)] = a;
    acc.sections.resize(static_cast<size_t>(k));

    // Multiply token coordinates left to right; the section of a product at
    // letter a is (left section at tau(a)) * (right section at a), where tau
    // is the right factor's root permutation.
    for (const Token& t : e.tokens) {
        std::vector<Elem> root(static_cast<size_t>(k));
        std::vector<ElementWord> sections(static_cast<size_t>(k));
        for (int a = 0; a < k; ++a) {
            Elem t_root;
            ElementWord t_section;
            switch (t.kind) {
                case Token::Kind::State:
                    t_root = g.mul(g.inv(t.g), a);
                    t_section.tokens = {Token::state(a)};
                    break;
                case Token::Kind::XPow:
                    t_root = a;
                    if (t.e == 1) t_section.tokens = {Token::state(a)};
                    else t_section.tokens = {Token::x(-1), Token::group(a)};
                    break;
                case Token::Kind::Group:
                default:
                    t_root = g.mul(t.g, a);
                    break;
            }
            root[static_cast<size_t>(a)] = acc.root[static_cast<size_t>(t_root)];
            sections[static_cast<size_t>(a)] =
                concat(acc.sections[static_cast<size_t>(t_root)], t_section);
        }
        acc.root = std::move(root);
        acc.sections = std::move(sections);
    }
    return acc;
}

std::optional<int> depth(TransformCompiler& tc, const ElementWord& e, int bound) {
    if (bound < 0) throw std::invalid_argument("depth: bound must be nonnegative");
    const WordTransform t = tc.compile(e);
    const int deepest = max_changed_position(t, bound);
    if (deepest > bound) return std::nullopt;
    return deepest;
}

std::optional<int> depth(const GroupTable& g, const ElementWord& e, int bound) {
    TransformCompiler tc(g);
    return depth(tc, e, bound);
}

bool equal_at_depth(TransformCompiler& tc, const ElementWord& e1, const ElementWord& e2, int d) {
    const Regrouped r1 = regroup(tc.group(), e1);
    const Regrouped r2 = regroup(tc.group(), e2);
    if (r1.x_exp != r2.x_exp) return false;
    const WordTransform t1 = tc.conjugate_product(r1.conjugates);
    const WordTransform t2 = tc.conjugate_product(r2.conjugates);
    return bounded_equal(t1, t2, d);
}

bool equal_at_depth(const GroupTable& g, const ElementWord& e1, const ElementWord& e2, int d) {
    TransformCompiler tc(g);
    return equal_at_depth(tc, e1, e2, d);
}

PresentationReport verify_presentation(const GroupTable& g, int level_bound, int d) {
    if (!central_squares_class2(g))
        throw std::domain_error(
            "verify_presentation: group must be nilpotent of class <= 2 with central squares");
    TransformCompiler tc(g);
    PresentationReport report;
    for (int m = -level_bound; m <= level_bound; ++m)
        for (int n = -level_bound; n <= level_bound; ++n)
            for (Elem gj = 0; gj < g.size; ++gj)
                for (Elem gi = 0; gi < g.size; ++gi) {
                    ++report.instances;
                    ElementWord lhs = concat(
                        concat(conjugate_word(g.inv(gj), m), conjugate_word(g.inv(gi), n)),
                        concat(conjugate_word(gj, m), conjugate_word(gi, n)));
                    const ElementWord rhs =
                        conjugate_word(g.commutator(gj, gi), ceil_half(n + m));
                    if (!equal_at_depth(tc, lhs, rhs, d)) {
                        std::ostringstream os;
                        os << "m=" << m << " n=" << n
                           << " gj=" << g.names[static_cast<size_t>(gj)]
                           << " gi=" << g.names[static_cast<size_t>(gi)];
                        report.failures.push_back(os.str());
                    }
                }
    return report;
}

std::optional<int> conjugate_depth_probe(const GroupTable& g, Elem a, Elem h, int n, int bound) {
    if (g.commutes(a, h))
        throw std::invalid_argument("conjugate_depth_probe: needs a non-commuting pair");
    const ElementWord probe = concat(concat(conjugate_word(h, n), conjugate_word(a, 0)),
                                     conjugate_word(g.inv(h), n));
    return depth(g, probe, bound);
}

FreeSemigroupReport free_semigroup_check(const GroupTable& g, int word_len, int d) {
    TransformCompiler tc(g);
    FreeSemigroupReport report;
    const int k = g.size;
    // Same-length words have equal x-exponents, so only those can collide;
    // their common x-power is cancelled before comparing actions.
    std::vector<std::vector<Elem>> current;  // state sequences of this length
    current.emplace_back();
    for (int len = 1; len <= word_len; ++len) {
        std::vector<std::vector<Elem>> nextgen;
        for (const auto& w : current)
            for (Elem s = 0; s < k; ++s) {
                auto v = w;
                v.push_back(s);
                nextgen.push_back(std::move(v));
            }
        current = std::move(nextgen);

        std::vector<WordTransform> transforms;
        transforms.reserve(current.size());
        for (const auto& w : current) {
            std::vector<Conjugate> conj;
            conj.reserve(w.size());
            for (size_t i = 0; i < w.size(); ++i)
                conj.push_back({static_cast<int>(i), g.inv(w[i])});
            transforms.push_back(tc.conjugate_product(conj));
        }
        report.words += static_cast<long>(current.size());
        for (size_t i = 0; i < transforms.size(); ++i)
            for (size_t j = i + 1; j < transforms.size(); ++j)
                if (bounded_equal(transforms[i], transforms[j], d)) ++report.collisions;
    }
    return report;
}

}  // namespace cayley
