#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cayley/element.hpp"
#include "cayley/group.hpp"
#include "cayley/word_transform.hpp"

namespace cayley {

/// Applies an element word to a word over the group's letters, rightmost
/// token first. State(g) is the reset-automaton action from state g, x and
/// x^-1 use their closed forms (successive quotients / running products), and
/// Group(g) left-multiplies the first letter.
std::vector<Elem> evaluate(const GroupTable& g, const ElementWord& e, std::span<const Elem> w);

/// First-level decomposition: a permutation of the letters and one section
/// per letter, with evaluate(e, a.v) = root[a].evaluate(section[a], v).
struct WreathCoordinates {
    std::vector<Elem> root;              // image of each first letter
    std::vector<ElementWord> sections;
};

WreathCoordinates wreath_coordinates(const GroupTable& g, const ElementWord& e);

/// Least n <= bound such that every word of length bound+1 is fixed beyond
/// position n; nullopt when position bound+1 itself moves. Exact for products
/// of conjugates x^m g x^-m with 0 <= m <= bound-1. For other elements the
/// value is a window measurement, not a true depth: an action changing only
/// alternating positions can fix position bound+1 yet move deeper ones.
/// Decided over the compiled transform's reachable states, which quantifies
/// over all such words.
std::optional<int> depth(const GroupTable& g, const ElementWord& e, int bound);
std::optional<int> depth(TransformCompiler& tc, const ElementWord& e, int bound);

/// True iff the x-exponents agree and the two elements act identically on
/// every word of length d. With equal exponents the common x-power is a
/// bijection of such words, so only the conjugate parts are compared.
bool equal_at_depth(const GroupTable& g, const ElementWord& e1, const ElementWord& e2, int d);
bool equal_at_depth(TransformCompiler& tc, const ElementWord& e1, const ElementWord& e2, int d);

/// Exchange-relation sweep: for all m, n in [-level_bound, level_bound] and
/// all pairs (gj, gi), checks at depth d that
///   [x^m gj x^-m, x^n gi x^-n] = x^ceil((n+m)/2) [gj, gi] x^-ceil((n+m)/2).
/// Requires nilpotency class <= 2 with central squares.
struct PresentationReport {
    long instances = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

PresentationReport verify_presentation(const GroupTable& g, int level_bound, int d);

/// Measured depth of (x^n h x^-n) g (x^n h^-1 x^-n); requires [g, h] != 1.
std::optional<int> conjugate_depth_probe(const GroupTable& g, Elem a, Elem h, int n, int bound);

/// True iff all positive words of length <= word_len in the reset-automaton
/// states act pairwise distinctly on words of length d.
struct FreeSemigroupReport {
    long words = 0;
    long collisions = 0;
    bool ok() const { return collisions == 0; }
};

FreeSemigroupReport free_semigroup_check(const GroupTable& g, int word_len, int d);

/// ceil(v / 2) for any integer, the level arithmetic used by the exchange rule.
constexpr int ceil_half(int v) { return v >= 0 ? (v + 1) / 2 : -((-v) / 2); }

}  // namespace cayley
