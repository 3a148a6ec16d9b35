#pragma once

#include <string>
#include <vector>

#include "cayley/group.hpp"

namespace cayley {

/// One letter of an element word.
///
///   State(g):  the reset-automaton state g acting on words, equal to g^-1 x
///   XPow(+-1): a power of the distinguished element x
///   Group(g):  the embedded copy of g, which left-multiplies the first letter
struct Token {
    enum class Kind { State, XPow, Group };
    Kind kind;
    Elem g = 0;   // State / Group payload
    int e = 0;    // XPow payload, +1 or -1

    static Token state(Elem g) { return {Kind::State, g, 0}; }
    static Token x(int e) { return {Kind::XPow, 0, e}; }
    static Token group(Elem g) { return {Kind::Group, g, 0}; }

    bool operator==(const Token&) const = default;
};

/// A product of tokens, leftmost written first; the rightmost token acts
/// first on words, as functions compose.
struct ElementWord {
    std::vector<Token> tokens;

    bool operator==(const ElementWord&) const = default;
};

/// Sum of x-powers across the word (each State token carries one x).
int x_exponent(const ElementWord& e);

/// x^level g x^-level as a token word.
ElementWord conjugate_word(Elem g, int level);

ElementWord concat(const ElementWord& a, const ElementWord& b);

/// Group-inverse of the word: tokens reversed and inverted
/// (State(g) inverts to x^-1 * g since State(g) = g^-1 x).
ElementWord inverse_word(const GroupTable& g, const ElementWord& e);

/// One conjugate x^level f x^-level appearing in a rewritten product.
struct Conjugate {
    int level;
    Elem g;
    bool operator==(const Conjugate&) const = default;
};

/// Token-level regrouping of e as (product of conjugates) * x^x_exp: scan the
/// word left to right keeping a running x-exponent c; a group letter g seen at
/// exponent c contributes the conjugate x^c g x^-c. No group relations are
/// used and identity letters are kept.
struct Regrouped {
    std::vector<Conjugate> conjugates;
    int x_exp = 0;
};

Regrouped regroup(const GroupTable& g, const ElementWord& e);

/// Text form: whitespace-separated tokens "x", "x^-1", "s:<name>", "g:<name>".
std::string to_string(const GroupTable& g, const ElementWord& e);

/// Parses the text form; throws std::invalid_argument on unknown tokens or names.
ElementWord parse_element(const GroupTable& g, const std::string& text);

/// Parses a whitespace-separated list of element names into letter indices.
std::vector<Elem> parse_letters(const GroupTable& g, const std::string& text);

}  // namespace cayley
