#pragma once

#include <span>
#include <string>
#include <vector>

#include "cayley/group.hpp"

namespace cayley {

/// Complete deterministic letter-to-letter transducer. States and letters are
/// dense indices with printable labels.
struct MealyMachine {
    std::vector<std::string> states;
    std::vector<std::string> alphabet;
    std::vector<int> transition;  // state*|A| + letter -> state
    std::vector<int> output;      // state*|A| + letter -> letter

    int n_states() const { return static_cast<int>(states.size()); }
    int n_letters() const { return static_cast<int>(alphabet.size()); }
    int delta(int q, int a) const { return transition[static_cast<size_t>(q) * alphabet.size() + a]; }
    int lambda(int q, int a) const { return output[static_cast<size_t>(q) * alphabet.size() + a]; }

    /// True when every state's output row is a permutation of the alphabet.
    bool invertible() const;
};

/// Cayley machine of G: states = alphabet = G, and at state g0 reading g the
/// machine outputs g0*g and moves to g0*g.
MealyMachine cayley_machine(const GroupTable& g);

/// Reset automaton of G: at state g0 reading g it outputs g0^-1*g and moves
/// to state g (the state is always the last input letter).
MealyMachine reset_automaton(const GroupTable& g);

/// Runs the machine on a word from the given state; output has equal length.
std::vector<int> act_word(const MealyMachine& m, int state, std::span<const int> word);

/// Inverse transducer of an invertible machine: state q reading b outputs the
/// unique a with lambda(q, a) = b and moves to delta(q, a).
/// Throws std::domain_error when the machine is not invertible.
MealyMachine invert(const MealyMachine& m);

/// Deterministic GraphViz rendering: nodes in state order, one edge per
/// (state, letter) labelled "input/output".
std::string export_dot(const MealyMachine& m, const std::string& title = "mealy");

}  // namespace cayley
