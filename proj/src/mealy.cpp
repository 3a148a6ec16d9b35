#include "cayley/mealy.hpp"

#include <sstream>
#include <stdexcept>

namespace cayley {

bool MealyMachine::invertible() const {
    const int k = n_letters();
    std::vector<char> seen(static_cast<size_t>(k));
    for (int q = 0; q < n_states(); ++q) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int a = 0; a < k; ++a) {
            const int b = lambda(q, a);
            if (seen[static_cast<size_t>(b)]) return false;
            seen[static_cast<size_t>(b)] = 1;
        }
    }
    return true;
}

MealyMachine cayley_machine(const GroupTable& g) {
    MealyMachine m;
    m.states = g.names;
    m.alphabet = g.names;
    m.transition = g.table;
    m.output = g.table;
    return m;
}

MealyMachine reset_automaton(const GroupTable& g) {
    MealyMachine m;
    m.states = g.names;
    m.alphabet = g.names;
    const size_t k = static_cast<size_t>(g.size);
    m.transition.resize(k * k);
    m.output.resize(k * k);
    for (int q = 0; q < g.size; ++q)
        for (int a = 0; a < g.size; ++a) {
            m.transition[static_cast<size_t>(q) * k + a] = a;
            m.output[static_cast<size_t>(q) * k + a] = g.mul(g.inv(q), a);
        }
    return m;
}

std::vector<int> act_word(const MealyMachine& m, int state, std::span<const int> word) {
    std::vector<int> out;
    out.reserve(word.size());
    int q = state;
    for (int a : word) {
        if (a < 0 || a >= m.n_letters()) throw std::out_of_range("act_word: letter out of range");
        out.push_back(m.lambda(q, a));
        q = m.delta(q, a);
    }
    return out;
}

MealyMachine invert(const MealyMachine& m) {
    if (!m.invertible()) throw std::domain_error("invert: machine is not invertible");
    MealyMachine r;
    r.states = m.states;
    r.alphabet = m.alphabet;
    const size_t k = static_cast<size_t>(m.n_letters());
    r.transition.resize(m.transition.size());
    r.output.resize(m.output.size());
    for (int q = 0; q < m.n_states(); ++q)
        for (int a = 0; a < m.n_letters(); ++a) {
            const int b = m.lambda(q, a);
            r.output[static_cast<size_t>(q) * k + b] = a;
            r.transition[static_cast<size_t>(q) * k + b] = m.delta(q, a);
        }
    return r;
}

std::string export_dot(const MealyMachine& m, const std::string& title) {
    std::ostringstream os;
    os << "digraph \"" << title << "\" {\n  rankdir=LR;\n";
    for (const auto& s : m.states) os << "  \"" << s << "\" [shape=circle];\n";
    for (int q = 0; q < m.n_states(); ++q)
        for (int a = 0; a < m.n_letters(); ++a)
            os << "  \"" << m.states[static_cast<size_t>(q)] << "\" -> \""
               << m.states[static_cast<size_t>(m.delta(q, a))] << "\" [label=\""
               << m.alphabet[static_cast<size_t>(a)] << "/"
               << m.alphabet[static_cast<size_t>(m.lambda(q, a))] << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace cayley
