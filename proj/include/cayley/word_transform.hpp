#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "cayley/element.hpp"
#include "cayley/group.hpp"

namespace cayley {

/// Thrown when a state-space or closure enumeration outgrows its budget.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A length-preserving, prefix-compatible word transformation, stored as a
/// complete deterministic transducer over the group's letters together with
/// an initial state. Composing and minimizing these keeps exhaustive
/// quantification over all words of a given length tractable: words reaching
/// the same state are interchangeable from that point on.
struct WordTransform {
    int k = 0;                  // alphabet size
    uint32_t start = 0;
    std::vector<uint32_t> next; // state*k + letter -> state
    std::vector<uint32_t> out;  // state*k + letter -> letter

    size_t n_states() const { return next.size() / static_cast<size_t>(k); }
    uint32_t step(uint32_t s, int a) const { return next[static_cast<size_t>(s) * k + a]; }
    uint32_t emit(uint32_t s, int a) const { return out[static_cast<size_t>(s) * k + a]; }
};

WordTransform identity_transform(int k);

/// Runs the transform over a word.
std::vector<Elem> run_transform(const WordTransform& t, std::span<const Elem> w);

/// outer(inner(w)); reachable product construction. Throws budget_error when
/// more than `cap` product states appear.
WordTransform compose(const WordTransform& outer, const WordTransform& inner, size_t cap);

/// Unique minimal transducer with BFS-canonical state numbering (start = 0).
WordTransform minimized(const WordTransform& t);

/// True iff the two transforms emit identical outputs on every word of
/// length d (decided over joint reachable state pairs).
bool bounded_equal(const WordTransform& a, const WordTransform& b, int d);

/// Largest position in [1, bound+1] at which some word of length bound+1 is
/// changed, or 0 when the transform fixes all such words letterwise.
int max_changed_position(const WordTransform& t, int bound);

/// Builds transforms for element words over a fixed group, caching conjugate
/// blocks. Conjugates are compiled by nesting (x * inner * x^-1), minimizing
/// at each level, which keeps the state count near the element's true section
/// count instead of the raw product size.
class TransformCompiler {
  public:
    explicit TransformCompiler(const GroupTable& g, size_t state_cap = 1u << 21);

    const GroupTable& group() const { return *g_; }

    /// Transform of x^level g x^-level.
    const WordTransform& conjugate(Elem g, int level);

    /// Transform of a product of conjugates (left factor acts last).
    WordTransform conjugate_product(std::span<const Conjugate> factors);

    /// Transform of x^e; throws budget_error when the minimal machine
    /// outgrows the cap (it grows quickly with |e|).
    WordTransform x_power(int e);

    /// Full transform of an element word, x-part included.
    WordTransform compile(const ElementWord& e);

  private:
    const GroupTable* g_;
    size_t cap_;
    WordTransform x_up_;    // reset-automaton action of x
    WordTransform x_down_;  // inverse Cayley-machine action of x^-1
    std::unordered_map<int64_t, WordTransform> conj_cache_;
};

}  // namespace cayley
