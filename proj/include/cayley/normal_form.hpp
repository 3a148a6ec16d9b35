#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cayley/element.hpp"
#include "cayley/group.hpp"

namespace cayley {

/// Canonical form (product of x^n_i f_i x^-n_i over strictly increasing
/// levels n_i, every f_i nontrivial) times x^x_exp on the right.
struct NormalForm {
    int x_exp = 0;
    std::vector<Conjugate> factors;

    bool is_identity() const { return x_exp == 0 && factors.empty(); }
    bool is_torsion() const { return x_exp == 0; }
    bool operator==(const NormalForm&) const = default;
};

/// Rewrites an element word into its normal form. The group must be nilpotent
/// of class <= 2 with all squares central (throws std::domain_error
/// otherwise); under that hypothesis adjacent conjugates exchange as
///   x^n g x^-n x^m h x^-m = x^m h x^-m * C * x^n g x^-n,
///   C = x^ceil((n+m)/2) [h, g^-1] x^-ceil((n+m)/2),
/// and the corrections C are central among the conjugates, so they are
/// collected aside and merged by level at the end. Same-level factors merge
/// through the group table.
NormalForm reduce(const GroupTable& g, const ElementWord& e);

NormalForm nf_mul(const GroupTable& g, const NormalForm& p, const NormalForm& q);
NormalForm nf_inverse(const GroupTable& g, const NormalForm& p);

/// Token word spelling the normal form literally.
ElementWord expand(const NormalForm& p);

/// Order of the element; nullopt means infinite (exactly when x_exp != 0).
/// Torsion orders always divide 2 * |G|.
std::optional<long> torsion_order(const GroupTable& g, const NormalForm& p);

/// Which two-generator decomposition canonical_split should use.
struct SplitBasis {
    enum class Kind { Q8, Modular };
    Kind kind;
    int n = 0;  // modular parameter, order 2^n

    static SplitBasis q8() { return {Kind::Q8, 0}; }
    static SplitBasis modular(int n) { return {Kind::Modular, n}; }
};

/// Torsion element split into the ordered three-block shape
///   (a-conjugates) * (b-conjugates) * (central commutator conjugates),
/// each block with strictly increasing levels. For the quaternion basis the
/// a-exponents are 1 and the central generator is a^2; for the modular basis
/// the a-exponents range over [1, 2^(n-2)-1] and the central generator is
/// [a, b] = a^(2^(n-2)). The commutator block absorbs the exchange
/// corrections created by separating the a- and b-blocks.
struct CanonicalSplit {
    std::vector<std::pair<int, int>> a_part;  // (level, exponent)
    std::vector<int> b_part;                  // levels
    std::vector<int> c_part;                  // levels
};

CanonicalSplit canonical_split(const GroupTable& g, const NormalForm& p, const SplitBasis& basis);

/// Basis whose defining relations the table satisfies (with generators named
/// "a" and "b"), or nullopt when neither decomposition applies.
std::optional<SplitBasis> detect_split_basis(const GroupTable& g);

/// Round-trip and uniqueness audit over a sample of element words: each word
/// must equal expand(reduce(word)) at depth d, and words with distinct normal
/// forms must act distinctly at depth d.
struct ConsistencyReport {
    long checked = 0;
    std::vector<std::string> roundtrip_failures;
    long distinct_pairs = 0;
    std::vector<std::string> collision_failures;
    bool ok() const { return roundtrip_failures.empty() && collision_failures.empty(); }
};

ConsistencyReport nf_consistency(const GroupTable& g, const std::vector<ElementWord>& sample,
                                 int d);

/// Internal rewriting step shared with the coset machinery: sorts a conjugate
/// list with the exchange rule under an arbitrary strict order on levels,
/// appending the central corrections to `corrections`; same-order levels merge
/// through the table. `before(n, m)` must be a strict weak order.
std::vector<Conjugate> exchange_sort(const GroupTable& g, std::vector<Conjugate> list,
                                     bool (*before)(int, int),
                                     std::vector<Conjugate>& corrections);

}  // namespace cayley
