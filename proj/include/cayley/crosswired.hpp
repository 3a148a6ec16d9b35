#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "cayley/group.hpp"
#include "cayley/normal_form.hpp"
#include "cayley/word_transform.hpp"

namespace cayley {

/// Automorphism of the depth-d truncated k-ary tree, stored as a permutation
/// of the k^d leaf words. Words are indexed most significant letter first:
/// (a_0, ..., a_{d-1}) -> sum a_i k^(d-1-i).
using Perm = std::vector<uint32_t>;

Perm identity_perm(int k, int depth);
Perm perm_compose(const Perm& a, const Perm& b);  // acts as a after b
Perm perm_inverse(const Perm& a);

/// Restriction of a compiled transform to the first `depth` letters.
Perm truncated_action(const WordTransform& t, int k, int depth);

/// Closure of a family of truncated conjugate actions under composition.
struct FinitarySubgroup {
    int k = 0;
    int depth = 0;
    std::string generated_by;
    std::vector<Perm> elements;  // discovery order, identity first

    bool contains(const Perm& p) const { return index_.count(p) != 0; }
    size_t size() const { return elements.size(); }
    void insert(Perm p);

private:
    std::set<Perm> index_;
};

/// Breadth-first closure of the conjugates x^level g x^-level, levels in
/// [level_lo, level_hi], truncated at the given depth. Levels must satisfy
/// 0 <= level_lo <= level_hi < depth so the generators act finitarily within
/// the truncation. Throws budget_error past cap elements.
FinitarySubgroup closure(const GroupTable& g, int level_lo, int level_hi, int depth,
                         size_t cap = 1'000'000);

/// Index of closure(levels 1..d) inside closure(levels 0..d) by left-coset
/// enumeration at truncation d+1. Exchange corrections between level 0 and
/// higher levels always land at levels >= 1, so each coset is the one of its
/// level-0 normal-form factor; the expected outcome is index |G| with the
/// embedded copy of G as representatives.
struct IndexReport {
    int truncation = 0;
    long index = 0;
    std::vector<Elem> coset_reps;  // level-0 coset labels, ascending
    bool reps_cover_group = false;
};

IndexReport index_check(const GroupTable& g, int d, size_t cap = 1'000'000);

/// Nontrivial forms supported on levels [0, level_bound] and nontrivial forms
/// supported on [-level_bound, -1] are distinct by normal-form uniqueness;
/// the measured dichotomy is that the former have finite depth while the
/// latter change a position past depth_bound (probed within a window of
/// 2 * depth_bound, since a non-finitary product can fix single positions).
/// samples = 0 runs both sides exhaustively, otherwise each side draws that
/// many random forms.
struct IntersectionReport {
    long nonneg_checked = 0;
    long neg_checked = 0;
    std::vector<std::string> failures;
    uint64_t seed = 0;

    bool ok() const { return failures.empty(); }
};

IntersectionReport intersection_trivial(const GroupTable& g, int level_bound, long samples,
                                        uint64_t seed, int depth_bound = 8);

/// Every form p with levels in [-level_bound, level_bound] splits both ways
/// across the sign boundary: p = p_minus * p_plus literally (the normal form
/// lists negative levels first) and p = q_plus * q_minus after exchanging
/// factors across the boundary, with the central corrections absorbed into
/// the matching sign block. Both splits are re-multiplied and compared to p.
struct DoubleCosetReport {
    long checked = 0;
    std::vector<std::string> failures;
    uint64_t seed = 0;

    bool ok() const { return failures.empty(); }
};

DoubleCosetReport double_coset_trivial(const GroupTable& g, int level_bound, long samples,
                                       uint64_t seed);

/// The conjugation towers x^-k L x^k and x^k L' x^-k exhaust all conjugates:
/// for each x^l g x^-l with |l| <= level_bound the smallest shifts are
/// k = max(0, -l) into the L tower and k = max(0, l+1) into the L' tower,
/// verified by reducing the explicitly shifted words; successive towers are
/// nested because shifting by one more x keeps every generator level inside
/// the larger tower.
struct IncreasingUnionReport {
    long instances = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

IncreasingUnionReport increasing_union_check(const GroupTable& g, int level_bound);

}  // namespace cayley
