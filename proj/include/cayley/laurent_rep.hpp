#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cayley/group.hpp"
#include "cayley/laurent.hpp"
#include "cayley/normal_form.hpp"

namespace cayley {

/// Which conjugated base element a matrix table is requested for: the
/// generator a, the generator b, or the central commutator c = [a, b].
enum class BaseGen { A, B, C };

/// The explicit matrix representation over GF(2) Laurent polynomials of the
/// index-two subgroup generated by G, xGx^-1 and x^2: 6x6 for the quaternion
/// group, (2^(n-1)+2)-square for the modular 2-group of order 2^n. Torsion
/// elements map to unitriangular matrices; x^2 maps to a diagonal matrix of
/// monomials.
class Representation {
public:
    static Representation q8();
    static Representation modular(int n);  // n >= 3

    int dim() const { return dim_; }
    const SplitBasis& basis() const { return basis_; }

    /// Base tables for a, b, c and their single-x conjugates xax^-1, ...
    LaurentMatrix base(BaseGen g) const;
    LaurentMatrix base_conj(BaseGen g) const;

    /// Image of x^2, raised to any integer power (diagonal monomials).
    LaurentMatrix x2_power(int k) const;

    /// Closed-form table for the image of x^level g x^-level.
    LaurentMatrix conj_table(BaseGen g, int level) const;

    /// Same image computed by conjugating the base table with x2_power.
    LaurentMatrix conj_by_x2(BaseGen g, int level) const;

    /// conj_table checked against conj_by_x2 (std::logic_error on mismatch);
    /// results are memoized, as are the small powers taken by rep_of_nf.
    const LaurentMatrix& conj(BaseGen g, int level) const;
    const LaurentMatrix& conj_power(BaseGen g, int level, int s) const;

    /// Displayed closed form of base(A)^(2^j) for 0 <= j <= n-2 (modular
    /// only; j = 0 is the base table itself).
    LaurentMatrix a_power_form(int j) const;

private:
    Representation(SplitBasis basis, int n, int dim)
        : basis_(basis), n_(n), dim_(dim) {}

    SplitBasis basis_;
    int n_;  // modular parameter; 0 for the quaternion case
    int dim_;
    mutable std::map<std::pair<int, int>, LaurentMatrix> conj_memo_;
    mutable std::map<std::tuple<int, int, int>, LaurentMatrix> pow_memo_;
};

/// Image of a normal form with even x_exp: the torsion part is split into
/// a-, b- and c-blocks and mapped through the conjugate tables, then
/// multiplied by x2_power(x_exp / 2). Throws std::domain_error on odd x_exp.
LaurentMatrix rep_of_nf(const GroupTable& g, const Representation& rep, const NormalForm& p);

struct RepReport {
    long relation_instances = 0;
    std::vector<std::string> relation_failures;
    std::vector<std::string> order_failures;
    std::vector<std::string> closed_form_failures;
    long display_identities = 0;
    std::vector<std::string> display_failures;
    long faithfulness_checked = 0;
    std::vector<std::string> faithfulness_failures;
    std::vector<std::string> kernel_trace;
    uint64_t seed = 0;

    bool ok() const {
        return relation_failures.empty() && order_failures.empty() &&
               closed_form_failures.empty() && display_failures.empty() &&
               faithfulness_failures.empty();
    }
};

/// Full audit of the representation:
///   (i)   exchange-relation compatibility for all group pairs with levels in
///         [-level_bound, level_bound],
///   (ii)  order facts and power tables of the generators,
///   (iii) closed conjugate tables against x^2-conjugation for |k| <= 4,
///   (iv)  the four parity cases of the conjugate-commutator identity for
///         |k|, |l| <= 3,
///   (v)   faithfulness over torsion forms with levels in [-window, window]:
///         only the identity maps to I (with the entry-by-entry kernel
///         elimination recorded in kernel_trace) and distinct forms map to
///         distinct matrices. samples = 0 enumerates the window exhaustively,
///         otherwise that many forms are drawn from the given seed.
RepReport verify_representation(const GroupTable& g, const Representation& rep,
                                int level_bound, int window, long samples, uint64_t seed);

}  // namespace cayley
