#pragma once

#include <optional>
#include <string>
#include <vector>

namespace cayley {

/// Dense index of a group element inside a GroupTable. Index 0 is always the identity.
using Elem = int;

/// A finite group as a dense multiplication table.
///
/// Invariants (checked by validate()): row/column 0 realize the identity,
/// every element has a unique two-sided inverse, and the table is associative.
struct GroupTable {
    int size = 0;
    std::vector<std::string> names;   // names[0] == "1"
    std::vector<Elem> table;          // row-major, table[i*size + j] = g_i * g_j
    std::vector<Elem> inverse;

    Elem mul(Elem i, Elem j) const { return table[static_cast<size_t>(i) * size + j]; }
    Elem inv(Elem i) const { return inverse[static_cast<size_t>(i)]; }

    /// [g_i, g_j] = g_i^-1 g_j^-1 g_i g_j.
    Elem commutator(Elem i, Elem j) const {
        return mul(mul(inv(i), inv(j)), mul(i, j));
    }

    bool commutes(Elem i, Elem j) const { return mul(i, j) == mul(j, i); }

    /// Index of a named element, or nullopt.
    std::optional<Elem> find(const std::string& name) const;
};

/// Throws std::invalid_argument if the table breaks a group axiom,
/// has index 0 not the identity, or carries duplicate/empty names.
void validate(const GroupTable& g);

/// Quaternion group of order 8: a^4 = 1, b^2 = a^2, b^-1 a b = a^-1.
/// Elements are a^s b^e, named "1", "a", "a2", "a3", "b", "ab", "a2b", "a3b".
GroupTable q8();

/// Dihedral group of order 8: a^4 = b^2 = 1, b a b^-1 = a^-1.
/// Same element naming scheme as q8().
GroupTable d8();

/// Modular (semidihedral-adjacent) 2-group of order 2^n, n >= 3:
/// a^(2^(n-1)) = b^2 = 1, b a b^-1 = a^(2^(n-2)+1).
/// For n = 3 this is the dihedral group of order 8.
GroupTable modular_group(int n);

/// Cyclic group of order m >= 1 with generator named "g".
GroupTable cyclic_group(int m);

/// Direct product; element (u, v) is named "(u,v)" and indexed u*|H| + v.
GroupTable direct_product(const GroupTable& g, const GroupTable& h);

/// Builds from an explicit table (validated). Throws on any axiom violation.
GroupTable from_table(std::vector<std::string> names, std::vector<std::vector<Elem>> rows);

/// Centre, nilpotency data and the square-centrality predicate of a table.
struct StructuralReport {
    std::vector<Elem> center;
    /// Length of the upper central series when it reaches the whole group; nullopt otherwise.
    std::optional<int> nilpotency_class;
    bool squares_central = false;
    bool abelian = false;
};

StructuralReport structural_report(const GroupTable& g);

/// For a class-2 nilpotent group whose squares are not all central, returns the
/// subgroup generated by a pair {g, h} with g non-central, g^2 central and
/// [g, h] != 1, h^2 commuting with g; inside that subgroup every square is
/// central. Returns the whole group when squares are already central.
/// Throws std::domain_error when the group is not nilpotent of class <= 2, or
/// when no such pair exists.
std::vector<Elem> central_squares_subgroup(const GroupTable& g);

/// True when the group satisfies the hypothesis used by the rewriting layer:
/// nilpotency class <= 2 and every square central.
bool central_squares_class2(const GroupTable& g);

}  // namespace cayley
