#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cayley {

/// Polynomial in t and t^-1 with GF(2) coefficients. bits[i] holds the
/// coefficient of t^(min_exp + i). Canonical form: first and last bits are
/// nonzero; the zero polynomial is the empty window with min_exp 0.
struct LaurentPoly {
    int min_exp = 0;
    std::vector<uint8_t> bits;

    static LaurentPoly zero() { return {}; }
    static LaurentPoly one() { return monomial(0); }
    static LaurentPoly monomial(int e) { return LaurentPoly{e, {1}}; }

    bool is_zero() const { return bits.empty(); }
    bool is_one() const { return min_exp == 0 && bits.size() == 1; }
    int max_exp() const { return min_exp + static_cast<int>(bits.size()) - 1; }
    int coeff(int e) const {
        const long i = static_cast<long>(e) - min_exp;
        return (i >= 0 && i < static_cast<long>(bits.size())) ? bits[static_cast<size_t>(i)] : 0;
    }

    bool operator==(const LaurentPoly&) const = default;
};

LaurentPoly poly_add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly poly_mul(const LaurentPoly& p, const LaurentPoly& q);

/// Ascending exponent order, e.g. "t^-1+1"; zero prints "0".
std::string to_string(const LaurentPoly& p);

struct LaurentMatrix {
    int dim = 0;
    std::vector<LaurentPoly> entries;  // row-major

    static LaurentMatrix zero(int dim);
    static LaurentMatrix identity(int dim);

    LaurentPoly& at(int i, int j) { return entries[static_cast<size_t>(i) * dim + j]; }
    const LaurentPoly& at(int i, int j) const {
        return entries[static_cast<size_t>(i) * dim + j];
    }

    bool is_identity() const;
    bool operator==(const LaurentMatrix&) const = default;
};

LaurentMatrix mat_mul(const LaurentMatrix& a, const LaurentMatrix& b);
LaurentMatrix mat_add(const LaurentMatrix& a, const LaurentMatrix& b);
LaurentMatrix mat_pow(const LaurentMatrix& a, long e);  // e >= 0

/// Aligned grid of entry strings, one row per line.
std::string to_string(const LaurentMatrix& a);

bool is_unitriangular(const LaurentMatrix& a);

/// Inverse of an upper unitriangular matrix by back substitution; over GF(2)
/// the recursion inv[i][j] = sum over i < k <= j of a[i][k] inv[k][j] needs
/// no signs. Throws std::domain_error when a is not unitriangular.
LaurentMatrix unitriangular_inverse(const LaurentMatrix& a);

/// Group commutator a^-1 b^-1 a b of unitriangular matrices.
LaurentMatrix matrix_commutator(const LaurentMatrix& a, const LaurentMatrix& b);

/// True when every strictly upper entry vanishes except possibly the
/// top-right corner.
bool corner_supported(const LaurentMatrix& a);

/// Top-right entry of the commutator [g, h] of unitriangular matrices under
/// the hypothesis that the commutator is corner supported:
///   sum over 0 < k < dim-1 of g(0,k) h(k,dim-1) + h(0,k) g(k,dim-1).
/// The hypothesis is verified by direct computation (std::domain_error when
/// an interior entry is nonzero) and the closed form is checked against the
/// directly computed corner (std::logic_error on disagreement).
LaurentPoly commutator_entry(const LaurentMatrix& g, const LaurentMatrix& h);

}  // namespace cayley
