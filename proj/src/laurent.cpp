#include "cayley/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cayley {

namespace {

LaurentPoly trimmed(int min_exp, std::vector<uint8_t> bits) {
    size_t lo = 0;
    while (lo < bits.size() && bits[lo] == 0) ++lo;
    if (lo == bits.size()) return {};
    size_t hi = bits.size();
    while (bits[hi - 1] == 0) --hi;
    std::vector<uint8_t> out(bits.begin() + static_cast<long>(lo),
                             bits.begin() + static_cast<long>(hi));
    return LaurentPoly{min_exp + static_cast<int>(lo), std::move(out)};
}

}  // namespace

LaurentPoly poly_add(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.is_zero()) return q;
    if (q.is_zero()) return p;
    const int lo = std::min(p.min_exp, q.min_exp);
    const int hi = std::max(p.max_exp(), q.max_exp());
    std::vector<uint8_t> bits(static_cast<size_t>(hi - lo + 1), 0);
    for (int e = lo; e <= hi; ++e)
        bits[static_cast<size_t>(e - lo)] =
            static_cast<uint8_t>(p.coeff(e) ^ q.coeff(e));
    return trimmed(lo, std::move(bits));
}

LaurentPoly poly_mul(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<uint8_t> bits(p.bits.size() + q.bits.size() - 1, 0);
    for (size_t i = 0; i < p.bits.size(); ++i) {
        if (!p.bits[i]) continue;
        for (size_t j = 0; j < q.bits.size(); ++j) bits[i + j] ^= q.bits[j];
    }
    return trimmed(p.min_exp + q.min_exp, std::move(bits));
}

std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (size_t i = 0; i < p.bits.size(); ++i) {
        if (!p.bits[i]) continue;
        if (!out.empty()) out += '+';
        const int e = p.min_exp + static_cast<int>(i);
        if (e == 0) out += '1';
        else if (e == 1) out += 't';
        else out += "t^" + std::to_string(e);
    }
    return out;
}

LaurentMatrix LaurentMatrix::zero(int dim) {
    LaurentMatrix m;
    m.dim = dim;
    m.entries.assign(static_cast<size_t>(dim) * dim, LaurentPoly{});
    return m;
}

LaurentMatrix LaurentMatrix::identity(int dim) {
    LaurentMatrix m = zero(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = LaurentPoly::one();
    return m;
}

bool LaurentMatrix::is_identity() const {
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            const LaurentPoly& e = at(i, j);
            if (i == j ? !e.is_one() : !e.is_zero()) return false;
        }
    return true;
}

LaurentMatrix mat_mul(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.dim != b.dim) throw std::invalid_argument("mat_mul: dimension mismatch");
    LaurentMatrix out = LaurentMatrix::zero(a.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int k = 0; k < a.dim; ++k) {
            const LaurentPoly& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < a.dim; ++j) {
                const LaurentPoly& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                out.at(i, j) = poly_add(out.at(i, j), poly_mul(aik, bkj));
            }
        }
    return out;
}

LaurentMatrix mat_add(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.dim != b.dim) throw std::invalid_argument("mat_add: dimension mismatch");
    LaurentMatrix out = a;
    for (size_t i = 0; i < out.entries.size(); ++i)
        out.entries[i] = poly_add(out.entries[i], b.entries[i]);
    return out;
}

LaurentMatrix mat_pow(const LaurentMatrix& a, long e) {
    if (e < 0) throw std::invalid_argument("mat_pow: negative exponent");
    LaurentMatrix acc = LaurentMatrix::identity(a.dim);
    LaurentMatrix base = a;
    while (e > 0) {
        if (e & 1) acc = mat_mul(acc, base);
        e >>= 1;
        if (e > 0) base = mat_mul(base, base);
    }
    return acc;
}

std::string to_string(const LaurentMatrix& a) {
    std::vector<std::string> cells(a.entries.size());
    std::vector<size_t> width(static_cast<size_t>(a.dim), 0);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            std::string s = to_string(a.at(i, j));
            width[static_cast<size_t>(j)] =
                std::max(width[static_cast<size_t>(j)], s.size());
            cells[static_cast<size_t>(i) * a.dim + j] = std::move(s);
        }
    std::ostringstream out;
    for (int i = 0; i < a.dim; ++i) {
        out << '[';
        for (int j = 0; j < a.dim; ++j) {
            const std::string& s = cells[static_cast<size_t>(i) * a.dim + j];
            out << ' ' << std::string(width[static_cast<size_t>(j)] - s.size(), ' ') << s;
        }
        out << " ]\n";
    }
    return out.str();
}

bool is_unitriangular(const LaurentMatrix& a) {
    for (int i = 0; i < a.dim; ++i) {
        if (!a.at(i, i).is_one()) return false;
        for (int j = 0; j < i; ++j)
            if (!a.at(i, j).is_zero()) return false;
    }
    return true;
}

LaurentMatrix unitriangular_inverse(const LaurentMatrix& a) {
    if (!is_unitriangular(a))
        throw std::domain_error("unitriangular_inverse: matrix is not upper unitriangular");
    LaurentMatrix inv = LaurentMatrix::identity(a.dim);
    for (int gap = 1; gap < a.dim; ++gap)
        for (int i = 0; i + gap < a.dim; ++i) {
            const int j = i + gap;
            LaurentPoly sum;
            for (int k = i + 1; k <= j; ++k)
                sum = poly_add(sum, poly_mul(a.at(i, k), inv.at(k, j)));
            inv.at(i, j) = std::move(sum);
        }
    return inv;
}

LaurentMatrix matrix_commutator(const LaurentMatrix& a, const LaurentMatrix& b) {
    return mat_mul(mat_mul(unitriangular_inverse(a), unitriangular_inverse(b)),
                   mat_mul(a, b));
}

bool corner_supported(const LaurentMatrix& a) {
    for (int i = 0; i < a.dim; ++i)
        for (int j = i + 1; j < a.dim; ++j)
            if (j - i < a.dim - 1 && !a.at(i, j).is_zero()) return false;
    return true;
}

LaurentPoly commutator_entry(const LaurentMatrix& g, const LaurentMatrix& h) {
    const LaurentMatrix k = matrix_commutator(g, h);
    if (!corner_supported(k))
        throw std::domain_error("commutator_entry: commutator has interior entries");
    const int m = g.dim - 1;
    LaurentPoly sum;
    for (int i = 1; i < m; ++i) {
        sum = poly_add(sum, poly_mul(g.at(0, i), h.at(i, m)));
        sum = poly_add(sum, poly_mul(h.at(0, i), g.at(i, m)));
    }
    if (!(sum == k.at(0, m)))
        throw std::logic_error("commutator_entry: closed form disagrees with direct product");
    return sum;
}

}  // namespace cayley
