#include "cayley/laurent_rep.hpp"

#include <sstream>
#include <stdexcept>

#include "cayley/rng.hpp"
#include "cayley/tree_action.hpp"

namespace cayley {

namespace {

constexpr int kQ8Dim = 6;

// level = 2k + r with r in {0, 1} (floor division for negative levels)
void split_level(int level, int& k, int& r) {
    r = ((level % 2) + 2) % 2;
    k = (level - r) / 2;
}

LaurentPoly mono(int e) { return LaurentPoly::monomial(e); }

LaurentPoly bino(int e1, int e2) {
    return poly_add(LaurentPoly::monomial(e1), LaurentPoly::monomial(e2));
}

std::string nf_brief(const GroupTable& g, const NormalForm& p) {
    std::ostringstream out;
    out << "x_exp=" << p.x_exp << " factors=[";
    for (size_t i = 0; i < p.factors.size(); ++i) {
        if (i) out << ", ";
        out << p.factors[i].level << ":" << g.names[static_cast<size_t>(p.factors[i].g)];
    }
    out << "]";
    return out.str();
}

}  // namespace

Representation Representation::q8() { return Representation(SplitBasis::q8(), 0, kQ8Dim); }

Representation Representation::modular(int n) {
    if (n < 3) throw std::invalid_argument("modular representation: n must be at least 3");
    return Representation(SplitBasis::modular(n), n, (1 << (n - 1)) + 2);
}

LaurentMatrix Representation::base(BaseGen g) const { return conj_table(g, 0); }

LaurentMatrix Representation::base_conj(BaseGen g) const { return conj_table(g, 1); }

LaurentMatrix Representation::x2_power(int k) const {
    LaurentMatrix m = LaurentMatrix::zero(dim_);
    if (basis_.kind == SplitBasis::Kind::Q8) {
        m.at(0, 0) = mono(0);
        for (int i = 1; i <= 4; ++i) m.at(i, i) = mono(k);
        m.at(5, 5) = mono(2 * k);
        return m;
    }
    const int q = 1 << (n_ - 2);
    const int hq = 1 << (n_ - 3);
    const int top = 1 << (n_ - 1);
    m.at(0, 0) = mono(0);
    for (int i = 1; i <= q - 1; ++i) {
        m.at(2 * i - 1, 2 * i - 1) = mono(i * k);
        m.at(2 * i, 2 * i) = mono(i * k);
    }
    m.at(top - 1, top - 1) = mono(hq * k);
    m.at(top, top) = mono(hq * k);
    m.at(dim_ - 1, dim_ - 1) = mono(q * k);
    return m;
}

LaurentMatrix Representation::conj_table(BaseGen g, int level) const {
    LaurentMatrix m = LaurentMatrix::identity(dim_);
    int k, r;
    split_level(level, k, r);

    if (basis_.kind == SplitBasis::Kind::Q8) {
        switch (g) {
            case BaseGen::A:
                if (r == 0) {
                    m.at(0, 1) = mono(1 - k);
                    m.at(1, 5) = mono(-k);
                } else {
                    m.at(0, 1) = mono(-k);
                    m.at(0, 3) = mono(-k);
                    m.at(1, 5) = mono(-k - 1);
                    m.at(3, 5) = bino(-k - 1, -k);
                    m.at(4, 5) = mono(-k);
                }
                break;
            case BaseGen::B:
                if (r == 0) {
                    m.at(0, 2) = mono(1 - k);
                    m.at(1, 5) = mono(-k);
                    m.at(2, 5) = mono(-k);
                } else {
                    m.at(0, 2) = mono(-k);
                    m.at(0, 4) = mono(-k);
                    m.at(1, 5) = mono(-k - 1);
                    m.at(2, 5) = mono(-k - 1);
                    m.at(3, 5) = mono(-k - 1);
                    m.at(4, 5) = bino(-k - 1, -k);
                }
                break;
            case BaseGen::C:
                m.at(0, 5) = mono(1 - level);
                break;
        }
        return m;
    }

    const int q = 1 << (n_ - 2);
    const int hq = 1 << (n_ - 3);
    const int top = 1 << (n_ - 1);  // 1-based row/column 2^(n-1) is index top-1
    switch (g) {
        case BaseGen::A:
            if (r == 0) {
                m.at(0, 1) = mono(-k);
                for (int i = 1; i <= q - 2; ++i) m.at(2 * i - 1, 2 * i + 1) = mono(-k);
                m.at(top - 3, dim_ - 1) = mono(-k);
                m.at(0, top - 1) = mono(-hq * k);
            } else {
                for (int i = 1; i <= hq; ++i) m.at(2 * i - 2, 2 * i) = mono(-1 - k);
                for (int i = hq + 1; i <= q - 1; ++i) m.at(2 * i - 2, 2 * i) = mono(-k);
                m.at(top - 2, dim_ - 1) = mono(-k);
                m.at(0, top) = mono(-hq * (k + 1));
            }
            break;
        case BaseGen::B:
            if (r == 0) {
                m.at(top - 1, dim_ - 1) = mono(-hq * k);
                m.at(top, dim_ - 1) = mono(-hq * k);
            } else {
                m.at(top - 1, dim_ - 1) = mono(-hq * (k + 1));
                m.at(top, dim_ - 1) = mono(-hq * k);
            }
            break;
        case BaseGen::C:
            m.at(0, dim_ - 1) = mono(-hq * level);
            break;
    }
    return m;
}

LaurentMatrix Representation::conj_by_x2(BaseGen g, int level) const {
    int k, r;
    split_level(level, k, r);
    return mat_mul(mat_mul(x2_power(k), conj_table(g, r)), x2_power(-k));
}

const LaurentMatrix& Representation::conj(BaseGen g, int level) const {
    const auto key = std::make_pair(static_cast<int>(g), level);
    auto it = conj_memo_.find(key);
    if (it == conj_memo_.end()) {
        LaurentMatrix table = conj_table(g, level);
        if (!(table == conj_by_x2(g, level)))
            throw std::logic_error("conjugate table disagrees with x^2 conjugation");
        it = conj_memo_.emplace(key, std::move(table)).first;
    }
    return it->second;
}

const LaurentMatrix& Representation::conj_power(BaseGen g, int level, int s) const {
    const auto key = std::make_tuple(static_cast<int>(g), level, s);
    auto it = pow_memo_.find(key);
    if (it == pow_memo_.end())
        it = pow_memo_.emplace(key, mat_pow(conj(g, level), s)).first;
    return it->second;
}

LaurentMatrix Representation::a_power_form(int j) const {
    if (basis_.kind != SplitBasis::Kind::Modular)
        throw std::invalid_argument("a_power_form: modular representation only");
    if (j < 0 || j > n_ - 2) throw std::invalid_argument("a_power_form: j out of range");
    if (j == 0) return conj_table(BaseGen::A, 0);
    LaurentMatrix m = LaurentMatrix::identity(dim_);
    if (j == n_ - 2) {
        m.at(0, dim_ - 1) = mono(0);
        return m;
    }
    const int q = 1 << (n_ - 2);
    const int top = 1 << (n_ - 1);
    const int step = 1 << (j + 1);
    m.at(0, step - 1) = mono(0);
    for (int i = 1; i <= q - (1 << j) - 1; ++i) m.at(2 * i - 1, 2 * i + step - 1) = mono(0);
    m.at(top - step - 1, dim_ - 1) = mono(0);
    return m;
}

LaurentMatrix rep_of_nf(const GroupTable& g, const Representation& rep, const NormalForm& p) {
    if (p.x_exp % 2 != 0)
        throw std::domain_error("rep_of_nf: odd x exponent lies outside the index-two subgroup");
    const CanonicalSplit split =
        canonical_split(g, NormalForm{0, p.factors}, rep.basis());
    LaurentMatrix m = LaurentMatrix::identity(rep.dim());
    for (const auto& [level, s] : split.a_part)
        m = mat_mul(m, rep.conj_power(BaseGen::A, level, s));
    for (int level : split.b_part) m = mat_mul(m, rep.conj(BaseGen::B, level));
    for (int level : split.c_part) m = mat_mul(m, rep.conj(BaseGen::C, level));
    if (p.x_exp != 0) m = mat_mul(m, rep.x2_power(p.x_exp / 2));
    return m;
}

namespace {

NormalForm single_factor_nf(Elem e, int level) {
    NormalForm p;
    if (e != 0) p.factors.push_back({level, e});
    return p;
}

void check_order_facts(const GroupTable& g, const Representation& rep, RepReport& report) {
    (void)g;
    auto expect = [&report](bool ok, const std::string& label) {
        if (!ok) report.order_failures.push_back(label);
    };
    const LaurentMatrix id = LaurentMatrix::identity(rep.dim());
    const LaurentMatrix a0 = rep.base(BaseGen::A);
    const LaurentMatrix b0 = rep.base(BaseGen::B);
    const LaurentMatrix a1 = rep.base_conj(BaseGen::A);
    const LaurentMatrix b1 = rep.base_conj(BaseGen::B);
    const LaurentMatrix c0 = rep.conj_table(BaseGen::C, 0);
    const LaurentMatrix c1 = rep.conj_table(BaseGen::C, 1);

    if (rep.basis().kind == SplitBasis::Kind::Q8) {
        expect(mat_pow(a0, 2) == c0, "base a squared is the central table");
        expect(mat_pow(b0, 2) == c0, "base b squared is the central table");
        expect(mat_pow(a0, 4) == id, "base a has order 4");
        expect(mat_pow(b0, 4) == id, "base b has order 4");
        expect(matrix_commutator(a0, b0) == c0, "[a, b] is the central table");
        expect(mat_pow(a1, 2) == c1, "conjugated a squared is the shifted central table");
        expect(mat_pow(b1, 2) == c1, "conjugated b squared is the shifted central table");
        expect(mat_pow(a1, 4) == id, "conjugated a has order 4");
        expect(matrix_commutator(a1, b1) == c1,
               "[xax^-1, xbx^-1] is the shifted central table");
        return;
    }

    const int n = [&rep] {
        int v = 2;
        while ((1 << (v - 1)) + 2 != rep.dim()) ++v;
        return v;
    }();
    const long half_order = 1L << (n - 2);
    expect(!(mat_pow(a0, half_order) == id), "base a does not collapse early");
    expect(mat_pow(a0, 2 * half_order) == id, "base a has order 2^(n-1)");
    for (int j = 0; j <= n - 2; ++j)
        expect(mat_pow(a0, 1L << j) == rep.a_power_form(j),
               "a^(2^" + std::to_string(j) + ") matches its displayed table");
    expect(mat_pow(b0, 2) == id, "base b is an involution");
    expect(mat_pow(b1, 2) == id, "conjugated b is an involution");
    expect(mat_pow(a1, half_order) == c1,
           "conjugated a^(2^(n-2)) is the shifted central table");
    expect(mat_pow(a1, 2 * half_order) == id, "conjugated a has order 2^(n-1)");
    expect(matrix_commutator(a0, b0) == mat_pow(a0, half_order),
           "[a, b] equals a^(2^(n-2))");
    expect(matrix_commutator(a1, b1) == mat_pow(a1, half_order),
           "[xax^-1, xbx^-1] equals xa^(2^(n-2))x^-1");
}

void check_kernel_trace(const GroupTable& g, const Representation& rep,
                        const LaurentMatrix& m, const NormalForm& p, RepReport& report) {
    const CanonicalSplit split = canonical_split(g, p, rep.basis());
    auto entry_zero = [&m](int i, int j) { return m.at(i - 1, j - 1).is_zero(); };
    auto step = [&report, &p, &g](bool entries_ok, bool block_ok, const std::string& line) {
        if (entries_ok && block_ok) {
            report.kernel_trace.push_back(line);
        } else {
            report.faithfulness_failures.push_back("kernel elimination failed at '" + line +
                                                   "' for " + nf_brief(g, p));
        }
    };
    auto has_odd = [](const auto& levels, auto level_of) {
        for (const auto& v : levels)
            if (((level_of(v) % 2) + 2) % 2 == 1) return true;
        return false;
    };

    if (rep.basis().kind == SplitBasis::Kind::Q8) {
        step(entry_zero(1, 4),
             !has_odd(split.a_part, [](const std::pair<int, int>& v) { return v.first; }),
             "entry (1,4) = 0: odd-level a factors absent");
        step(entry_zero(1, 2), split.a_part.empty(), "entry (1,2) = 0: a factors absent");
        step(entry_zero(1, 5), !has_odd(split.b_part, [](int v) { return v; }),
             "entry (1,5) = 0: odd-level b factors absent");
        step(entry_zero(1, 3), split.b_part.empty(), "entry (1,3) = 0: b factors absent");
        step(entry_zero(1, 6), split.c_part.empty(), "entry (1,6) = 0: central factors absent");
    } else {
        const int dim = rep.dim();
        const int top = dim - 2;  // 1-based index 2^(n-1)
        bool evens = true, odds = true;
        for (int col = 2; col < dim; col *= 2) {
            evens = evens && entry_zero(1, col);
            odds = odds && entry_zero(1, col + 1);
        }
        step(evens, !has_odd(split.a_part,
                             [](const std::pair<int, int>& v) { return v.first + 1; }),
             "entries (1,2^m) = 0: even-level a factors absent");
        step(odds,
             !has_odd(split.a_part,
                      [](const std::pair<int, int>& v) { return v.first; }),
             "entries (1,2^m+1) = 0: odd-level a factors absent");
        step(entry_zero(top, dim) && entry_zero(top + 1, dim), split.b_part.empty(),
             "last-column b rows = 0: b factors absent");
        step(entry_zero(1, dim), split.c_part.empty(),
             "entry (1,dim) = 0: central factors absent");
    }
    if (p.factors.empty()) {
        report.kernel_trace.push_back("all blocks absent: the form is the identity");
    } else {
        report.faithfulness_failures.push_back("nonidentity form maps to I: " + nf_brief(g, p));
    }
}

}  // namespace

RepReport verify_representation(const GroupTable& g, const Representation& rep,
                                int level_bound, int window, long samples, uint64_t seed) {
    RepReport report;
    report.seed = seed;

    std::map<std::pair<Elem, int>, LaurentMatrix> single_memo;
    auto mat_of = [&](Elem e, int level) -> const LaurentMatrix& {
        auto key = std::make_pair(e, level);
        auto it = single_memo.find(key);
        if (it == single_memo.end())
            it = single_memo.emplace(key, rep_of_nf(g, rep, single_factor_nf(e, level))).first;
        return it->second;
    };

    // (i) every exchange-relation instance inside the level window
    for (int m = -level_bound; m <= level_bound; ++m)
        for (int n = -level_bound; n <= level_bound; ++n)
            for (Elem gj = 0; gj < g.size; ++gj)
                for (Elem gi = 0; gi < g.size; ++gi) {
                    ++report.relation_instances;
                    const LaurentMatrix lhs =
                        matrix_commutator(mat_of(gj, m), mat_of(gi, n));
                    const LaurentMatrix& rhs =
                        mat_of(g.commutator(gj, gi), ceil_half(n + m));
                    if (!(lhs == rhs)) {
                        std::ostringstream msg;
                        msg << "relation fails at m=" << m << " n=" << n
                            << " g=" << g.names[static_cast<size_t>(gj)]
                            << " h=" << g.names[static_cast<size_t>(gi)];
                        report.relation_failures.push_back(msg.str());
                    }
                }

    // (ii) generator order and power facts
    check_order_facts(g, rep, report);

    // (iii) closed conjugate tables against x^2 conjugation
    for (int k = -4; k <= 4; ++k)
        for (int r = 0; r <= 1; ++r)
            for (BaseGen gen : {BaseGen::A, BaseGen::B, BaseGen::C}) {
                const int level = 2 * k + r;
                if (!(rep.conj_table(gen, level) == rep.conj_by_x2(gen, level))) {
                    std::ostringstream msg;
                    msg << "closed table mismatch for generator "
                        << (gen == BaseGen::A ? 'a' : gen == BaseGen::B ? 'b' : 'c')
                        << " at level " << level;
                    report.closed_form_failures.push_back(msg.str());
                }
            }

    // (iv) the four parity cases of the conjugate-commutator identity
    for (int k = -3; k <= 3; ++k)
        for (int l = -3; l <= 3; ++l)
            for (int ra = 0; ra <= 1; ++ra)
                for (int rb = 0; rb <= 1; ++rb) {
                    ++report.display_identities;
                    const int la = 2 * k + ra;
                    const int lb = 2 * l + rb;
                    const int lev = (ra == 0 && rb == 0) ? k + l : k + l + 1;
                    const LaurentMatrix lhs = matrix_commutator(rep.conj_table(BaseGen::A, la),
                                                                rep.conj_table(BaseGen::B, lb));
                    if (!(lhs == rep.conj_table(BaseGen::C, lev))) {
                        std::ostringstream msg;
                        msg << "conjugate commutator display fails at a-level " << la
                            << ", b-level " << lb;
                        report.display_failures.push_back(msg.str());
                    }
                }

    // (v) faithfulness over the level window
    const int width = 2 * window + 1;
    std::map<std::string, NormalForm> seen;
    auto check_form = [&](const std::vector<Elem>& choice) {
        NormalForm p;
        for (int i = 0; i < width; ++i)
            if (choice[static_cast<size_t>(i)] != 0)
                p.factors.push_back({i - window, choice[static_cast<size_t>(i)]});
        ++report.faithfulness_checked;
        const LaurentMatrix m = rep_of_nf(g, rep, p);
        const std::string key = to_string(m);
        auto [it, inserted] = seen.emplace(key, p);
        if (!inserted && !(it->second == p))
            report.faithfulness_failures.push_back("distinct forms share a matrix: " +
                                                   nf_brief(g, it->second) + " and " +
                                                   nf_brief(g, p));
        if (m.is_identity()) check_kernel_trace(g, rep, m, p, report);
    };

    std::vector<Elem> choice(static_cast<size_t>(width), 0);
    if (samples == 0) {
        while (true) {
            check_form(choice);
            int pos = 0;
            while (pos < width && ++choice[static_cast<size_t>(pos)] == g.size)
                choice[static_cast<size_t>(pos++)] = 0;
            if (pos == width) break;
        }
    } else {
        std::mt19937_64 rng(seed);
        for (long s = 0; s < samples; ++s) {
            for (int i = 0; i < width; ++i)
                choice[static_cast<size_t>(i)] =
                    static_cast<Elem>(bounded_draw(rng, static_cast<uint64_t>(g.size)));
            check_form(choice);
        }
    }
    return report;
}

}  // namespace cayley
