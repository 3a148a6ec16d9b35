#include "cayley/crosswired.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cayley/rng.hpp"
#include "cayley/tree_action.hpp"

namespace cayley {

namespace {

size_t leaf_count(int k, int depth) {
    size_t n = 1;
    for (int i = 0; i < depth; ++i) {
        if (n > (size_t{1} << 40) / static_cast<size_t>(k))
            throw std::invalid_argument("truncated tree is too large");
        n *= static_cast<size_t>(k);
    }
    return n;
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

bool nonneg_before_neg(int n, int m) {
    const int cn = n < 0 ? 1 : 0;
    const int cm = m < 0 ? 1 : 0;
    return cn != cm ? cn < cm : n < m;
}

std::vector<Token> x_tokens(int e) {
    std::vector<Token> out;
    const int a = e >= 0 ? e : -e;
    for (int i = 0; i < a; ++i) out.push_back(Token::x(e >= 0 ? 1 : -1));
    return out;
}

}  // namespace

Perm identity_perm(int k, int depth) {
    Perm p(leaf_count(k, depth));
    std::iota(p.begin(), p.end(), 0u);
    return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
    if (a.size() != b.size()) throw std::invalid_argument("perm_compose: size mismatch");
    Perm out(a.size());
    for (size_t w = 0; w < b.size(); ++w) out[w] = a[b[w]];
    return out;
}

Perm perm_inverse(const Perm& a) {
    Perm out(a.size());
    for (size_t w = 0; w < a.size(); ++w) out[a[w]] = static_cast<uint32_t>(w);
    return out;
}

Perm truncated_action(const WordTransform& t, int k, int depth) {
    if (t.k != k) throw std::invalid_argument("truncated_action: alphabet mismatch");
    Perm out(leaf_count(k, depth));
    std::vector<int> letters(static_cast<size_t>(depth));
    for (size_t w = 0; w < out.size(); ++w) {
        size_t v = w;
        for (int i = depth - 1; i >= 0; --i) {
            letters[static_cast<size_t>(i)] = static_cast<int>(v % static_cast<size_t>(k));
            v /= static_cast<size_t>(k);
        }
        uint32_t s = t.start;
        size_t img = 0;
        for (int i = 0; i < depth; ++i) {
            const int a = letters[static_cast<size_t>(i)];
            img = img * static_cast<size_t>(k) + t.emit(s, a);
            s = t.step(s, a);
        }
        out[w] = static_cast<uint32_t>(img);
    }
    return out;
}

void FinitarySubgroup::insert(Perm p) {
    auto [it, fresh] = index_.insert(std::move(p));
    if (fresh) elements.push_back(*it);
}

FinitarySubgroup closure(const GroupTable& g, int level_lo, int level_hi, int depth,
                         size_t cap) {
    if (level_lo < 0 || level_lo > level_hi || level_hi >= depth)
        throw std::invalid_argument("closure: levels must satisfy 0 <= lo <= hi < depth");
    TransformCompiler tc(g);
    FinitarySubgroup sub;
    sub.k = g.size;
    sub.depth = depth;
    {
        std::ostringstream label;
        label << "x^l G x^-l for l in [" << level_lo << ", " << level_hi << "]";
        sub.generated_by = label.str();
    }

    std::vector<Perm> gens;
    for (int level = level_lo; level <= level_hi; ++level)
        for (Elem e = 1; e < g.size; ++e)
            gens.push_back(truncated_action(tc.conjugate(e, level), g.size, depth));

    sub.insert(identity_perm(g.size, depth));
    std::deque<size_t> queue{0};
    while (!queue.empty()) {
        const size_t i = queue.front();
        queue.pop_front();
        for (const Perm& gen : gens) {
            Perm cand = perm_compose(gen, sub.elements[i]);
            if (sub.contains(cand)) continue;
            sub.insert(std::move(cand));
            if (sub.size() > cap) throw budget_error("closure: element cap exceeded");
            queue.push_back(sub.size() - 1);
        }
    }
    return sub;
}

IndexReport index_check(const GroupTable& g, int d, size_t cap) {
    if (d < 1) throw std::invalid_argument("index_check: d must be at least 1");
    const int trunc = d + 1;
    const FinitarySubgroup h = closure(g, 1, d, trunc, cap);

    TransformCompiler tc(g);
    std::vector<Perm> gens;
    for (int level = 0; level <= d; ++level)
        for (Elem e = 1; e < g.size; ++e)
            gens.push_back(truncated_action(tc.conjugate(e, level), g.size, trunc));

    std::vector<Perm> reps{identity_perm(g.size, trunc)};
    std::deque<size_t> queue{0};
    while (!queue.empty()) {
        const size_t i = queue.front();
        queue.pop_front();
        for (const Perm& gen : gens) {
            Perm cand = perm_compose(gen, reps[i]);
            bool known = false;
            for (const Perm& rep : reps)
                if (h.contains(perm_compose(perm_inverse(rep), cand))) {
                    known = true;
                    break;
                }
            if (known) continue;
            reps.push_back(std::move(cand));
            if (reps.size() > cap) throw budget_error("index_check: coset cap exceeded");
            queue.push_back(reps.size() - 1);
        }
    }

    IndexReport report;
    report.truncation = trunc;
    report.index = static_cast<long>(reps.size());

    // Label each coset by the embedded group element sharing it, if any.
    std::vector<Perm> embedded;
    for (Elem e = 0; e < g.size; ++e)
        embedded.push_back(truncated_action(tc.conjugate(e, 0), g.size, trunc));
    for (const Perm& rep : reps)
        for (Elem e = 0; e < g.size; ++e)
            if (h.contains(perm_compose(perm_inverse(embedded[static_cast<size_t>(e)]), rep))) {
                report.coset_reps.push_back(e);
                break;
            }
    std::sort(report.coset_reps.begin(), report.coset_reps.end());
    report.reps_cover_group =
        report.coset_reps.size() == reps.size() &&
        static_cast<Elem>(report.coset_reps.size()) == g.size;
    if (report.reps_cover_group)
        for (Elem e = 0; e < g.size; ++e)
            if (report.coset_reps[static_cast<size_t>(e)] != e) report.reps_cover_group = false;
    return report;
}

namespace {

// Enumerates or samples one factor assignment per level slot; digit 0 leaves
// the slot empty. visit returns false to stop early.
template <typename Visit>
void sweep_forms(const GroupTable& g, int width, long samples, uint64_t seed, Visit visit) {
    std::vector<Elem> digits(static_cast<size_t>(width), 0);
    if (samples == 0) {
        while (true) {
            if (!visit(digits)) return;
            int pos = 0;
            while (pos < width && ++digits[static_cast<size_t>(pos)] == g.size)
                digits[static_cast<size_t>(pos++)] = 0;
            if (pos == width) return;
        }
    } else {
        std::mt19937_64 rng(seed);
        for (long s = 0; s < samples; ++s) {
            for (int i = 0; i < width; ++i)
                digits[static_cast<size_t>(i)] =
                    static_cast<Elem>(bounded_draw(rng, static_cast<uint64_t>(g.size)));
            if (!visit(digits)) return;
        }
    }
}

}  // namespace

IntersectionReport intersection_trivial(const GroupTable& g, int level_bound, long samples,
                                        uint64_t seed, int depth_bound) {
    if (level_bound < 1) throw std::invalid_argument("intersection_trivial: bound too small");
    IntersectionReport report;
    report.seed = seed;
    TransformCompiler tc(g);

    // Side inside L: levels [0, level_bound]; finite depth, exactly top+1.
    sweep_forms(g, level_bound + 1, samples, seed, [&](const std::vector<Elem>& digits) {
        std::vector<Conjugate> factors;
        for (int i = 0; i <= level_bound; ++i)
            if (digits[static_cast<size_t>(i)] != 0)
                factors.push_back({i, digits[static_cast<size_t>(i)]});
        if (factors.empty()) return true;
        ++report.nonneg_checked;
        const WordTransform t = tc.conjugate_product(factors);
        const int measured = max_changed_position(t, level_bound + 2);
        const int expected = factors.back().level + 1;
        if (measured != expected) {
            std::ostringstream msg;
            msg << "finite-depth side: expected depth " << expected << ", measured " << measured
                << " for " << nf_brief(g, NormalForm{0, factors});
            report.failures.push_back(msg.str());
        }
        return true;
    });

    // Side inside L': levels [-level_bound, -1]; depth exceeds every bound.
    sweep_forms(g, level_bound, samples, seed + 1, [&](const std::vector<Elem>& digits) {
        std::vector<Conjugate> factors;
        for (int i = 0; i < level_bound; ++i)
            if (digits[static_cast<size_t>(i)] != 0)
                factors.push_back({i - level_bound, digits[static_cast<size_t>(i)]});
        if (factors.empty()) return true;
        ++report.neg_checked;
        const WordTransform t = tc.conjugate_product(factors);
        // Central factors multiply letters by a periodic pattern, so a product
        // can fix any single position while still changing deeper ones
        // (x^-2 a2 x^2 * x^-1 a2 x moves only every other letter). Probe a
        // window twice the bound and require a change strictly beyond it.
        if (max_changed_position(t, 2 * depth_bound) <= depth_bound) {
            report.failures.push_back("negative side shows no change beyond depth bound: " +
                                      nf_brief(g, NormalForm{0, factors}));
        }
        return true;
    });
    return report;
}

DoubleCosetReport double_coset_trivial(const GroupTable& g, int level_bound, long samples,
                                       uint64_t seed) {
    if (level_bound < 1) throw std::invalid_argument("double_coset_trivial: bound too small");
    DoubleCosetReport report;
    report.seed = seed;
    const int width = 2 * level_bound + 1;

    sweep_forms(g, width, samples, seed, [&](const std::vector<Elem>& digits) {
        NormalForm p;
        for (int i = 0; i < width; ++i)
            if (digits[static_cast<size_t>(i)] != 0)
                p.factors.push_back({i - level_bound, digits[static_cast<size_t>(i)]});
        ++report.checked;

        // Literal split: the normal form already lists negative levels first.
        NormalForm minus, plus;
        for (const Conjugate& f : p.factors)
            (f.level < 0 ? minus : plus).factors.push_back(f);
        if (!(nf_mul(g, minus, plus) == p))
            report.failures.push_back("increasing split fails for " + nf_brief(g, p));

        // Exchanged split: nonnegative block first, corrections absorbed by sign.
        std::vector<Conjugate> corrections;
        std::vector<Conjugate> sorted =
            exchange_sort(g, p.factors, nonneg_before_neg, corrections);
        NormalForm plus_side, minus_side;
        for (const Conjugate& f : sorted)
            (f.level < 0 ? minus_side : plus_side).factors.push_back(f);
        for (const Conjugate& f : corrections)
            (f.level < 0 ? minus_side : plus_side).factors.push_back(f);
        const NormalForm q_plus = reduce(g, expand(plus_side));
        const NormalForm q_minus = reduce(g, expand(minus_side));
        bool sides_ok = true;
        for (const Conjugate& f : q_plus.factors) sides_ok = sides_ok && f.level >= 0;
        for (const Conjugate& f : q_minus.factors) sides_ok = sides_ok && f.level < 0;
        if (!sides_ok || !(nf_mul(g, q_plus, q_minus) == p))
            report.failures.push_back("exchanged split fails for " + nf_brief(g, p));
        return true;
    });
    return report;
}

IncreasingUnionReport increasing_union_check(const GroupTable& g, int level_bound) {
    if (level_bound < 0) throw std::invalid_argument("increasing_union_check: negative bound");
    IncreasingUnionReport report;

    auto shifted_conjugate = [](Elem e, int inner_level, int shift) {
        ElementWord w;
        w.tokens = x_tokens(shift);
        const ElementWord c = conjugate_word(e, inner_level);
        w.tokens.insert(w.tokens.end(), c.tokens.begin(), c.tokens.end());
        const std::vector<Token> back = x_tokens(-shift);
        w.tokens.insert(w.tokens.end(), back.begin(), back.end());
        return w;
    };
    auto expect_single = [&](const ElementWord& w, int level, Elem e, const char* label) {
        const NormalForm got = reduce(g, w);
        const NormalForm want{0, {{level, e}}};
        if (!(got == want)) {
            std::ostringstream msg;
            msg << label << " fails for level " << level << ", element "
                << g.names[static_cast<size_t>(e)];
            report.failures.push_back(msg.str());
        }
    };

    for (int l = -level_bound; l <= level_bound; ++l)
        for (Elem e = 1; e < g.size; ++e) {
            ++report.instances;
            const int k_left = std::max(0, -l);  // smallest shift into the L tower
            expect_single(shifted_conjugate(e, l + k_left, -k_left), l, e, "L tower shift");
            const int k_right = std::max(0, l + 1);  // smallest shift into the L' tower
            expect_single(shifted_conjugate(e, l - k_right, k_right), l, e, "L' tower shift");
        }

    // Tower nesting: each generator of the k-th tower already lies in the
    // (k+1)-st, witnessed by one explicit reduction per level.
    for (int k = 0; k <= 2 * level_bound; ++k)
        for (Elem e = 1; e < g.size; ++e) {
            ++report.instances;
            expect_single(shifted_conjugate(e, 1, -(k + 1)), -k, e, "tower nesting");
        }
    return report;
}

}  // namespace cayley
