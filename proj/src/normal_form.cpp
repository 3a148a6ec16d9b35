#include "cayley/normal_form.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "cayley/tree_action.hpp"

namespace cayley {

namespace {

uint64_t table_fingerprint(const GroupTable& g) {
    uint64_t h = 1469598103934665603ULL;
    auto eat = [&h](uint64_t v) {
        h ^= v;
        h *= 1099511628211ULL;
    };
    eat(static_cast<uint64_t>(g.size));
    for (Elem x : g.table) eat(static_cast<uint64_t>(x));
    return h;
}

// The exchange rule is only sound when commutators are central; checked once
// per distinct table.
void require_rewrite_hypothesis(const GroupTable& g) {
    static std::unordered_map<uint64_t, bool> memo;
    const uint64_t key = table_fingerprint(g);
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, central_squares_class2(g)).first;
    if (!it->second)
        throw std::domain_error(
            "reduce: group must be nilpotent of class <= 2 with every square central");
}

bool level_lt(int n, int m) { return n < m; }

NormalForm reduce_conjugates(const GroupTable& g, std::vector<Conjugate> list, int x_exp) {
    list.erase(std::remove_if(list.begin(), list.end(),
                              [](const Conjugate& c) { return c.g == 0; }),
               list.end());
    std::vector<Conjugate> corrections;
    std::vector<Conjugate> sorted = exchange_sort(g, std::move(list), level_lt, corrections);
    while (!corrections.empty()) {
        std::vector<Conjugate> merged = std::move(sorted);
        merged.insert(merged.end(), corrections.begin(), corrections.end());
        corrections.clear();
        sorted = exchange_sort(g, std::move(merged), level_lt, corrections);
        // corrections of central corrections are trivial, so this terminates
    }
    return NormalForm{x_exp, std::move(sorted)};
}

}  // namespace

std::vector<Conjugate> exchange_sort(const GroupTable& g, std::vector<Conjugate> list,
                                     bool (*before)(int, int),
                                     std::vector<Conjugate>& corrections) {
    bool changed = true;
    while (changed) {
        changed = false;
        size_t i = 0;
        while (i + 1 < list.size()) {
            const int n = list[i].level;
            const int m = list[i + 1].level;
            if (before(m, n)) {
                const Elem corr = g.commutator(list[i + 1].g, g.inv(list[i].g));
                if (corr != 0) corrections.push_back({ceil_half(n + m), corr});
                std::swap(list[i], list[i + 1]);
                changed = true;
                ++i;
            } else if (n == m) {
                const Elem merged = g.mul(list[i].g, list[i + 1].g);
                list.erase(list.begin() + static_cast<long>(i) + 1);
                if (merged == 0) list.erase(list.begin() + static_cast<long>(i));
                else list[i].g = merged;
                changed = true;
            } else {
                ++i;
            }
        }
    }
    return list;
}

NormalForm reduce(const GroupTable& g, const ElementWord& e) {
    require_rewrite_hypothesis(g);
    Regrouped r = regroup(g, e);
    return reduce_conjugates(g, std::move(r.conjugates), r.x_exp);
}

NormalForm nf_mul(const GroupTable& g, const NormalForm& p, const NormalForm& q) {
    require_rewrite_hypothesis(g);
    std::vector<Conjugate> list = p.factors;
    list.reserve(list.size() + q.factors.size());
    for (const Conjugate& c : q.factors) list.push_back({c.level + p.x_exp, c.g});
    return reduce_conjugates(g, std::move(list), p.x_exp + q.x_exp);
}

NormalForm nf_inverse(const GroupTable& g, const NormalForm& p) {
    require_rewrite_hypothesis(g);
    std::vector<Conjugate> list;
    list.reserve(p.factors.size());
    for (auto it = p.factors.rbegin(); it != p.factors.rend(); ++it)
        list.push_back({it->level - p.x_exp, g.inv(it->g)});
    return reduce_conjugates(g, std::move(list), -p.x_exp);
}

ElementWord expand(const NormalForm& p) {
    ElementWord e;
    for (const Conjugate& c : p.factors) e = concat(e, conjugate_word(c.g, c.level));
    const int a = p.x_exp >= 0 ? p.x_exp : -p.x_exp;
    for (int i = 0; i < a; ++i) e.tokens.push_back(Token::x(p.x_exp >= 0 ? 1 : -1));
    return e;
}

std::optional<long> torsion_order(const GroupTable& g, const NormalForm& p) {
    if (!p.is_torsion()) return std::nullopt;
    const long bound = 2L * g.size;
    NormalForm acc = p;
    for (long ord = 1; ord <= bound; ++ord) {
        if (acc.is_identity()) return ord;
        acc = nf_mul(g, acc, p);
    }
    throw std::logic_error("torsion_order: order exceeded twice the group order");
}

namespace {

struct SplitContext {
    Elem a, b, c;
    int a_order;
    std::vector<std::pair<int, int>> coords;  // elem -> (s, e)
};

SplitContext split_context(const GroupTable& g, const SplitBasis& basis) {
    SplitContext ctx;
    const auto a = g.find("a");
    const auto b = g.find("b");
    if (!a || !b) throw std::domain_error("canonical_split: unsupported group (no a, b basis)");
    ctx.a = *a;
    ctx.b = *b;

    if (basis.kind == SplitBasis::Kind::Q8) {
        ctx.a_order = 4;
        if (g.size != 8) throw std::domain_error("canonical_split: quaternion basis needs order 8");
        const Elem a2 = g.mul(ctx.a, ctx.a);
        if (g.mul(a2, a2) != 0 || g.mul(ctx.b, ctx.b) != a2 ||
            g.mul(g.mul(g.inv(ctx.b), ctx.a), ctx.b) != g.inv(ctx.a))
            throw std::domain_error("canonical_split: table does not satisfy quaternion relations");
    } else {
        const int n = basis.n;
        if (n < 3 || g.size != (1 << n))
            throw std::domain_error("canonical_split: modular basis size mismatch");
        ctx.a_order = 1 << (n - 1);
        Elem apow = ctx.a;
        for (int i = 1; i < ctx.a_order; ++i) {
            if (apow == 0) throw std::domain_error("canonical_split: generator order mismatch");
            apow = g.mul(apow, ctx.a);
        }
        if (apow != 0 || g.mul(ctx.b, ctx.b) != 0)
            throw std::domain_error("canonical_split: table does not satisfy modular relations");
        Elem conj = g.mul(g.mul(ctx.b, ctx.a), g.inv(ctx.b));
        Elem expected = 0;
        for (int i = 0; i < (1 << (n - 2)) + 1; ++i) expected = g.mul(expected, ctx.a);
        if (conj != expected)
            throw std::domain_error("canonical_split: table does not satisfy modular relations");
    }
    ctx.c = g.commutator(ctx.a, ctx.b);

    ctx.coords.assign(static_cast<size_t>(g.size), {-1, -1});
    Elem as = 0;
    for (int s = 0; s < ctx.a_order; ++s) {
        ctx.coords[static_cast<size_t>(as)] = {s, 0};
        ctx.coords[static_cast<size_t>(g.mul(as, ctx.b))] = {s, 1};
        as = g.mul(as, ctx.a);
    }
    for (const auto& [s, e] : ctx.coords)
        if (s < 0) throw std::domain_error("canonical_split: a, b do not enumerate the group");
    return ctx;
}

}  // namespace

CanonicalSplit canonical_split(const GroupTable& g, const NormalForm& p, const SplitBasis& basis) {
    if (!p.is_torsion()) throw std::domain_error("canonical_split: element is not torsion");
    const SplitContext ctx = split_context(g, basis);
    const int half = ctx.a_order / 2;  // exponent of the central commutator generator

    CanonicalSplit split;
    NormalForm a_block, b_block;
    for (const Conjugate& f : p.factors) {
        auto [s, e] = ctx.coords[static_cast<size_t>(f.g)];
        if (s >= half) s -= half;  // the a^half part is a central commutator, moved to c_part
        if (s > 0) {
            split.a_part.emplace_back(f.level, s);
            Elem as = 0;
            for (int i = 0; i < s; ++i) as = g.mul(as, ctx.a);
            a_block.factors.push_back({f.level, as});
        }
        if (e) {
            split.b_part.push_back(f.level);
            b_block.factors.push_back({f.level, ctx.b});
        }
    }

    // Whatever is left over after stripping the a- and b-blocks must be a
    // product of central commutator conjugates; exchange corrections land here.
    const NormalForm rest =
        nf_mul(g, nf_inverse(g, nf_mul(g, a_block, b_block)), p);
    if (rest.x_exp != 0) throw std::logic_error("canonical_split: residue has an x part");
    for (const Conjugate& f : rest.factors) {
        if (f.g != ctx.c)
            throw std::logic_error("canonical_split: residue is not a commutator conjugate");
        split.c_part.push_back(f.level);
    }
    return split;
}

std::optional<SplitBasis> detect_split_basis(const GroupTable& g) {
    try {
        split_context(g, SplitBasis::q8());
        return SplitBasis::q8();
    } catch (const std::domain_error&) {
    }
    int n = 0;
    while ((1 << (n + 1)) <= g.size) ++n;
    if ((1 << n) != g.size || n < 3) return std::nullopt;
    try {
        split_context(g, SplitBasis::modular(n));
        return SplitBasis::modular(n);
    } catch (const std::domain_error&) {
        return std::nullopt;
    }
}

ConsistencyReport nf_consistency(const GroupTable& g, const std::vector<ElementWord>& sample,
                                 int d) {
    ConsistencyReport report;
    TransformCompiler tc(g);

    struct Entry {
        NormalForm nf;
        int x_exp;
        WordTransform t;
    };
    std::vector<Entry> entries;
    entries.reserve(sample.size());

    for (const ElementWord& e : sample) {
        ++report.checked;
        const NormalForm nf = reduce(g, e);
        const Regrouped r = regroup(g, e);
        WordTransform t = tc.conjugate_product(r.conjugates);

        const Regrouped er = regroup(g, expand(nf));
        if (er.x_exp != r.x_exp ||
            !bounded_equal(t, tc.conjugate_product(er.conjugates), d))
            report.roundtrip_failures.push_back(to_string(g, e));
        entries.push_back({nf, r.x_exp, std::move(t)});
    }

    for (size_t i = 0; i < entries.size(); ++i)
        for (size_t j = i + 1; j < entries.size(); ++j) {
            if (entries[i].nf == entries[j].nf) continue;
            ++report.distinct_pairs;
            const bool same_action = entries[i].x_exp == entries[j].x_exp &&
                                     bounded_equal(entries[i].t, entries[j].t, d);
            if (same_action)
                report.collision_failures.push_back(to_string(g, sample[i]) + " vs " +
                                                    to_string(g, sample[j]));
        }
    return report;
}

}  // namespace cayley
