#include "cayley/word_transform.hpp"

#include <algorithm>
#include <deque>

namespace cayley {

namespace {

uint64_t mix(uint64_t h, uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

struct VecHash {
    size_t operator()(const std::vector<uint32_t>& v) const {
        uint64_t h = v.size();
        for (uint32_t x : v) h = mix(h, x);
        return static_cast<size_t>(h);
    }
};

}  // namespace

WordTransform identity_transform(int k) {
    WordTransform t;
    t.k = k;
    t.start = 0;
    t.next.assign(static_cast<size_t>(k), 0);
    t.out.resize(static_cast<size_t>(k));
    for (int a = 0; a < k; ++a) t.out[static_cast<size_t>(a)] = static_cast<uint32_t>(a);
    return t;
}

std::vector<Elem> run_transform(const WordTransform& t, std::span<const Elem> w) {
    std::vector<Elem> out;
    out.reserve(w.size());
    uint32_t s = t.start;
    for (Elem a : w) {
        out.push_back(static_cast<Elem>(t.emit(s, a)));
        s = t.step(s, a);
    }
    return out;
}

WordTransform compose(const WordTransform& outer, const WordTransform& inner, size_t cap) {
    const int k = inner.k;
    WordTransform r;
    r.k = k;
    std::unordered_map<uint64_t, uint32_t> id;
    std::deque<std::pair<uint32_t, uint32_t>> queue;
    auto intern = [&](uint32_t o, uint32_t i) {
        const uint64_t key = (static_cast<uint64_t>(o) << 32) | i;
        auto [it, fresh] = id.emplace(key, static_cast<uint32_t>(id.size()));
        if (fresh) {
            if (id.size() > cap) throw budget_error("compose: state budget exceeded");
            queue.emplace_back(o, i);
        }
        return it->second;
    };
    r.start = intern(outer.start, inner.start);
    while (!queue.empty()) {
        auto [o, i] = queue.front();
        queue.pop_front();
        for (int a = 0; a < k; ++a) {
            const uint32_t mid = inner.emit(i, a);
            const uint32_t target = intern(outer.step(o, static_cast<int>(mid)), inner.step(i, a));
            r.next.push_back(target);
            r.out.push_back(outer.emit(o, static_cast<int>(mid)));
        }
    }
    // interning order == row emission order: rows were appended per dequeued state
    return r;
}

WordTransform minimized(const WordTransform& t) {
    const int k = t.k;
    const size_t n = t.n_states();

    // Initial partition: states with identical output rows share a block.
    std::vector<uint32_t> block(n);
    {
        std::unordered_map<std::vector<uint32_t>, uint32_t, VecHash> ids;
        std::vector<uint32_t> row(static_cast<size_t>(k));
        for (size_t s = 0; s < n; ++s) {
            for (int a = 0; a < k; ++a) row[static_cast<size_t>(a)] = t.out[s * k + a];
            block[s] = ids.emplace(row, static_cast<uint32_t>(ids.size())).first->second;
        }
    }

    size_t n_blocks = 0;
    while (true) {
        std::unordered_map<std::vector<uint32_t>, uint32_t, VecHash> ids;
        std::vector<uint32_t> fresh(n);
        std::vector<uint32_t> sig(static_cast<size_t>(k) + 1);
        for (size_t s = 0; s < n; ++s) {
            sig[0] = block[s];
            for (int a = 0; a < k; ++a) sig[static_cast<size_t>(a) + 1] = block[t.next[s * k + a]];
            fresh[s] = ids.emplace(sig, static_cast<uint32_t>(ids.size())).first->second;
        }
        const size_t count = ids.size();
        block = std::move(fresh);
        if (count == n_blocks) break;
        n_blocks = count;
    }

    // Quotient machine, renumbered by BFS from the start block for a
    // canonical result (minimal machines are unique up to this numbering).
    std::vector<uint32_t> rep(n_blocks, UINT32_MAX);
    for (size_t s = 0; s < n; ++s)
        if (rep[block[s]] == UINT32_MAX) rep[block[s]] = static_cast<uint32_t>(s);

    std::vector<uint32_t> order(n_blocks, UINT32_MAX);
    std::vector<uint32_t> bfs;
    bfs.push_back(block[t.start]);
    order[block[t.start]] = 0;
    for (size_t qi = 0; qi < bfs.size(); ++qi) {
        const uint32_t b = bfs[qi];
        const size_t s = rep[b];
        for (int a = 0; a < k; ++a) {
            const uint32_t nb = block[t.next[s * k + a]];
            if (order[nb] == UINT32_MAX) {
                order[nb] = static_cast<uint32_t>(bfs.size());
                bfs.push_back(nb);
            }
        }
    }

    WordTransform r;
    r.k = k;
    r.start = 0;
    r.next.resize(bfs.size() * static_cast<size_t>(k));
    r.out.resize(bfs.size() * static_cast<size_t>(k));
    for (size_t bi = 0; bi < bfs.size(); ++bi) {
        const size_t s = rep[bfs[bi]];
        for (int a = 0; a < k; ++a) {
            r.next[bi * k + a] = order[block[t.next[s * k + a]]];
            r.out[bi * k + a] = t.out[s * k + a];
        }
    }
    return r;
}

bool bounded_equal(const WordTransform& a, const WordTransform& b, int d) {
    if (a.k != b.k) throw std::invalid_argument("bounded_equal: alphabet mismatch");
    const int k = a.k;
    // Joint BFS; a pair first reached at some level never needs revisiting at
    // a deeper level, since the remaining comparison budget only shrinks.
    std::unordered_map<uint64_t, char> seen;
    std::deque<std::pair<uint64_t, int>> queue;
    auto push = [&](uint32_t sa, uint32_t sb, int level) {
        const uint64_t key = (static_cast<uint64_t>(sa) << 32) | sb;
        if (seen.emplace(key, 1).second) queue.emplace_back(key, level);
    };
    push(a.start, b.start, 0);
    while (!queue.empty()) {
        auto [key, level] = queue.front();
        queue.pop_front();
        if (level >= d) continue;
        const auto sa = static_cast<uint32_t>(key >> 32);
        const auto sb = static_cast<uint32_t>(key & 0xffffffffu);
        for (int x = 0; x < k; ++x) {
            if (a.emit(sa, x) != b.emit(sb, x)) return false;
            push(a.step(sa, x), b.step(sb, x), level + 1);
        }
    }
    return true;
}

int max_changed_position(const WordTransform& t, int bound) {
    const int k = t.k;
    const size_t n = t.n_states();
    std::vector<char> changing(n, 0);
    for (size_t s = 0; s < n; ++s)
        for (int a = 0; a < k; ++a)
            if (t.out[s * k + a] != static_cast<uint32_t>(a)) { changing[s] = 1; break; }

    int deepest = 0;
    std::vector<char> level_set(n, 0), next_set(n, 0);
    level_set[t.start] = 1;
    for (int level = 0; level <= bound; ++level) {
        bool hit = false;
        std::fill(next_set.begin(), next_set.end(), 0);
        for (size_t s = 0; s < n; ++s) {
            if (!level_set[s]) continue;
            if (changing[s]) hit = true;
            for (int a = 0; a < k; ++a) next_set[t.step(static_cast<uint32_t>(s), a)] = 1;
        }
        if (hit) deepest = level + 1;
        std::swap(level_set, next_set);
    }
    return deepest;
}

TransformCompiler::TransformCompiler(const GroupTable& g, size_t state_cap)
    : g_(&g), cap_(state_cap) {
    const int k = g.size;
    x_up_.k = k;
    x_up_.start = 0;
    x_up_.next.resize(static_cast<size_t>(k) * k);
    x_up_.out.resize(static_cast<size_t>(k) * k);
    x_down_ = x_up_;
    for (int s = 0; s < k; ++s)
        for (int a = 0; a < k; ++a) {
            x_up_.next[static_cast<size_t>(s) * k + a] = static_cast<uint32_t>(a);
            x_up_.out[static_cast<size_t>(s) * k + a] = static_cast<uint32_t>(g.mul(g.inv(s), a));
            x_down_.next[static_cast<size_t>(s) * k + a] = static_cast<uint32_t>(g.mul(s, a));
            x_down_.out[static_cast<size_t>(s) * k + a] = static_cast<uint32_t>(g.mul(s, a));
        }
}

const WordTransform& TransformCompiler::conjugate(Elem g, int level) {
    const int64_t key = static_cast<int64_t>(level) * 1024 + g;
    if (auto it = conj_cache_.find(key); it != conj_cache_.end()) return it->second;

    WordTransform m;
    if (level == 0) {
        const int k = g_->size;
        m.k = k;
        m.start = static_cast<uint32_t>(g);
        m.next.assign(static_cast<size_t>(k) * k, 0);  // after one letter nothing is pending
        m.out.resize(static_cast<size_t>(k) * k);
        for (int s = 0; s < k; ++s)
            for (int a = 0; a < k; ++a)
                m.out[static_cast<size_t>(s) * k + a] = static_cast<uint32_t>(g_->mul(s, a));
        m = minimized(m);
    } else {
        const int inner_level = level > 0 ? level - 1 : level + 1;
        const WordTransform& inner = conjugate(g, inner_level);
        const WordTransform& lhs = level > 0 ? x_up_ : x_down_;
        const WordTransform& rhs = level > 0 ? x_down_ : x_up_;
        m = minimized(compose(lhs, compose(inner, rhs, cap_), cap_));
    }
    return conj_cache_.emplace(key, std::move(m)).first->second;
}

WordTransform TransformCompiler::conjugate_product(std::span<const Conjugate> factors) {
    if (factors.empty()) return identity_transform(g_->size);
    WordTransform acc = conjugate(factors.back().g, factors.back().level);
    for (size_t i = factors.size() - 1; i-- > 0;) {
        acc = compose(conjugate(factors[i].g, factors[i].level), acc, cap_);
        if (acc.n_states() > 64) acc = minimized(acc);
    }
    return acc;
}

WordTransform TransformCompiler::x_power(int e) {
    if (e == 0) return identity_transform(g_->size);
    const WordTransform& step = e > 0 ? x_up_ : x_down_;
    WordTransform acc = step;
    for (int i = 1; i < (e > 0 ? e : -e); ++i) acc = minimized(compose(acc, step, cap_));
    return acc;
}

WordTransform TransformCompiler::compile(const ElementWord& e) {
    const Regrouped r = regroup(*g_, e);
    WordTransform torsion = conjugate_product(r.conjugates);
    if (r.x_exp == 0) return torsion;
    return minimized(compose(torsion, x_power(r.x_exp), cap_));
}

}  // namespace cayley
