#include "cayley/group.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cayley {

std::optional<Elem> GroupTable::find(const std::string& name) const {
    for (int i = 0; i < size; ++i)
        if (names[static_cast<size_t>(i)] == name) return i;
    return std::nullopt;
}

void validate(const GroupTable& g) {
    const int k = g.size;
    if (k <= 0) throw std::invalid_argument("group: empty table");
    if (k > 256) throw std::invalid_argument("group: order above 256 is unsupported");
    if (g.names.size() != static_cast<size_t>(k) ||
        g.table.size() != static_cast<size_t>(k) * k ||
        g.inverse.size() != static_cast<size_t>(k))
        throw std::invalid_argument("group: inconsistent table sizes");

    std::set<std::string> seen;
    for (const auto& n : g.names) {
        if (n.empty()) throw std::invalid_argument("group: empty element name");
        if (!seen.insert(n).second) throw std::invalid_argument("group: duplicate element name " + n);
    }

    for (Elem x : g.table)
        if (x < 0 || x >= k) throw std::invalid_argument("group: table entry out of range");

    for (int i = 0; i < k; ++i) {
        if (g.mul(0, i) != i || g.mul(i, 0) != i)
            throw std::invalid_argument("group: index 0 is not the identity");
    }

    // Unique two-sided inverse, consistent with the stored array.
    for (int i = 0; i < k; ++i) {
        int count = 0;
        for (int j = 0; j < k; ++j)
            if (g.mul(i, j) == 0) {
                ++count;
                if (g.mul(j, i) != 0) throw std::invalid_argument("group: one-sided inverse");
                if (g.inv(i) != j) throw std::invalid_argument("group: stored inverse disagrees");
            }
        if (count != 1) throw std::invalid_argument("group: inverse not unique");
    }

    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int l = 0; l < k; ++l)
                if (g.mul(g.mul(i, j), l) != g.mul(i, g.mul(j, l)))
                    throw std::invalid_argument("group: table is not associative");
}

namespace {

std::vector<Elem> inverses_from_table(const GroupTable& g) {
    std::vector<Elem> inv(static_cast<size_t>(g.size), -1);
    for (int i = 0; i < g.size; ++i)
        for (int j = 0; j < g.size; ++j)
            if (g.table[static_cast<size_t>(i) * g.size + j] == 0) inv[static_cast<size_t>(i)] = j;
    return inv;
}

// Two-generator 2-groups with normal words a^s b^e. mul_rule gives the
// exponent pair of (a^s1 b^e1)(a^s2 b^e2).
GroupTable two_generator_group(int a_order, bool b_squares_to_a2, int conj_exponent) {
    GroupTable g;
    g.size = 2 * a_order;
    auto index = [&](int s, int e) { return e * a_order + ((s % a_order + a_order) % a_order); };
    g.names.resize(static_cast<size_t>(g.size));
    for (int e = 0; e < 2; ++e)
        for (int s = 0; s < a_order; ++s) {
            std::string n;
            if (s == 0 && e == 0) n = "1";
            else {
                if (s == 1) n = "a";
                else if (s > 1) n = "a" + std::to_string(s);
                if (e) n += "b";
            }
            g.names[static_cast<size_t>(index(s, e))] = n;
        }
    g.table.resize(static_cast<size_t>(g.size) * g.size);
    for (int e1 = 0; e1 < 2; ++e1)
        for (int s1 = 0; s1 < a_order; ++s1)
            for (int e2 = 0; e2 < 2; ++e2)
                for (int s2 = 0; s2 < a_order; ++s2) {
                    // b a = a^conj_exponent b, so b a^s2 = a^(conj_exponent*s2) b.
                    int s = e1 ? s1 + conj_exponent * s2 : s1 + s2;
                    int e = e1 + e2;
                    if (e == 2) {
                        e = 0;
                        if (b_squares_to_a2) s += 2;
                    }
                    g.table[static_cast<size_t>(index(s1, e1)) * g.size + index(s2, e2)] =
                        index(s, e);
                }
    g.inverse = inverses_from_table(g);
    validate(g);
    return g;
}

}  // namespace

GroupTable q8() { return two_generator_group(4, true, -1); }

GroupTable d8() { return two_generator_group(4, false, -1); }

GroupTable modular_group(int n) {
    if (n < 3) throw std::invalid_argument("modular group needs n >= 3");
    if (n > 8) throw std::invalid_argument("modular group order above 256 is unsupported");
    const int a_order = 1 << (n - 1);
    return two_generator_group(a_order, false, (1 << (n - 2)) + 1);
}

GroupTable cyclic_group(int m) {
    if (m < 1) throw std::invalid_argument("cyclic group needs m >= 1");
    if (m > 256) throw std::invalid_argument("cyclic group order above 256 is unsupported");
    GroupTable g;
    g.size = m;
    g.names.resize(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i)
        g.names[static_cast<size_t>(i)] = i == 0 ? "1" : (i == 1 ? "g" : "g" + std::to_string(i));
    g.table.resize(static_cast<size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) g.table[static_cast<size_t>(i) * m + j] = (i + j) % m;
    g.inverse = inverses_from_table(g);
    validate(g);
    return g;
}

GroupTable direct_product(const GroupTable& g, const GroupTable& h) {
    GroupTable p;
    if (static_cast<long>(g.size) * h.size > 256)
        throw std::invalid_argument("direct product order above 256 is unsupported");
    p.size = g.size * h.size;
    p.names.resize(static_cast<size_t>(p.size));
    p.table.resize(static_cast<size_t>(p.size) * p.size);
    auto index = [&](int u, int v) { return u * h.size + v; };
    for (int u = 0; u < g.size; ++u)
        for (int v = 0; v < h.size; ++v)
            p.names[static_cast<size_t>(index(u, v))] =
                "(" + g.names[static_cast<size_t>(u)] + "," + h.names[static_cast<size_t>(v)] + ")";
    for (int u1 = 0; u1 < g.size; ++u1)
        for (int v1 = 0; v1 < h.size; ++v1)
            for (int u2 = 0; u2 < g.size; ++u2)
                for (int v2 = 0; v2 < h.size; ++v2)
                    p.table[static_cast<size_t>(index(u1, v1)) * p.size + index(u2, v2)] =
                        index(g.mul(u1, u2), h.mul(v1, v2));
    p.inverse = inverses_from_table(p);
    validate(p);
    return p;
}

GroupTable from_table(std::vector<std::string> names, std::vector<std::vector<Elem>> rows) {
    GroupTable g;
    g.size = static_cast<int>(names.size());
    g.names = std::move(names);
    if (rows.size() != static_cast<size_t>(g.size))
        throw std::invalid_argument("group: row count != element count");
    g.table.reserve(static_cast<size_t>(g.size) * g.size);
    for (const auto& row : rows) {
        if (row.size() != static_cast<size_t>(g.size))
            throw std::invalid_argument("group: ragged table row");
        g.table.insert(g.table.end(), row.begin(), row.end());
    }
    for (Elem x : g.table)
        if (x < 0 || x >= g.size) throw std::invalid_argument("group: table entry out of range");
    g.inverse = inverses_from_table(g);
    if (std::count(g.inverse.begin(), g.inverse.end(), -1) > 0)
        throw std::invalid_argument("group: element without inverse");
    validate(g);
    return g;
}

StructuralReport structural_report(const GroupTable& g) {
    StructuralReport r;
    const int k = g.size;
    for (int i = 0; i < k; ++i) {
        bool central = true;
        for (int j = 0; j < k && central; ++j) central = g.commutes(i, j);
        if (central) r.center.push_back(i);
    }
    r.abelian = static_cast<int>(r.center.size()) == k;

    r.squares_central = true;
    for (int i = 0; i < k && r.squares_central; ++i) {
        const Elem sq = g.mul(i, i);
        for (int j = 0; j < k; ++j)
            if (!g.commutes(sq, j)) { r.squares_central = false; break; }
    }

    // Upper central series over the table: Z_{i+1} = {x : [x, y] in Z_i for all y}.
    std::vector<char> in_z(static_cast<size_t>(k), 0);
    in_z[0] = 1;
    int cls = 0;
    while (true) {
        if (std::count(in_z.begin(), in_z.end(), 1) == k) {
            r.nilpotency_class = cls;
            break;
        }
        std::vector<char> next(static_cast<size_t>(k), 0);
        for (int x = 0; x < k; ++x) {
            bool ok = true;
            for (int y = 0; y < k && ok; ++y) ok = in_z[static_cast<size_t>(g.commutator(x, y))];
            next[static_cast<size_t>(x)] = ok;
        }
        if (next == in_z) break;  // series stalled below the whole group
        in_z = std::move(next);
        ++cls;
    }
    return r;
}

bool central_squares_class2(const GroupTable& g) {
    const StructuralReport r = structural_report(g);
    return r.squares_central && r.nilpotency_class && *r.nilpotency_class <= 2;
}

std::vector<Elem> central_squares_subgroup(const GroupTable& g) {
    const StructuralReport r = structural_report(g);
    if (!r.nilpotency_class || *r.nilpotency_class > 2)
        throw std::domain_error("central_squares_subgroup: group is not nilpotent of class <= 2");

    const int k = g.size;
    std::vector<char> central(static_cast<size_t>(k), 0);
    for (Elem c : r.center) central[static_cast<size_t>(c)] = 1;

    if (r.squares_central) {
        std::vector<Elem> all(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) all[static_cast<size_t>(i)] = i;
        return all;
    }

    for (int x = 0; x < k; ++x) {
        if (central[static_cast<size_t>(x)]) continue;
        if (!central[static_cast<size_t>(g.mul(x, x))]) continue;
        for (int y = 0; y < k; ++y) {
            if (g.commutes(x, y)) continue;
            if (!g.commutes(g.mul(y, y), x)) continue;
            // Subgroup closure of {x, y}.
            std::vector<char> in(static_cast<size_t>(k), 0);
            std::vector<Elem> members{0};
            in[0] = 1;
            std::vector<Elem> frontier{0};
            const Elem gens[2] = {x, y};
            while (!frontier.empty()) {
                std::vector<Elem> next;
                for (Elem m : frontier)
                    for (Elem s : gens) {
                        for (Elem p : {g.mul(m, s), g.mul(m, g.inv(s))})
                            if (!in[static_cast<size_t>(p)]) {
                                in[static_cast<size_t>(p)] = 1;
                                members.push_back(p);
                                next.push_back(p);
                            }
                    }
                frontier = std::move(next);
            }
            // Every square must be central inside the subgroup.
            bool ok = true;
            for (Elem m : members) {
                const Elem sq = g.mul(m, m);
                for (Elem other : members)
                    if (!g.commutes(sq, other)) { ok = false; break; }
                if (!ok) break;
            }
            if (ok) {
                std::sort(members.begin(), members.end());
                return members;
            }
        }
    }
    throw std::domain_error("central_squares_subgroup: no generating pair with the required centrality");
}

}  // namespace cayley
