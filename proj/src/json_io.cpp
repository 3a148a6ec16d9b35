#include "cayley/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace cayley {

namespace {

std::string name_of(const GroupTable& g, Elem e) {
    return g.names[static_cast<size_t>(e)];
}

Elem elem_of(const GroupTable& g, const std::string& name) {
    const auto e = g.find(name);
    if (!e) throw std::invalid_argument("unknown element name '" + name + "'");
    return *e;
}

json failure_list(const std::vector<std::string>& v) { return json(v); }

}  // namespace

GroupTable group_from_json(const json& spec) {
    if (!spec.is_object() || !spec.contains("kind") || !spec["kind"].is_string())
        throw std::invalid_argument("group spec: expected an object with a \"kind\" string");
    const std::string kind = spec["kind"].get<std::string>();
    if (kind == "named") {
        const std::string name = spec.at("name").get<std::string>();
        if (name == "q8") return q8();
        if (name == "d8") return d8();
        throw std::invalid_argument("group spec: unknown named group '" + name + "'");
    }
    if (kind == "modular") return modular_group(spec.at("n").get<int>());
    if (kind == "cyclic") return cyclic_group(spec.at("m").get<int>());
    if (kind == "product") {
        const json& factors = spec.at("factors");
        if (!factors.is_array() || factors.empty())
            throw std::invalid_argument("group spec: product needs a nonempty factor list");
        GroupTable g = group_from_json(factors[0]);
        for (size_t i = 1; i < factors.size(); ++i)
            g = direct_product(g, group_from_json(factors[i]));
        return g;
    }
    if (kind == "table") {
        std::vector<std::string> names = spec.at("names").get<std::vector<std::string>>();
        std::vector<std::vector<Elem>> rows =
            spec.at("table").get<std::vector<std::vector<Elem>>>();
        return from_table(std::move(names), std::move(rows));
    }
    throw std::invalid_argument("group spec: unknown kind '" + kind + "'");
}

GroupTable group_from_arg(const std::string& arg) {
    if (arg == "q8") return q8();
    if (arg == "d8") return d8();
    if (arg.size() >= 2 && arg[0] == 'm' && arg.find_first_not_of("0123456789", 1) == std::string::npos) {
        const int order = std::stoi(arg.substr(1));
        int n = 0;
        while ((1 << (n + 1)) <= order) ++n;
        if ((1 << n) == order && n >= 3) return modular_group(n);
        throw std::invalid_argument("group '" + arg + "': modular order must be 2^n, n >= 3");
    }
    if (arg.size() >= 2 && arg[0] == 'c' && arg.find_first_not_of("0123456789", 1) == std::string::npos)
        return cyclic_group(std::stoi(arg.substr(1)));
    std::ifstream in(arg);
    if (!in) throw std::invalid_argument("group '" + arg + "': not a known name or readable file");
    json spec;
    try {
        in >> spec;
    } catch (const json::parse_error& err) {
        throw std::invalid_argument("group file '" + arg + "': " + err.what());
    }
    return group_from_json(spec);
}

json to_json(const GroupTable& g, const StructuralReport& r) {
    json center = json::array();
    for (Elem e : r.center) center.push_back(name_of(g, e));
    return json{{"order", g.size},
                {"center", std::move(center)},
                {"nilpotency_class", r.nilpotency_class ? json(*r.nilpotency_class) : json()},
                {"squares_central", r.squares_central},
                {"abelian", r.abelian}};
}

json to_json(const MealyMachine& m) {
    json transition = json::array();
    json output = json::array();
    for (int q = 0; q < m.n_states(); ++q) {
        json trow = json::array(), orow = json::array();
        for (int a = 0; a < m.n_letters(); ++a) {
            trow.push_back(m.delta(q, a));
            orow.push_back(m.lambda(q, a));
        }
        transition.push_back(std::move(trow));
        output.push_back(std::move(orow));
    }
    return json{{"states", m.states},
                {"alphabet", m.alphabet},
                {"transition", std::move(transition)},
                {"output", std::move(output)}};
}

MealyMachine machine_from_json(const json& j) {
    MealyMachine m;
    m.states = j.at("states").get<std::vector<std::string>>();
    m.alphabet = j.at("alphabet").get<std::vector<std::string>>();
    const auto transition = j.at("transition").get<std::vector<std::vector<int>>>();
    const auto output = j.at("output").get<std::vector<std::vector<int>>>();
    if (transition.size() != m.states.size() || output.size() != m.states.size())
        throw std::invalid_argument("machine: row count must match the state count");
    for (size_t q = 0; q < transition.size(); ++q) {
        if (transition[q].size() != m.alphabet.size() || output[q].size() != m.alphabet.size())
            throw std::invalid_argument("machine: row width must match the alphabet");
        m.transition.insert(m.transition.end(), transition[q].begin(), transition[q].end());
        m.output.insert(m.output.end(), output[q].begin(), output[q].end());
    }
    return m;
}

json to_json(const GroupTable& g, const NormalForm& p) {
    json factors = json::array();
    for (const Conjugate& f : p.factors)
        factors.push_back(json::array({f.level, name_of(g, f.g)}));
    return json{{"x_exp", p.x_exp}, {"factors", std::move(factors)}};
}

NormalForm nf_from_json(const GroupTable& g, const json& j) {
    NormalForm p;
    p.x_exp = j.at("x_exp").get<int>();
    for (const json& f : j.at("factors")) {
        if (!f.is_array() || f.size() != 2)
            throw std::invalid_argument("normal form: factors must be [level, name] pairs");
        p.factors.push_back({f[0].get<int>(), elem_of(g, f[1].get<std::string>())});
    }
    return p;
}

json to_json(const LaurentPoly& p) {
    std::string bits(p.bits.size(), '0');
    for (size_t i = 0; i < p.bits.size(); ++i)
        if (p.bits[i]) bits[i] = '1';
    return json{{"min_exp", p.is_zero() ? 0 : p.min_exp}, {"bits", std::move(bits)}};
}

LaurentPoly poly_from_json(const json& j) {
    int min_exp = j.at("min_exp").get<int>();
    const std::string bits = j.at("bits").get<std::string>();
    for (char c : bits)
        if (c != '0' && c != '1')
            throw std::invalid_argument("polynomial: bits must be a 0/1 string");
    size_t lo = 0, hi = bits.size();
    while (lo < hi && bits[lo] == '0') ++lo;
    while (hi > lo && bits[hi - 1] == '0') --hi;
    LaurentPoly p;
    if (lo == hi) return p;
    p.min_exp = min_exp + static_cast<int>(lo);
    for (size_t i = lo; i < hi; ++i) p.bits.push_back(bits[i] == '1');
    return p;
}

json to_json(const LaurentMatrix& m) {
    json entries = json::array();
    for (int i = 0; i < m.dim; ++i) {
        json row = json::array();
        for (int j = 0; j < m.dim; ++j) row.push_back(to_json(m.at(i, j)));
        entries.push_back(std::move(row));
    }
    return json{{"dim", m.dim}, {"entries", std::move(entries)}};
}

LaurentMatrix matrix_from_json(const json& j) {
    const int dim = j.at("dim").get<int>();
    LaurentMatrix m = LaurentMatrix::zero(dim);
    const json& entries = j.at("entries");
    if (!entries.is_array() || static_cast<int>(entries.size()) != dim)
        throw std::invalid_argument("matrix: entry rows must match dim");
    for (int i = 0; i < dim; ++i) {
        if (!entries[i].is_array() || static_cast<int>(entries[i].size()) != dim)
            throw std::invalid_argument("matrix: entry columns must match dim");
        for (int k = 0; k < dim; ++k) m.at(i, k) = poly_from_json(entries[i][k]);
    }
    return m;
}

json to_json(const PresentationReport& r) {
    return json{{"instances", r.instances},
                {"failures", failure_list(r.failures)},
                {"ok", r.ok()}};
}

json to_json(const FreeSemigroupReport& r) {
    return json{{"words", r.words}, {"collisions", r.collisions}, {"ok", r.ok()}};
}

json to_json(const GroupTable&, const ConsistencyReport& r) {
    return json{{"checked", r.checked},
                {"roundtrip_failures", failure_list(r.roundtrip_failures)},
                {"distinct_pairs", r.distinct_pairs},
                {"collision_failures", failure_list(r.collision_failures)},
                {"ok", r.ok()}};
}

json to_json(const RepReport& r) {
    return json{{"relation_instances", r.relation_instances},
                {"relation_failures", failure_list(r.relation_failures)},
                {"order_failures", failure_list(r.order_failures)},
                {"closed_form_failures", failure_list(r.closed_form_failures)},
                {"display_identities", r.display_identities},
                {"display_failures", failure_list(r.display_failures)},
                {"faithfulness_checked", r.faithfulness_checked},
                {"faithfulness_failures", failure_list(r.faithfulness_failures)},
                {"kernel_trace", failure_list(r.kernel_trace)},
                {"seed", r.seed},
                {"ok", r.ok()}};
}

json to_json(const GroupTable& g, const IndexReport& r) {
    json reps = json::array();
    for (Elem e : r.coset_reps) reps.push_back(name_of(g, e));
    return json{{"truncation", r.truncation},
                {"index", r.index},
                {"coset_reps", std::move(reps)},
                {"reps_cover_group", r.reps_cover_group}};
}

json to_json(const IntersectionReport& r) {
    return json{{"nonneg_checked", r.nonneg_checked},
                {"neg_checked", r.neg_checked},
                {"failures", failure_list(r.failures)},
                {"seed", r.seed},
                {"ok", r.ok()}};
}

json to_json(const DoubleCosetReport& r) {
    return json{{"checked", r.checked},
                {"failures", failure_list(r.failures)},
                {"seed", r.seed},
                {"ok", r.ok()}};
}

json to_json(const IncreasingUnionReport& r) {
    return json{{"instances", r.instances},
                {"failures", failure_list(r.failures)},
                {"ok", r.ok()}};
}

}  // namespace cayley
