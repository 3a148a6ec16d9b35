// Acceptance sweep for the toolkit: ten independent checks, one line each,
// nonzero exit when any of them fails. Counts and bounds are asserted
// exactly so a silent change in coverage also fails the gate.
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "cayley/crosswired.hpp"
#include "cayley/element.hpp"
#include "cayley/group.hpp"
#include "cayley/laurent.hpp"
#include "cayley/laurent_rep.hpp"
#include "cayley/normal_form.hpp"
#include "cayley/rng.hpp"
#include "cayley/tree_action.hpp"
#include "cayley/word_transform.hpp"

using namespace cayley;

namespace {

constexpr uint64_t kSeed = 20260815;

struct Gate {
    int failures = 0;

    template <typename Body>
    void criterion(int number, const std::string& label, Body&& body) {
        const auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = body(detail);
        } catch (const std::exception& err) {
            ok = false;
            detail = std::string("exception: ") + err.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << number << ". " << label;
        if (!detail.empty()) std::cout << " (" << detail << ")";
        std::cout << " [" << std::fixed << std::setprecision(1) << secs << "s]" << std::endl;
        if (!ok) ++failures;
    }
};

LaurentPoly random_poly(std::mt19937_64& rng) {
    LaurentPoly p;
    const int terms = static_cast<int>(bounded_draw(rng, 4));
    for (int i = 0; i < terms; ++i)
        p = poly_add(p, LaurentPoly::monomial(static_cast<int>(bounded_draw(rng, 7)) - 3));
    return p;
}

// Unit diagonal with support on the first row and last column; commutators of
// such matrices are corner supported.
LaurentMatrix random_frame(std::mt19937_64& rng, int dim) {
    LaurentMatrix m = LaurentMatrix::identity(dim);
    for (int j = 1; j < dim; ++j) m.at(0, j) = random_poly(rng);
    for (int i = 1; i + 1 < dim; ++i) m.at(i, dim - 1) = random_poly(rng);
    return m;
}

bool presentation_relations(std::string& detail) {
    long instances = 0;
    bool ok = true;
    for (const GroupTable& g : {q8(), d8()}) {
        const PresentationReport report = verify_presentation(g, 3, 10);
        ok = ok && report.ok() && report.instances == 49L * g.size * g.size;
        instances += report.instances;
    }
    detail = std::to_string(instances) + " instances";
    return ok;
}

bool exchange_and_centrality(std::string& detail) {
    const GroupTable g = q8();
    TransformCompiler tc(g);
    bool ok = true;
    long identities = 0;

    for (int n = 0; n <= 6; ++n)
        for (Elem f = 0; f < g.size; ++f)
            for (Elem h = 0; h < g.size; ++h) {
                // Pushing the conjugate right across h costs [h, f^-1] at the
                // half level; pushing h right across the conjugate costs
                // [f, h^-1] there.
                const ElementWord cf = conjugate_word(f, n);
                const ElementWord wh = conjugate_word(h, 0);
                const ElementWord c1 = conjugate_word(g.commutator(h, g.inv(f)), ceil_half(n));
                const ElementWord c2 = conjugate_word(g.commutator(f, g.inv(h)), ceil_half(n));
                ok = ok && equal_at_depth(tc, concat(cf, wh), concat(wh, concat(c1, cf)), 10);
                ok = ok && equal_at_depth(tc, concat(wh, cf), concat(cf, concat(c2, wh)), 10);
                identities += 2;
            }

    // Conjugated commutators are central among all conjugates. Distinct
    // (commutator value, levels, partner) combinations are checked once.
    long central_claims = 0;
    std::set<std::tuple<Elem, int, int, Elem>> checked;
    for (int l = 0; l <= 6; ++l)
        for (int m = 0; m <= 6; ++m)
            for (Elem a = 0; a < g.size; ++a)
                for (Elem b = 0; b < g.size; ++b) {
                    const Elem c = g.commutator(a, b);
                    for (Elem f = 0; f < g.size; ++f) {
                        ++central_claims;
                        if (!checked.insert({c, l, m, f}).second) continue;
                        const ElementWord u = conjugate_word(c, l);
                        const ElementWord v = conjugate_word(f, m);
                        ok = ok && equal_at_depth(tc, concat(u, v), concat(v, u), 10);
                    }
                }
    std::ostringstream msg;
    msg << identities << " identities, " << central_claims << " centrality claims ("
        << checked.size() << " distinct)";
    detail = msg.str();
    return ok;
}

bool depth_facts(std::string& detail) {
    bool ok = true;
    long checks = 0;
    for (const GroupTable& g : {q8(), d8()}) {
        TransformCompiler tc(g);
        for (int n = 0; n <= 5; ++n)
            for (Elem e = 1; e < g.size; ++e) {
                ok = ok && depth(tc, conjugate_word(e, n), 8) == std::optional<int>(n + 1);
                ++checks;
            }
        for (Elem e = 1; e < g.size; ++e) {
            // The level -1 conjugate changes arbitrarily deep positions.
            ok = ok && depth(tc, conjugate_word(e, -1), 8) == std::nullopt;
            ++checks;
        }
    }
    const GroupTable g = q8();
    const Elem a = *g.find("a"), b = *g.find("b");
    for (int n = 0; n <= 8; ++n) {
        ok = ok && conjugate_depth_probe(g, a, b, n, 10) == std::optional<int>(ceil_half(n) + 1);
        ++checks;
    }
    detail = std::to_string(checks) + " exact depths";
    return ok;
}

bool normal_form_roundtrip(std::string& detail) {
    const GroupTable g = q8();
    TransformCompiler tc(g);

    std::vector<Token> alphabet{Token::x(1), Token::x(-1)};
    for (Elem e = 1; e < g.size; ++e) alphabet.push_back(Token::group(e));
    for (Elem e = 0; e < g.size; ++e) alphabet.push_back(Token::state(e));

    bool ok = true;
    long words = 0;
    for (int len = 0; len <= 4; ++len) {
        std::vector<size_t> idx(static_cast<size_t>(len), 0);
        while (true) {
            ElementWord e;
            for (int i = 0; i < len; ++i) e.tokens.push_back(alphabet[idx[static_cast<size_t>(i)]]);
            ++words;
            ok = ok && equal_at_depth(tc, e, expand(reduce(g, e)), 10);
            int pos = 0;
            while (pos < len && ++idx[static_cast<size_t>(pos)] == alphabet.size())
                idx[static_cast<size_t>(pos++)] = 0;
            if (pos == len) break;
        }
    }

    // Distinct forms on levels 0..2 act distinctly; elements of depth <= 3
    // are determined by their action on length-3 words.
    std::map<Perm, NormalForm> seen;
    long collisions = 0;
    for (Elem f0 = 0; f0 < g.size; ++f0)
        for (Elem f1 = 0; f1 < g.size; ++f1)
            for (Elem f2 = 0; f2 < g.size; ++f2) {
                NormalForm p;
                if (f0 != 0) p.factors.push_back({0, f0});
                if (f1 != 0) p.factors.push_back({1, f1});
                if (f2 != 0) p.factors.push_back({2, f2});
                const Perm key = truncated_action(tc.conjugate_product(p.factors), g.size, 3);
                if (!seen.emplace(key, p).second) ++collisions;
            }
    ok = ok && collisions == 0 && seen.size() == 512;
    std::ostringstream msg;
    msg << words << " words, 512 forms, " << collisions << " collisions";
    detail = msg.str();
    return ok;
}

bool torsion_orders(std::string& detail) {
    const GroupTable g = q8();
    bool ok = true;
    long forms = 0;
    for (Elem f0 = 0; f0 < g.size; ++f0)
        for (Elem f1 = 0; f1 < g.size; ++f1)
            for (Elem f2 = 0; f2 < g.size; ++f2) {
                NormalForm p;
                if (f0 != 0) p.factors.push_back({0, f0});
                if (f1 != 0) p.factors.push_back({1, f1});
                if (f2 != 0) p.factors.push_back({2, f2});
                ++forms;
                const auto order = torsion_order(g, p);
                ok = ok && order.has_value() && 16 % *order == 0;
            }
    detail = std::to_string(forms) + " forms, orders divide 16";
    return ok && forms == 512;
}

bool quaternion_representation(std::string& detail) {
    const GroupTable g = q8();
    const RepReport report = verify_representation(g, Representation::q8(), 3, 1, 0, kSeed);
    std::ostringstream msg;
    msg << report.relation_instances << " relation instances, " << report.faithfulness_checked
        << " forms";
    detail = msg.str();
    return report.ok() && report.relation_instances == 3136 &&
           report.faithfulness_checked == 512;
}

bool modular_representations(std::string& detail) {
    bool ok = true;
    long sampled = 0;
    for (int n = 3; n <= 5; ++n) {
        const RepReport report = verify_representation(
            modular_group(n), Representation::modular(n), 1, 2, 10000, kSeed + n);
        ok = ok && report.ok() && report.faithfulness_checked == 10000;
        sampled += report.faithfulness_checked;
    }
    detail = std::to_string(sampled) + " sampled forms, zero kernel hits";
    return ok;
}

bool commutator_corner_formula(std::string& detail) {
    std::mt19937_64 rng(kSeed);
    bool ok = true;
    for (int i = 0; i < 1000; ++i) {
        const int dim = 4 + i % 7;
        const LaurentMatrix a = random_frame(rng, dim);
        const LaurentMatrix b = random_frame(rng, dim);
        ok = ok && commutator_entry(a, b) == matrix_commutator(a, b).at(0, dim - 1);
    }
    detail = "1000 pairs, dims 4..10";
    return ok;
}

bool subgroup_conditions(std::string& detail) {
    bool ok = true;
    for (const GroupTable& g : {q8(), d8()})
        for (int d : {2, 3}) {
            const IndexReport report = index_check(g, d);
            ok = ok && report.index == g.size && report.reps_cover_group;
        }

    const GroupTable g = q8();
    ok = ok && closure(g, 0, 0, 1).size() == 8;
    ok = ok && closure(g, 0, 1, 2).size() == 64;
    ok = ok && closure(g, 0, 2, 3).size() == 512;
    ok = ok && closure(g, 1, 2, 3).size() == 64;

    const IntersectionReport exact = intersection_trivial(g, 2, 0, kSeed);
    ok = ok && exact.ok() && exact.nonneg_checked == 511 && exact.neg_checked == 63;
    ok = ok && intersection_trivial(g, 3, 1000, kSeed).ok();

    const DoubleCosetReport split = double_coset_trivial(g, 2, 0, kSeed);
    ok = ok && split.ok() && split.checked == 32768;
    ok = ok && double_coset_trivial(g, 3, 1000, kSeed).ok();

    ok = ok && increasing_union_check(g, 3).ok();
    detail = "index 8 at d = 2, 3; closures 8/64/512/64; splits exhaustive and sampled";
    return ok;
}

bool free_semigroup(std::string& detail) {
    const FreeSemigroupReport report = free_semigroup_check(q8(), 3, 5);
    detail = std::to_string(report.words) + " state words";
    return report.ok() && report.words == 584;
}

}  // namespace

int main() {
    Gate gate;
    gate.criterion(1, "presentation relations for q8 and d8", presentation_relations);
    gate.criterion(2, "exchange identities and centrality sweep", exchange_and_centrality);
    gate.criterion(3, "depth facts for conjugates and commutator probes", depth_facts);
    gate.criterion(4, "normal form round trip and uniqueness", normal_form_roundtrip);
    gate.criterion(5, "torsion orders divide 16", torsion_orders);
    gate.criterion(6, "quaternion representation audit", quaternion_representation);
    gate.criterion(7, "modular representation audits for n = 3, 4, 5",
                   modular_representations);
    gate.criterion(8, "commutator corner formula on random frame pairs",
                   commutator_corner_formula);
    gate.criterion(9, "subgroup index, intersection, and coset splitting",
                   subgroup_conditions);
    gate.criterion(10, "free semigroup of state words", free_semigroup);

    if (gate.failures == 0) {
        std::cout << "all 10 criteria passed" << std::endl;
        return 0;
    }
    std::cout << gate.failures << " criteria failed" << std::endl;
    return 1;
}
