#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cayley/json_io.hpp"
#include "cayley/word_transform.hpp"

namespace {

using cayley::json;

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string group = "q8";
    std::string word;
    std::string letters;
    std::string out;
    int levels = 3;
    int depth = 10;
    int window = 1;
    long samples = 0;
    uint64_t seed = 12345;
    bool pretty = false;
    bool dot = false;
    bool reset = false;
};

json config_json(const std::string& command, const Options& opt) {
    json config{{"command", command},
                {"group", opt.group},
                {"levels", opt.levels},
                {"depth", opt.depth},
                {"samples", opt.samples},
                {"seed", opt.seed}};
    if (!opt.word.empty()) config["word"] = opt.word;
    if (!opt.letters.empty()) config["letters"] = opt.letters;
    if (command == "verify-rep") config["window"] = opt.window;
    return config;
}

void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.out, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file '" + opt.out + "'");
    out << text;
}

void emit_json(const Options& opt, const json& report) { emit(opt, report.dump(2) + "\n"); }

json names_json(const cayley::GroupTable& g, const std::vector<cayley::Elem>& v) {
    json out = json::array();
    for (cayley::Elem e : v) out.push_back(g.names[static_cast<size_t>(e)]);
    return out;
}

cayley::Representation representation_for(const cayley::GroupTable& g) {
    const auto basis = cayley::detect_split_basis(g);
    if (!basis)
        throw std::invalid_argument(
            "no matrix representation is wired for this group; use q8 or a modular 2-group");
    return basis->kind == cayley::SplitBasis::Kind::Q8 ? cayley::Representation::q8()
                                                       : cayley::Representation::modular(basis->n);
}

int run_info(const Options& opt) {
    const cayley::GroupTable g = cayley::group_from_arg(opt.group);
    const cayley::StructuralReport sr = cayley::structural_report(g);
    json report{{"config", config_json("info", opt)},
                {"structure", to_json(g, sr)},
                {"names", g.names},
                {"rewrite_hypothesis", cayley::central_squares_class2(g)}};
    const auto basis = cayley::detect_split_basis(g);
    report["split_basis"] =
        !basis ? json()
               : (basis->kind == cayley::SplitBasis::Kind::Q8
                      ? json("q8")
                      : json("modular " + std::to_string(basis->n)));
    emit_json(opt, report);
    return kExitPass;
}

int run_machine(const Options& opt) {
    const cayley::GroupTable g = cayley::group_from_arg(opt.group);
    const cayley::MealyMachine m =
        opt.reset ? cayley::reset_automaton(g) : cayley::cayley_machine(g);
    const std::string title = opt.reset ? "reset" : "cayley";
    if (opt.dot) {
        emit(opt, cayley::export_dot(m, title));
        return kExitPass;
    }
    json report{{"config", config_json("machine", opt)},
                {"kind", title},
                {"machine", to_json(m)},
                {"invertible", m.invertible()}};
    emit_json(opt, report);
    return kExitPass;
}

int run_act(const Options& opt) {
    const cayley::GroupTable g = cayley::group_from_arg(opt.group);
    const cayley::ElementWord e = cayley::parse_element(g, opt.word);
    const std::vector<cayley::Elem> input = cayley::parse_letters(g, opt.letters);
    const std::vector<cayley::Elem> output = cayley::evaluate(g, e, input);
    if (opt.pretty) {
        std::string line;
        for (size_t i = 0; i < output.size(); ++i) {
            if (i) line += ' ';
            line += g.names[static_cast<size_t>(output[i])];
        }
        emit(opt, line + "\n");
        return kExitPass;
    }
    json report{{"config", config_json("act", opt)},
                {"input", names_json(g, input)},
                {"output", names_json(g, output)}};
    emit_json(opt, report);
    return kExitPass;
}

int run_nf(const Options& opt) {
    const cayley::GroupTable g = cayley::group_from_arg(opt.group);
    const cayley::ElementWord e = cayley::parse_element(g, opt.word);
    const cayley::NormalForm p = cayley::reduce(g, e);
    const bool verified = cayley::equal_at_depth(g, e, cayley::expand(p), opt.depth);
    if (opt.pretty) {
        emit(opt, cayley::to_string(g, cayley::expand(p)) + "\n");
    } else {
        json report{{"config", config_json("nf", opt)},
                    {"normal_form", to_json(g, p)},
                    {"verified_depth", opt.depth},
                    {"verified", verified}};
        emit_json(opt, report);
    }
    return verified ? kExitPass : kExitVerificationFailure;
}

int run_order(const Options& opt) {
    const cayley::GroupTable g = cayley::group_from_arg(opt.group);
    const cayley::NormalForm p = cayley::reduce(g, cayley::parse_element(g, opt.word));
    const std::optional<long> order = cayley::torsion_order(g, p);
    json report{{"config", config_json("order", opt)},
                {"normal_form", to_json(g, p)},
                {"torsion", p.is_torsion()},
                {"order", order ? json(*order) : json()}};
    emit_json(opt, report);
    return kExitPass;
}

int run_verify_presentation(const Options& opt) {
    const cayley::GroupTable g = cayley::group_from_arg(opt.group);
    const cayley::PresentationReport r = cayley::verify_presentation(g, opt.levels, opt.depth);
    json report{{"config", config_json("verify-presentation", opt)},
                {"presentation", to_json(r)}};
    emit_json(opt, report);
    return r.ok() ? kExitPass : kExitVerificationFailure;
}

int run_rep(const Options& opt) {
    const cayley::GroupTable g = cayley::group_from_arg(opt.group);
    const cayley::Representation rep = representation_for(g);
    const cayley::NormalForm p = cayley::reduce(g, cayley::parse_element(g, opt.word));
    const cayley::LaurentMatrix m = cayley::rep_of_nf(g, rep, p);
    if (opt.pretty) {
        emit(opt, cayley::to_string(m));
        return kExitPass;
    }
    json report{{"config", config_json("rep", opt)},
                {"normal_form", to_json(g, p)},
                {"matrix", to_json(m)}};
    emit_json(opt, report);
    return kExitPass;
}

int run_verify_rep(const Options& opt) {
    const cayley::GroupTable g = cayley::group_from_arg(opt.group);
    const cayley::Representation rep = representation_for(g);
    const cayley::RepReport r = cayley::verify_representation(g, rep, opt.levels, opt.window,
                                                              opt.samples, opt.seed);
    json report{{"config", config_json("verify-rep", opt)}, {"representation", to_json(r)}};
    emit_json(opt, report);
    return r.ok() ? kExitPass : kExitVerificationFailure;
}

int run_crosswired(const Options& opt) {
    const cayley::GroupTable g = cayley::group_from_arg(opt.group);
    bool all_ok = true;

    json index_evidence = json::array();
    bool index_ok = true;
    long index_value = -1;
    for (int d = 2; d <= std::max(2, opt.depth); ++d) {
        const cayley::IndexReport r = cayley::index_check(g, d);
        index_evidence.push_back(to_json(g, r));
        if (index_value < 0) index_value = r.index;
        index_ok = index_ok && r.reps_cover_group && r.index == index_value &&
                   r.index == g.size;
    }

    const cayley::IntersectionReport inter =
        cayley::intersection_trivial(g, opt.levels, opt.samples, opt.seed);
    const cayley::DoubleCosetReport dc =
        cayley::double_coset_trivial(g, opt.levels, opt.samples, opt.seed + 1);
    const cayley::IncreasingUnionReport iu = cayley::increasing_union_check(g, opt.levels);

    auto condition = [](bool ok, json bound, json evidence) {
        return json{{"status", ok ? "pass" : "fail"},
                    {"bound", std::move(bound)},
                    {"evidence", std::move(evidence)}};
    };
    all_ok = index_ok && inter.ok() && dc.ok() && iu.ok();
    json report{
        {"config", config_json("crosswired", opt)},
        {"finite_index", condition(index_ok,
                                   json{{"truncations", {2, std::max(2, opt.depth)}},
                                        {"expected_index", g.size}},
                                   std::move(index_evidence))},
        {"trivial_intersection",
         condition(inter.ok(), json{{"levels", opt.levels}, {"depth", 8}}, to_json(inter))},
        {"double_coset",
         condition(dc.ok(), json{{"levels", opt.levels}}, to_json(dc))},
        {"increasing_union",
         condition(iu.ok(), json{{"levels", opt.levels}}, to_json(iu))},
        {"certified",
         "bounded evidence only; conclusions beyond the stated bounds are not certified"}};
    emit_json(opt, report);
    return all_ok ? kExitPass : kExitVerificationFailure;
}

int run_free_semigroup(const Options& opt) {
    const cayley::GroupTable g = cayley::group_from_arg(opt.group);
    const cayley::FreeSemigroupReport r =
        cayley::free_semigroup_check(g, opt.levels, opt.depth);
    json report{{"config", config_json("free-semigroup", opt)},
                {"free_semigroup", to_json(r)}};
    emit_json(opt, report);
    return r.ok() ? kExitPass : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Computations in automata groups generated by Cayley machines"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&opt](CLI::App* cmd) {
        cmd->add_option("--group", opt.group, "Group name (q8, d8, m8..m64, cN) or spec file");
        cmd->add_option("--out", opt.out, "Write the report to this file instead of stdout");
        return cmd;
    };

    CLI::App* info = add_common(app.add_subcommand("info", "Structural report of the group"));
    CLI::App* machine =
        add_common(app.add_subcommand("machine", "Emit the Cayley machine or reset automaton"));
    machine->add_flag("--reset", opt.reset, "Reset automaton instead of the Cayley machine");
    machine->add_flag("--dot", opt.dot, "GraphViz DOT output");
    CLI::App* act = add_common(app.add_subcommand("act", "Apply an element word to letters"));
    act->add_option("--word", opt.word, "Element word")->required();
    act->add_option("--letters", opt.letters, "Whitespace-separated letters")->required();
    act->add_flag("--pretty", opt.pretty, "Print the output letters as plain text");
    CLI::App* nf = add_common(app.add_subcommand("nf", "Normal form of an element word"));
    nf->add_option("--word", opt.word, "Element word")->required();
    nf->add_option("--depth", opt.depth, "Cross-check depth (default 10)");
    nf->add_flag("--pretty", opt.pretty, "Print the expanded word instead of JSON");
    CLI::App* order = add_common(app.add_subcommand("order", "Torsion order of an element"));
    order->add_option("--word", opt.word, "Element word")->required();
    CLI::App* vpres = add_common(
        app.add_subcommand("verify-presentation", "Exchange-relation sweep at finite depth"));
    vpres->add_option("--levels", opt.levels, "Conjugation level bound (default 3)");
    vpres->add_option("--depth", opt.depth, "Comparison depth (default 10)");
    CLI::App* rep = add_common(app.add_subcommand("rep", "Matrix image of an element word"));
    rep->add_option("--word", opt.word, "Element word")->required();
    rep->add_flag("--pretty", opt.pretty, "Aligned monomial grid instead of JSON");
    CLI::App* vrep =
        add_common(app.add_subcommand("verify-rep", "Audit the matrix representation"));
    vrep->add_option("--levels", opt.levels, "Relation level bound (default 3)");
    vrep->add_option("--window", opt.window, "Faithfulness level window (default 1)");
    vrep->add_option("--samples", opt.samples, "Faithfulness samples; 0 = exhaustive");
    vrep->add_option("--seed", opt.seed, "Sampling seed");
    CLI::App* cw =
        add_common(app.add_subcommand("crosswired", "Bounded lamplighter-structure certificate"));
    cw->add_option("--depth", opt.depth, "Largest index-check truncation depth (default 3)");
    cw->add_option("--levels", opt.levels, "Level bound for the coset checks (default 2)");
    cw->add_option("--samples", opt.samples, "Samples per coset check; 0 = exhaustive");
    cw->add_option("--seed", opt.seed, "Sampling seed");
    CLI::App* fsg = add_common(
        app.add_subcommand("free-semigroup", "Distinctness of positive state words"));
    fsg->add_option("--levels", opt.levels, "Maximum word length (default 3)");
    fsg->add_option("--depth", opt.depth, "Comparison depth (default 5)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        return app.exit(err) == 0 ? kExitPass : kExitUsage;
    }

    // Subcommand-specific defaults where they differ from the option seeds.
    auto fallback = [](CLI::App* cmd, const char* name, int& slot, int value) {
        if (cmd->parsed() && cmd->count(name) == 0) slot = value;
    };
    fallback(cw, "--depth", opt.depth, 3);
    fallback(cw, "--levels", opt.levels, 2);
    fallback(fsg, "--levels", opt.levels, 3);
    fallback(fsg, "--depth", opt.depth, 5);

    try {
        if (info->parsed()) return run_info(opt);
        if (machine->parsed()) return run_machine(opt);
        if (act->parsed()) return run_act(opt);
        if (nf->parsed()) return run_nf(opt);
        if (order->parsed()) return run_order(opt);
        if (vpres->parsed()) return run_verify_presentation(opt);
        if (rep->parsed()) return run_rep(opt);
        if (vrep->parsed()) return run_verify_rep(opt);
        if (cw->parsed()) return run_crosswired(opt);
        if (fsg->parsed()) return run_free_semigroup(opt);
    } catch (const std::invalid_argument& err) {
        std::cerr << json{{"error", err.what()}, {"kind", "usage"}}.dump() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& err) {
        std::cerr << json{{"error", err.what()}, {"kind", "usage"}}.dump() << "\n";
        return kExitUsage;
    } catch (const std::exception& err) {
        std::cerr << json{{"error", err.what()}, {"kind", "internal"}}.dump() << "\n";
        return kExitVerificationFailure;
    }
    return kExitUsage;
}
