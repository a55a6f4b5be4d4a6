#include "fano/cli.hpp"

#include <map>

#include "CLI11.hpp"

#include "fano/report.hpp"

namespace fano {

namespace {

OutputFormat to_format(const std::string& name) {
    if (name == "table") return OutputFormat::table;
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    throw PreconditionError("unknown format '" + name + "'");
}

Family to_family(const std::string& name) {
    if (name == "complete-intersection") return Family::complete_intersection;
    if (name == "grassmannian") return Family::grassmannian;
    if (name == "product") return Family::product;
    if (name == "p1-bundle") return Family::p1_bundle;
    throw PreconditionError("unknown family '" + name + "'");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact intersection-theory positivity calculator"};
    app.require_subcommand(1);

    // classify
    std::string classify_spec;
    std::string classify_format = "table";
    bool classify_verbose = false;
    auto* classify_cmd = app.add_subcommand("classify", "classify a single space");
    classify_cmd->add_option("spec", classify_spec, "space spec, e.g. \"ci n=5 d=3\"")->required();
    classify_cmd->add_option("--format", classify_format, "table|csv|json");
    classify_cmd->add_flag("--verbose", classify_verbose, "include witness pairings");

    // sweep
    SweepConfig cfg;
    std::string sweep_family;
    std::string sweep_format = "table";
    auto* sweep_cmd = app.add_subcommand("sweep", "classify a parameter family");
    sweep_cmd->add_option("--family", sweep_family,
                          "complete-intersection|grassmannian|product|p1-bundle")
        ->required();
    sweep_cmd->add_option("--max-n", cfg.n_max, "ambient dimension bound");
    sweep_cmd->add_option("--max-r", cfg.r_max, "codimension bound");
    sweep_cmd->add_option("--max-d", cfg.d_max, "degree bound");
    sweep_cmd->add_option("--max-k", cfg.k_max, "Grassmannian k bound");
    sweep_cmd->add_option("--max-w", cfg.w_max, "weight bound (ci family)");
    sweep_cmd->add_option("--cap", cfg.cap, "refuse sweeps larger than this");
    sweep_cmd->add_option("--format", sweep_format, "table|csv|json");
    sweep_cmd->add_flag("--boundary-only", cfg.boundary_only, "keep boundary rows only");
    sweep_cmd->add_flag("--verbose", cfg.verbose, "include witness pairings");

    // lemma3
    std::string l3_ch2 = "0", l3_c1sq = "0";
    Lemma3Input l3;
    auto* lemma3_cmd = app.add_subcommand("lemma3", "deformation-dimension lower bound");
    lemma3_cmd->add_option("--ch2", l3_ch2, "deg(ch2(T)|_S), rational")->required();
    lemma3_cmd->add_option("--c1sq", l3_c1sq, "deg(c1(T)^2|_S), rational")->required();
    lemma3_cmd->add_option("--e", l3.e, "anticanonical degree of the curve class")->required();
    lemma3_cmd->add_option("--dim", l3.dim_x, "dim(X)")->required();
    lemma3_cmd->add_option("--g", l3.genus, "genus of the base curve")->required();
    lemma3_cmd->add_option("--b", l3.marked, "number of marked points")->required();

    // bb-degree
    std::string bb_spec;
    int bb_e = 1;
    auto* bb_cmd = app.add_subcommand("bb-degree", "bend-and-break degree per surface generator");
    bb_cmd->add_option("spec", bb_spec, "space spec")->required();
    bb_cmd->add_option("--e", bb_e, "anticanonical degree of the curve class")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (classify_cmd->parsed()) {
            ReportRow row = run_classify(classify_spec);
            SweepResult res{{row}, summarize({row})};
            out << render(res, to_format(classify_format), classify_verbose);
        } else if (sweep_cmd->parsed()) {
            cfg.family = to_family(sweep_family);
            cfg.format = to_format(sweep_format);
            SweepResult res = run_sweep(cfg);
            out << render(res, cfg.format, cfg.verbose);
        } else if (lemma3_cmd->parsed()) {
            l3.ch2_deg = parse_rational(l3_ch2);
            l3.c1sq_deg = parse_rational(l3_c1sq);
            Lemma3Report rep = run_lemma3(l3);
            out << "deg(ch2)           = " << to_string(rep.ch2_term) << "\n";
            out << "deg(c1^2)/(2e)     = " << to_string(rep.c1sq_term) << "\n";
            out << "(e+dim-3)(1-g-#B)  = " << to_string(rep.defect_term) << "\n";
            out << "bound              = " << to_string(rep.bound) << "\n";
        } else if (bb_cmd->parsed()) {
            Space X = build_space(parse_spec(bb_spec));
            if (X.surface_cone.empty()) {
                out << "no surface generators\n";
            } else {
                for (const auto& g : X.surface_cone)
                    out << g.label << ": "
                        << to_string(bend_and_break_degree(X, g.cls, bb_e)) << "\n";
            }
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace fano
