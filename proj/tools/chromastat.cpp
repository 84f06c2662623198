// chromastat: exact chi- and chi+-chromatic mean/variance statistics.
//
// Subcommands:
//   stats   summarize one graph (from a file or a generated family instance)
//   gen     write a family instance as DIMACS or edge list
//   verify  engine-vs-oracle equivalence sweep over families and seeded
//           random connected graphs
//   report  errata table: engine values vs derived formulas vs published
//           formulas, plus labeling-order checks
//
// Exit codes: 0 success, 2 input error, 3 size cap exceeded, 4 verification
// mismatch. Errors are emitted as a JSON error object on stdout.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "chromastat/closed_forms.hpp"
#include "chromastat/document.hpp"
#include "chromastat/engine.hpp"
#include "chromastat/errors.hpp"
#include "chromastat/families.hpp"
#include "chromastat/graph_io.hpp"
#include "chromastat/oracle.hpp"
#include "chromastat/random_graph.hpp"
#include "chromastat/stats.hpp"

namespace {

using namespace chromastat;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitSizeCap = 3;
constexpr int kExitMismatch = 4;

// CHROMASTAT_MAX_N raises or lowers the engine's exact-computation cap.
EngineOptions engine_options_from_env() {
    EngineOptions options;
    if (const char* env = std::getenv("CHROMASTAT_MAX_N")) {
        std::size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(env, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("CHROMASTAT_MAX_N must be a positive integer");
        }
        if (pos != std::string(env).size() || value < 1) {
            throw std::invalid_argument("CHROMASTAT_MAX_N must be a positive integer");
        }
        options.max_vertices = value;
    }
    return options;
}

int emit_error(const std::string& command, const Json& arguments, const std::string& type,
               const std::string& message, int exit_code) {
    std::cout << render_json(error_envelope(command, arguments, type, message, exit_code));
    return exit_code;
}

// Maps thrown errors onto the documented exit codes.
int run_guarded(const std::string& command, const Json& arguments,
                const std::function<int()>& body) {
    try {
        return body();
    } catch (const ParseError& e) {
        return emit_error(command, arguments, "parse", e.what(), kExitInput);
    } catch (const SizeCapError& e) {
        return emit_error(command, arguments, "size_cap", e.what(), kExitSizeCap);
    } catch (const std::invalid_argument& e) {
        return emit_error(command, arguments, "input", e.what(), kExitInput);
    } catch (const std::ios_base::failure& e) {
        return emit_error(command, arguments, "io", e.what(), kExitInput);
    }
}

struct GraphFlags {
    std::string input;
    std::string family;
    int n = 0;
    std::vector<int> parts;
    bool input_given = false;
    bool family_given = false;
    bool n_given = false;
    bool parts_given = false;

    Json arguments_json() const {
        Json args = Json::object();
        if (input_given) args["input"] = input;
        if (family_given) args["family"] = family;
        if (n_given) args["n"] = n;
        if (parts_given) args["parts"] = parts;
        return args;
    }
};

void add_family_flags(CLI::App* cmd, GraphFlags& flags) {
    cmd->add_option("--family", flags.family,
                    "Family name: complete, path, cycle, wheel, star, complete-bipartite, "
                    "complete-multipartite");
    cmd->add_option("--n", flags.n, "Vertex count for sized families");
    cmd->add_option("--parts", flags.parts, "Part sizes for partite families, e.g. 2,3")
        ->delimiter(',');
}

void record_given(CLI::App* cmd, GraphFlags& flags, bool with_input) {
    if (with_input) flags.input_given = cmd->count("--input") > 0;
    flags.family_given = cmd->count("--family") > 0;
    flags.n_given = cmd->count("--n") > 0;
    flags.parts_given = cmd->count("--parts") > 0;
}

FamilySpec resolve_family(const GraphFlags& flags) {
    Family family = parse_family_name(flags.family);
    bool partite = family == Family::complete_bipartite || family == Family::complete_multipartite;
    if (partite) {
        if (!flags.parts_given) {
            throw std::invalid_argument("family '" + flags.family + "' requires --parts");
        }
        if (flags.n_given) {
            throw std::invalid_argument("family '" + flags.family + "' takes --parts, not --n");
        }
        FamilySpec spec = FamilySpec::partite(family, flags.parts);
        check_family_spec(spec);
        return spec;
    }
    if (!flags.n_given) {
        throw std::invalid_argument("family '" + flags.family + "' requires --n");
    }
    if (flags.parts_given) {
        throw std::invalid_argument("family '" + flags.family + "' takes --n, not --parts");
    }
    FamilySpec spec = FamilySpec::sized(family, flags.n);
    check_family_spec(spec);
    return spec;
}

// ---------------------------------------------------------------- stats ----

int run_stats(const GraphFlags& flags, const std::string& format) {
    Json arguments = flags.arguments_json();
    arguments["format"] = format;
    return run_guarded("stats", arguments, [&]() {
        if (flags.input_given == flags.family_given) {
            throw std::invalid_argument("stats requires exactly one of --input or --family");
        }
        Graph g = [&]() {
            if (flags.input_given) return read_graph_file(flags.input);
            return generate_family(resolve_family(flags));
        }();
        Json source = Json::object();
        if (flags.input_given) {
            source["path"] = flags.input;
        } else {
            source["family"] = resolve_family(flags).name();
        }
        ChromaticSummary summary = summarize(g, engine_options_from_env());
        Json results = stats_results(g, validate(g), summary, source);
        if (format == "csv") {
            std::cout << stats_csv(results);
        } else if (format == "text") {
            std::cout << stats_text(results);
        } else {
            std::cout << render_json(envelope("stats", arguments, results));
        }
        return kExitOk;
    });
}

// ------------------------------------------------------------------ gen ----

int run_gen(const GraphFlags& flags, const std::string& output, const std::string& format) {
    Json arguments = flags.arguments_json();
    arguments["output"] = output;
    arguments["format"] = format;
    return run_guarded("gen", arguments, [&]() {
        if (!flags.family_given) {
            throw std::invalid_argument("gen requires --family");
        }
        Graph g = generate_family(resolve_family(flags));
        std::string text = format == "edgelist" ? to_edge_list(g) : to_dimacs(g);
        if (output == "-") {
            std::cout << text;
        } else {
            std::ofstream out(output);
            if (!out) {
                throw std::invalid_argument("cannot open output file: " + output);
            }
            out << text;
            if (!out.good()) {
                throw std::invalid_argument("failed writing output file: " + output);
            }
        }
        return kExitOk;
    });
}

// --------------------------------------------------------------- verify ----

Json side_json(int chi, long long omega_min, long long omega_max) {
    Json side;
    side["chi"] = chi;
    side["omega_min"] = omega_min;
    side["omega_max"] = omega_max;
    return side;
}

Json multisets_json(const std::set<std::vector<int>>& multisets) {
    Json out = Json::array();
    for (const auto& sizes : multisets) out.push_back(sizes);
    return out;
}

Json verify_case(const std::string& name, const Graph& g, const EngineOptions& engine_options,
                 const OracleOptions& oracle_options, bool& match_out) {
    int chi = chromatic_number(g, engine_options);
    SumExtremeResult lo = min_sum_coloring(g, engine_options);
    SumExtremeResult hi = max_sum_coloring(g, engine_options);
    OracleSummary oracle = oracle_summary(g, oracle_options);
    bool values_match = chi == oracle.chi && lo.omega == oracle.omega_min &&
                        hi.omega == oracle.omega_max;
    bool multisets_match = lo.optimal_size_multisets == oracle.optimal_size_multisets_min &&
                           hi.optimal_size_multisets == oracle.optimal_size_multisets_max;
    match_out = values_match && multisets_match;

    Json c;
    c["name"] = name;
    c["vertices"] = g.vertex_count();
    c["edges"] = g.edge_count();
    c["engine"] = side_json(chi, lo.omega, hi.omega);
    c["oracle"] = side_json(oracle.chi, oracle.omega_min, oracle.omega_max);
    c["class_size_multisets_match"] = multisets_match;
    if (!multisets_match) {
        c["engine_multisets_min"] = multisets_json(lo.optimal_size_multisets);
        c["oracle_multisets_min"] = multisets_json(oracle.optimal_size_multisets_min);
        c["engine_multisets_max"] = multisets_json(hi.optimal_size_multisets);
        c["oracle_multisets_max"] = multisets_json(oracle.optimal_size_multisets_max);
    }
    c["match"] = match_out;
    return c;
}

int run_verify(int max_n, int trials, std::uint64_t seed, int oracle_cap,
               const std::string& format) {
    Json arguments;
    arguments["max_n"] = max_n;
    arguments["trials"] = trials;
    arguments["seed"] = seed;
    arguments["oracle_cap"] = oracle_cap;
    arguments["format"] = format;
    return run_guarded("verify", arguments, [&]() {
        if (max_n < 1) throw std::invalid_argument("--max-n must be at least 1");
        if (trials < 0) throw std::invalid_argument("--trials must be nonnegative");
        if (max_n > oracle_cap) {
            throw std::invalid_argument("--max-n (" + std::to_string(max_n) +
                                        ") exceeds the oracle cap (" +
                                        std::to_string(oracle_cap) + ")");
        }
        EngineOptions engine_options = engine_options_from_env();
        OracleOptions oracle_options;
        oracle_options.max_vertices = oracle_cap;

        Json cases = Json::array();
        long long mismatches = 0;
        auto add_case = [&](const std::string& name, const Graph& g) {
            bool match = false;
            cases.push_back(verify_case(name, g, engine_options, oracle_options, match));
            if (!match) ++mismatches;
        };

        for (Family family :
             {Family::complete, Family::path, Family::cycle, Family::wheel, Family::star,
              Family::complete_bipartite, Family::complete_multipartite}) {
            for (const FamilySpec& spec : family_sweep(family, max_n)) {
                add_case(spec.name(), generate_family(spec));
            }
        }
        // Random connected graphs: per size, `trials` seeds sweeping the
        // extra-edge probability through {1/6 .. 5/6}.
        for (int n = 2; n <= max_n; ++n) {
            for (int t = 0; t < trials; ++t) {
                std::uint64_t stream =
                    (static_cast<std::uint64_t>(n) << 32) | static_cast<std::uint64_t>(t);
                std::uint64_t case_seed = mix_seed(seed, stream);
                std::uint64_t num = static_cast<std::uint64_t>(t % 5) + 1;
                Graph g = random_connected_graph(n, case_seed, num, 6);
                add_case("random(n=" + std::to_string(n) + ",trial=" + std::to_string(t) + ")",
                         g);
            }
        }

        Json results;
        results["parameters"] = arguments;
        results["cases"] = cases;
        Json totals;
        totals["cases"] = cases.size();
        totals["mismatches"] = mismatches;
        results["totals"] = totals;

        if (format == "text") {
            std::cout << verify_text(results);
        } else {
            std::cout << render_json(envelope("verify", arguments, results));
        }
        return mismatches == 0 ? kExitOk : kExitMismatch;
    });
}

// --------------------------------------------------------------- report ----

int run_report(const std::vector<std::string>& families, int n_max, int ordering_max_n,
               const std::string& format) {
    Json arguments;
    arguments["families"] = families;
    arguments["n_max"] = n_max;
    arguments["ordering_max_n"] = ordering_max_n;
    arguments["format"] = format;
    return run_guarded("report", arguments, [&]() {
        if (n_max < 1) throw std::invalid_argument("--n-max must be at least 1");
        std::vector<FamilySpec> instances;
        for (const std::string& name : families) {
            Family family = parse_family_name(name);
            for (const FamilySpec& spec : family_sweep(family, n_max)) {
                instances.push_back(spec);
            }
        }
        ReportOptions options;
        options.engine = engine_options_from_env();
        options.ordering_check_max_n = ordering_max_n;
        DiscrepancyReport report = discrepancy_report(instances, options);
        Json results = report_results(report, arguments);
        if (format == "csv") {
            std::cout << report_csv(results);
        } else if (format == "text") {
            std::cout << report_text(results);
        } else {
            std::cout << render_json(envelope("report", arguments, results));
        }
        return kExitOk;
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chromastat: exact chromatic mean and variance statistics"};
    app.require_subcommand(1);

    GraphFlags stats_flags;
    std::string stats_format = "json";
    CLI::App* stats_cmd =
        app.add_subcommand("stats", "Chi and chi+ statistics of one graph");
    stats_cmd->add_option("--input", stats_flags.input,
                          "Graph file, DIMACS .col or edge list (auto-detected)");
    add_family_flags(stats_cmd, stats_flags);
    stats_cmd->add_option("--format", stats_format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    GraphFlags gen_flags;
    std::string gen_output = "-";
    std::string gen_format = "dimacs";
    CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a family instance");
    add_family_flags(gen_cmd, gen_flags);
    gen_cmd->add_option("-o,--output", gen_output, "Output path ('-' for stdout)");
    gen_cmd->add_option("--format", gen_format, "Graph file format")
        ->check(CLI::IsMember({"dimacs", "edgelist"}));

    int verify_max_n = 8;
    int verify_trials = 20;
    std::uint64_t verify_seed = 1;
    int verify_oracle_cap = 10;
    std::string verify_format = "json";
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "Engine-vs-oracle equivalence sweep");
    verify_cmd->add_option("--max-n", verify_max_n, "Largest instance size (<= oracle cap)");
    verify_cmd->add_option("--trials", verify_trials, "Random graphs per size");
    verify_cmd->add_option("--seed", verify_seed, "Base seed for random graphs");
    verify_cmd->add_option("--oracle-cap", verify_oracle_cap, "Oracle vertex cap");
    verify_cmd->add_option("--format", verify_format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));

    std::vector<std::string> report_families = {
        "complete", "path", "cycle", "wheel", "star", "complete-bipartite",
        "complete-multipartite"};
    int report_n_max = 10;
    int report_ordering_max_n = 8;
    std::string report_format = "json";
    CLI::App* report_cmd =
        app.add_subcommand("report", "Errata report: engine vs derived vs published formulas");
    report_cmd->add_option("--families", report_families, "Families to include")
        ->delimiter(',');
    report_cmd->add_option("--n-max", report_n_max, "Largest vertex count per family");
    report_cmd->add_option("--ordering-max-n", report_ordering_max_n,
                           "Largest size for exhaustive labeling-order checks");
    report_cmd->add_option("--format", report_format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    if (stats_cmd->parsed()) {
        record_given(stats_cmd, stats_flags, /*with_input=*/true);
        return run_stats(stats_flags, stats_format);
    }
    if (gen_cmd->parsed()) {
        record_given(gen_cmd, gen_flags, /*with_input=*/false);
        return run_gen(gen_flags, gen_output, gen_format);
    }
    if (verify_cmd->parsed()) {
        return run_verify(verify_max_n, verify_trials, verify_seed, verify_oracle_cap,
                          verify_format);
    }
    if (report_cmd->parsed()) {
        return run_report(report_families, report_n_max, report_ordering_max_n, report_format);
    }
    return kExitInput;
}
