#include "pcgen/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>

#include "pcgen/enumerate.hpp"
#include "pcgen/error_lab.hpp"
#include "pcgen/generators.hpp"
#include "pcgen/io.hpp"
#include "pcgen/matrix.hpp"
#include "pcgen/reconstruct.hpp"

namespace pcgen::cli {

namespace {

GeneratorSet load_generator_set(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw pcgen::ParseError(0, "cannot open input file '" + path + "'");
    return read_generator_set(in, n);
}

PrincipalGenerators load_pgs(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw pcgen::ParseError(0, "cannot open input file '" + path + "'");
    std::vector<double> values = read_positive_values(in);
    if (values.size() != static_cast<std::size_t>(n - 1)) {
        throw pcgen::ParseError(0, "expected " + std::to_string(n - 1) + " values in '" + path +
                                       "', got " + std::to_string(values.size()));
    }
    return PrincipalGenerators(n, std::move(values));
}

void write_csv_to(const PCMatrix& m, const std::string& output_path, std::ostream& out) {
    if (output_path.empty()) {
        write_matrix_csv(m, out);
        return;
    }
    std::ofstream file(output_path);
    if (!file) throw pcgen::ParseError(0, "cannot open output file '" + output_path + "'");
    write_matrix_csv(m, file);
}

std::string edge_set_line(const TreeEdgeSet& t) {
    std::string line;
    for (const auto& [u, v] : t.edges) {
        if (!line.empty()) line += ' ';
        line += std::to_string(u + 1) + "-" + std::to_string(v + 1);
    }
    return line;
}

struct ReconstructArgs {
    std::string input;
    int n = 0;
    std::string output;
    bool report = false;
};

int do_reconstruct(const ReconstructArgs& a, std::ostream& out, std::ostream& err) {
    const GeneratorSet b = load_generator_set(a.input, a.n);
    const ReconstructionResult result = reconstruct(b);
    write_csv_to(result.matrix, a.output, out);
    err << "n=" << a.n << " used=" << result.used_entries.size() << "/" << b.size()
        << " residual=" << format_double(result.residual) << '\n';
    if (a.report) {
        err << "used entries:\n";
        std::ostringstream text;
        write_generator_set(result.used_entries, text);
        err << text.str();
    }
    return kOk;
}

struct CheckArgs {
    std::string input;
    int n = 0;
};

int do_check(const CheckArgs& a, std::ostream& out, std::ostream&) {
    const GeneratorSet b = load_generator_set(a.input, a.n);
    const ComparisonGraph g = build_graph(b);
    if (is_tree(g)) {
        out << "tree\n";
    } else if (unreached_vertices(g).empty()) {
        out << "not a tree (cycle); spanning-connected\n";
    } else {
        out << "not-generating; unreached vertices:";
        for (int v : unreached_vertices(g)) out << ' ' << (v + 1);
        out << '\n';
    }
    return kOk;
}

struct HandicapArgs {
    std::string input;
    int n = 0;
};

int do_handicap(const HandicapArgs& a, std::ostream& out, std::ostream&) {
    const GeneratorSet b = load_generator_set(a.input, a.n);
    const HandicapReport report = total_handicap(b);
    out << "entity  frequency\n";
    for (int v = 0; v < a.n; ++v) {
        out << std::setw(6) << (v + 1) << "  " << std::setw(9)
            << report.frequencies[static_cast<std::size_t>(v)] << '\n';
    }
    out << "active " << report.active.size() << '\n';
    out << "max_frequency " << report.max_frequency << '\n';
    out << "total_handicap " << report.total << '\n';
    return kOk;
}

struct EnumerateArgs {
    int n = 0;
    std::string kind = "trees";
};

int do_enumerate(const EnumerateArgs& a, std::ostream& out, std::ostream&) {
    long long count = 0;
    if (a.kind == "trees") {
        SpanningTreeStream stream(a.n);
        while (auto tree = stream.next()) {
            out << edge_set_line(*tree) << '\n';
            ++count;
        }
    } else {
        HamiltonianPathStream stream(a.n);
        while (auto path = stream.next()) {
            out << edge_set_line(*path) << '\n';
            ++count;
        }
    }
    out << "count " << count << '\n';
    return kOk;
}

struct ClassifyArgs {
    int n = 0;
    int size = 0;
    bool list = false;
};

int do_classify(const ClassifyArgs& a, std::ostream& out, std::ostream&) {
    if (a.list) {
        classify_subsets(a.n, a.size,
                         [&out](const std::vector<std::pair<int, int>>& subset, SubsetClass cls,
                                bool) {
                             std::string line;
                             for (const auto& [u, v] : subset) {
                                 if (!line.empty()) line += ' ';
                                 line += std::to_string(u + 1) + "-" + std::to_string(v + 1);
                             }
                             out << line << " : " << to_string(cls) << '\n';
                         });
        return kOk;
    }
    const SubsetClassification c = classify_subsets(a.n, a.size);
    const auto row = [&out](const char* label, std::int64_t value) {
        out << std::left << std::setw(11) << label << std::right << std::setw(9) << value << '\n';
    };
    row("n", c.n);
    row("k", c.k);
    row("total", c.total);
    row("generating", c.generating);
    row("trees", c.trees);
    row("paths", c.paths);
    row("cycles", c.cycles);
    return kOk;
}

struct PerturbArgs {
    int n = 0;
    double epsilon = 0.0;
    std::string mode = "worst";
    std::uint64_t seed = 0;
    int trials = 1;
    std::string pgs_file;
    std::string output;
};

int do_perturb(const PerturbArgs& a, std::ostream& out, std::ostream& err) {
    PerturbationSpec spec;
    spec.epsilon = a.epsilon;
    spec.mode = a.mode == "worst" ? PerturbMode::WorstCase : PerturbMode::RandomUniform;
    spec.seed = a.seed;
    spec.trials = a.trials;
    validate(spec);

    const PrincipalGenerators pgs =
        a.pgs_file.empty() ? PrincipalGenerators::ones(a.n) : load_pgs(a.pgs_file, a.n);
    const ErrorReport report = propagate(pgs, spec);

    // error matrix as CSV, same row/column layout as the matrix itself
    std::ostringstream csv;
    for (int i = 0; i < report.n; ++i) {
        for (int j = 0; j < report.n; ++j) {
            if (j > 0) csv << ',';
            csv << format_double(report.at(i, j));
        }
        csv << '\n';
    }
    if (a.output.empty()) {
        out << csv.str();
    } else {
        std::ofstream file(a.output);
        if (!file) throw pcgen::ParseError(0, "cannot open output file '" + a.output + "'");
        file << csv.str();
    }

    const int effective_trials = spec.mode == PerturbMode::WorstCase ? 1 : spec.trials;
    err << "n=" << a.n << " epsilon=" << format_double(a.epsilon) << " mode=" << a.mode
        << " trials=" << effective_trials
        << " corner_error=" << format_double(report.corner_error) << " argmax=("
        << (report.argmax_row + 1) << "," << (report.argmax_col + 1) << ")\n";
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Pairwise-comparison matrices from minimal generator sets", "pcgen"};
    app.require_subcommand(1);

    ReconstructArgs rec;
    CLI::App* rec_cmd =
        app.add_subcommand("reconstruct", "Rebuild the full consistent matrix from a generator file");
    rec_cmd->add_option("--input", rec.input, "generator file, lines of 'i j value'")->required();
    rec_cmd->add_option("--n", rec.n, "matrix order")->required()->check(CLI::PositiveNumber);
    rec_cmd->add_option("--output", rec.output, "write the matrix CSV here instead of stdout");
    rec_cmd->add_flag("--report", rec.report, "also list the entries used for the solve");

    CheckArgs chk;
    CLI::App* chk_cmd =
        app.add_subcommand("check", "Classify a generator file: tree, spanning-connected, or not");
    chk_cmd->add_option("--input", chk.input, "generator file")->required();
    chk_cmd->add_option("--n", chk.n, "matrix order")->required()->check(CLI::PositiveNumber);

    HandicapArgs hand;
    CLI::App* hand_cmd =
        app.add_subcommand("handicap", "Per-entity frequencies and total handicap of a generator set");
    hand_cmd->add_option("--input", hand.input, "generator file")->required();
    hand_cmd->add_option("--n", hand.n, "matrix order")->required()->check(CLI::PositiveNumber);

    EnumerateArgs enu;
    CLI::App* enu_cmd =
        app.add_subcommand("enumerate", "Stream all minimal generator sets (or min-handicap ones)");
    enu_cmd->add_option("--n", enu.n, "matrix order (2..9)")->required();
    enu_cmd->add_option("--kind", enu.kind, "trees: every minimal set; paths: min-handicap sets")
        ->check(CLI::IsMember({"trees", "paths"}));

    ClassifyArgs cls;
    CLI::App* cls_cmd =
        app.add_subcommand("classify", "Exhaustively classify all k-subsets of the matrix entries");
    cls_cmd->add_option("--n", cls.n, "matrix order (<= 6)")->required();
    cls_cmd->add_option("--size", cls.size, "subset size k")->required();
    cls_cmd->add_flag("--list", cls.list, "one 'subset : class' line per subset instead of the table");

    PerturbArgs per;
    CLI::App* per_cmd =
        app.add_subcommand("perturb", "Propagate generator errors through the reconstruction");
    per_cmd->add_option("--n", per.n, "matrix order")->required()->check(CLI::PositiveNumber);
    per_cmd->add_option("--epsilon", per.epsilon, "relative error magnitude, 0 <= e < 1")
        ->required();
    per_cmd->add_option("--mode", per.mode, "worst: all generators scaled by 1+e; random: U[1-e,1+e]")
        ->check(CLI::IsMember({"worst", "random"}));
    per_cmd->add_option("--seed", per.seed, "random-mode seed");
    per_cmd->add_option("--trials", per.trials, "random-mode trial count");
    per_cmd->add_option("--pgs", per.pgs_file, "principal generators file (default: all ones)");
    per_cmd->add_option("--output", per.output, "write the error CSV here instead of stdout");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::Success& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsageError;
    }

    try {
        if (rec_cmd->parsed()) return do_reconstruct(rec, out, err);
        if (chk_cmd->parsed()) return do_check(chk, out, err);
        if (hand_cmd->parsed()) return do_handicap(hand, out, err);
        if (enu_cmd->parsed()) return do_enumerate(enu, out, err);
        if (cls_cmd->parsed()) return do_classify(cls, out, err);
        if (per_cmd->parsed()) return do_perturb(per, out, err);
    } catch (const pcgen::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    } catch (const NotGeneratingError& e) {
        err << e.what() << '\n';
        return kNotGenerating;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kGuardError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kGuardError;
    }
    return kUsageError;
}

}  // namespace pcgen::cli
