#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>

#include "markovrank/markovrank.hpp"

namespace mrank::cli {
namespace {

std::string fmt10(double v) {
    if (v == 0.0) v = 0.0;  // drop the sign of -0
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

struct InputOptions {
    std::string path;
    std::string format = "dense";
    std::string roster;
    std::string from_col = "following";
    std::string to_col = "followed";
    std::string roster_col = "screen_name";
};

struct RankFlags {
    std::string method = "exact";
    double tol = 1e-6;
    std::size_t max_iter = 1'000'000;
    double eigen_tol = default_eigen_tolerance;
    std::string out = "csv";
    double tie_tol = default_tie_tolerance;
};

void add_input_options(CLI::App& cmd, InputOptions& in) {
    cmd.add_option("input", in.path, "Network file")->required();
    cmd.add_option("--format", in.format, "Input format")->check(CLI::IsMember({"dense", "edgelist"}));
    cmd.add_option("--roster", in.roster, "Roster CSV fixing node set and order (edge lists only)");
    cmd.add_option("--from-col", in.from_col, "Edge-list follower column");
    cmd.add_option("--to-col", in.to_col, "Edge-list followed column");
    cmd.add_option("--roster-col", in.roster_col, "Roster name column");
}

void add_rank_flags(CLI::App& cmd, RankFlags& f) {
    cmd.add_option("--method", f.method, "exact (eigenvector) or power (iteration)")
        ->check(CLI::IsMember({"exact", "power"}));
    cmd.add_option("--tol", f.tol, "Power iteration tolerance")->check(CLI::PositiveNumber);
    cmd.add_option("--max-iter", f.max_iter, "Power iteration limit")->check(CLI::PositiveNumber);
    cmd.add_option("--eigen-tol", f.eigen_tol, "Eigenvalue-1 detection threshold")->check(CLI::PositiveNumber);
    cmd.add_option("--out", f.out, "Output format")->check(CLI::IsMember({"csv", "json"}));
    cmd.add_option("--tie-tol", f.tie_tol, "Tie tolerance for ranks");
}

AdjacencyMatrix load_network(const InputOptions& in) {
    const std::string text = read_file(in.path);
    if (in.format == "dense") {
        if (!in.roster.empty()) throw InputError("--roster applies to edge lists only");
        return load_dense_matrix(text);
    }
    const auto edges = read_edge_csv(text, {in.from_col, in.to_col});
    std::optional<std::vector<std::string>> roster;
    if (!in.roster.empty()) roster = read_roster_csv(read_file(in.roster), in.roster_col);
    return load_edge_list(edges, roster);
}

RankOptions rank_options(const RankFlags& f) {
    RankOptions o;
    o.method = f.method == "power" ? Method::power : Method::exact;
    o.power.tolerance = f.tol;
    o.power.max_iterations = f.max_iter;
    o.eigen_tolerance = f.eigen_tol;
    return o;
}

void print_scores(std::ostream& out, const ScoreVector& s, const RankFlags& f) {
    const auto ranks = rank_statistic(s, f.tie_tol).ranks;
    if (f.out == "json") {
        auto arr = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < s.size(); ++i) {
            nlohmann::ordered_json rec;
            rec["label"] = s.labels[i];
            rec["score"] = std::stod(fmt10(s.values[i]));
            rec["rank"] = ranks[i];
            arr.push_back(std::move(rec));
        }
        out << arr.dump(2) << '\n';
        return;
    }
    out << "label,score,rank\n";
    for (std::size_t i = 0; i < s.size(); ++i) {
        const auto& label = s.labels[i];
        const bool quote = label.find_first_of(",\"") != std::string::npos;
        if (quote) {
            out << '"';
            for (char c : label) out << (c == '"' ? "\"\"" : std::string(1, c));
            out << '"';
        } else {
            out << label;
        }
        out << ',' << fmt10(s.values[i]) << ',' << fmt10(ranks[i]) << '\n';
    }
}

void warn_if_degenerate(std::ostream& err, const ScoreVector& s) {
    if (s.degenerate)
        err << "WARN: degenerate scores (some score <= 1e-12 or negative); values are numerically unstable\n";
}

// Score CSV with `label` and `score` columns.
ScoreVector read_scores(const std::string& path) {
    const std::string text = read_file(path);
    ScoreVector s;
    std::optional<std::pair<std::size_t, std::size_t>> cols;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        std::string_view line(text.data() + start, end - start);
        start = end + 1;
        if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
        const auto fields = split_csv_line(line);
        if (!cols) {
            std::optional<std::size_t> l, v;
            for (std::size_t i = 0; i < fields.size(); ++i) {
                if (fields[i] == "label") l = i;
                if (fields[i] == "score") v = i;
            }
            if (!l || !v) throw InputError(path + ": score file needs 'label' and 'score' columns");
            cols.emplace(*l, *v);
            continue;
        }
        if (fields.size() <= std::max(cols->first, cols->second)) throw InputError(path + ": short line");
        s.labels.push_back(fields[cols->first]);
        try {
            std::size_t used = 0;
            s.values.push_back(std::stod(fields[cols->second], &used));
        } catch (const std::exception&) {
            throw InputError(path + ": bad score '" + fields[cols->second] + "'");
        }
    }
    if (s.values.empty()) throw InputError(path + ": no scores");
    return s;
}

// Reorders `b` into `a`'s label order.
ScoreVector align(const ScoreVector& a, const ScoreVector& b) {
    if (a.size() != b.size()) throw InputError("score files have different label sets");
    std::map<std::string, double> by_label;
    for (std::size_t i = 0; i < b.size(); ++i)
        if (!by_label.emplace(b.labels[i], b.values[i]).second)
            throw InputError("duplicate label '" + b.labels[i] + "' in score file");
    ScoreVector out;
    out.labels = a.labels;
    for (const auto& l : a.labels) {
        auto it = by_label.find(l);
        if (it == by_label.end()) throw InputError("label '" + l + "' missing from second score file");
        out.values.push_back(it->second);
    }
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"PageRank and MarkovRank for directed networks"};
    app.require_subcommand(1);

    InputOptions pr_in, mr_in, sw_in;
    RankFlags pr_flags, mr_flags, sw_flags;
    double alpha = 0.85;
    double epsilon = 1.0;

    auto* pr = app.add_subcommand("pagerank", "alpha-PageRank of a network");
    add_input_options(*pr, pr_in);
    add_rank_flags(*pr, pr_flags);
    pr->add_option("--alpha", alpha, "Damping constant in (0, 1]");

    auto* mr = app.add_subcommand("markovrank", "epsilon-MarkovRank of a network");
    add_input_options(*mr, mr_in);
    add_rank_flags(*mr, mr_flags);
    mr->add_option("--epsilon", epsilon, "Augmentation constant in [0, 1]");

    std::string file_a, file_b, compare_out = "text";
    double compare_tie = default_tie_tolerance;
    auto* cmp = app.add_subcommand("compare", "Compare the rank statistics of two score files");
    cmp->add_option("file_a", file_a, "First score CSV")->required();
    cmp->add_option("file_b", file_b, "Second score CSV")->required();
    cmp->add_option("--tie-tol", compare_tie, "Tie tolerance");
    cmp->add_option("--out", compare_out, "Output format")->check(CLI::IsMember({"text", "json"}));

    std::string model = "er", blocks, gen_out = "-";
    std::size_t gen_n = 0;
    double gen_p = 0.1;
    std::uint64_t seed = 0;
    bool keep_diagonal = false;
    auto* gen = app.add_subcommand("gen", "Generate a random adjacency matrix as dense CSV");
    gen->add_option("--model", model, "er or block")->check(CLI::IsMember({"er", "block"}));
    gen->add_option("--n", gen_n, "Node count (er)");
    gen->add_option("--p", gen_p, "Edge probability (er)")->check(CLI::Range(0.0, 1.0));
    gen->add_option("--seed", seed, "SplitMix64 seed");
    gen->add_option("--blocks", blocks, "Block grid, e.g. 80x80@0.1,80x20@0;20x80@0.1,20x20@0.1");
    gen->add_flag("--keep-diagonal", keep_diagonal, "Allow self-loops");
    gen->add_option("--out", gen_out, "Output path ('-' for stdout)");

    std::vector<double> alphas{0.8, 0.84, 0.85, 0.86, 0.9, 0.95, 0.99, 1.0};
    std::vector<double> epsilons{0.0, 1e-12, 0.1, 0.5, 1.0};
    auto* sweep = app.add_subcommand("sweep", "Rank-agreement sweep over alpha and epsilon grids");
    add_input_options(*sweep, sw_in);
    sw_flags.out = "json";
    add_rank_flags(*sweep, sw_flags);
    sweep->get_option("--out")->check(CLI::IsMember({"csv", "json"}));
    sweep->add_option("--alphas", alphas, "Comma-separated alpha grid")->delimiter(',');
    sweep->add_option("--epsilons", epsilons, "Comma-separated epsilon grid")->delimiter(',');

    std::vector<std::string> argv_tail(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(argv_tail.begin(), argv_tail.end());
    try {
        app.parse(argv_tail);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }

    try {
        if (pr->parsed()) {
            const auto scores = pagerank(load_network(pr_in), alpha, rank_options(pr_flags));
            warn_if_degenerate(err, scores);
            print_scores(out, scores, pr_flags);
        } else if (mr->parsed()) {
            const auto scores = markovrank(load_network(mr_in), epsilon, rank_options(mr_flags));
            warn_if_degenerate(err, scores);
            print_scores(out, scores, mr_flags);
        } else if (cmp->parsed()) {
            const auto a = read_scores(file_a);
            const auto b = align(a, read_scores(file_b));
            const auto agreement = agreement_count(a, b, compare_tie);
            const bool a_finer_b = is_finer(a, b, compare_tie);
            const bool b_finer_a = is_finer(b, a, compare_tie);
            if (compare_out == "json") {
                nlohmann::ordered_json j;
                j["n"] = a.size();
                j["agreement"] = agreement;
                j["identical"] = a_finer_b && b_finer_a;
                j["a_finer_b"] = a_finer_b;
                j["b_finer_a"] = b_finer_a;
                out << j.dump(2) << '\n';
            } else {
                const auto flag = [](bool v) { return v ? "true" : "false"; };
                out << "n: " << a.size() << '\n'
                    << "agreement: " << agreement << '\n'
                    << "identical: " << flag(a_finer_b && b_finer_a) << '\n'
                    << "a_finer_b: " << flag(a_finer_b) << '\n'
                    << "b_finer_a: " << flag(b_finer_a) << '\n';
            }
        } else if (gen->parsed()) {
            AdjacencyMatrix a = [&] {
                if (model == "er") {
                    if (gen_n == 0) throw InputError("--n must be positive for the er model");
                    return gen_block({{{BlockCell{gen_n, gen_n, gen_p}}}, !keep_diagonal, seed});
                }
                if (blocks.empty()) throw InputError("--blocks is required for the block model");
                return gen_block(parse_block_spec(blocks, seed, !keep_diagonal));
            }();
            if (gen_out == "-") {
                write_dense_matrix(out, a);
            } else {
                std::ofstream file(gen_out);
                if (!file) throw InputError("cannot write '" + gen_out + "'");
                write_dense_matrix(file, a);
            }
        } else if (sweep->parsed()) {
            SweepOptions options;
            options.rank = rank_options(sw_flags);
            options.tie_tolerance = sw_flags.tie_tol;
            const auto report = invariance_sweep(load_network(sw_in), alphas, epsilons, options);
            out << (sw_flags.out == "csv" ? to_csv(report) : to_json(report));
        }
    } catch (const MultiplicityError& e) {
        err << "error: " << e.what() << '\n';
        return multiplicity;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }
    return ok;
}

}  // namespace mrank::cli
