#include "markovrank/experiments.hpp"

#include <charconv>
#include <optional>

#include "markovrank/errors.hpp"

namespace mrank {
namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

template <typename T>
T parse_or_throw(std::string_view token, std::string_view what) {
    token = trim(token);
    T value{};
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
        throw InputError("block spec: bad " + std::string(what) + " '" + std::string(token) + "'");
    return value;
}

void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw InputError("probability must lie in [0, 1]");
}

ScoreVector rank_family(RankKind kind, const AdjacencyMatrix& a, double parameter, const RankOptions& options) {
    return kind == RankKind::pagerank ? pagerank(a, parameter, options) : markovrank(a, parameter, options);
}

void sweep_family(RankKind kind, const AdjacencyMatrix& a, const std::vector<double>& grid, double baseline_value,
                  const SweepOptions& options, std::vector<SweepRecord>& records) {
    std::optional<ScoreVector> baseline;
    try {
        baseline = rank_family(kind, a, baseline_value, options.rank);
    } catch (const std::exception&) {
        baseline.reset();
    }

    for (double parameter : grid) {
        SweepRecord rec;
        rec.kind = kind;
        rec.parameter = parameter;
        rec.baseline = baseline_value;
        rec.baseline_failed = !baseline;
        try {
            const auto scores = rank_family(kind, a, parameter, options.rank);
            rec.warning = scores.degenerate;
            for (double s : scores.values)
                if (s <= ScoreVector::degenerate_threshold) ++rec.near_zero_count;
            if (baseline) {
                rec.agreement = agreement_count(scores, *baseline, options.tie_tolerance);
                rec.point_finer_baseline = is_finer(scores, *baseline, options.tie_tolerance);
                rec.baseline_finer_point = is_finer(*baseline, scores, options.tie_tolerance);
                rec.identical = rec.point_finer_baseline && rec.baseline_finer_point;
            }
        } catch (const MultiplicityError& e) {
            rec.failed = true;
            rec.multiplicity_failure = true;
            rec.error = e.what();
        } catch (const std::exception& e) {
            rec.failed = true;
            rec.error = e.what();
        }
        records.push_back(std::move(rec));
    }
}

}  // namespace

AdjacencyMatrix gen_er(std::size_t n, double p, std::uint64_t seed) {
    BlockSpec spec;
    spec.grid = {{BlockCell{n, n, p}}};
    spec.zero_diagonal = true;
    spec.seed = seed;
    return gen_block(spec);
}

BlockSpec parse_block_spec(std::string_view text, std::uint64_t seed, bool zero_diagonal) {
    BlockSpec spec;
    spec.seed = seed;
    spec.zero_diagonal = zero_diagonal;
    for (auto row_text : split(text, ';')) {
        if (trim(row_text).empty()) continue;
        std::vector<BlockCell> row;
        for (auto cell_text : split(row_text, ',')) {
            cell_text = trim(cell_text);
            const auto at = cell_text.find('@');
            const auto x = cell_text.find('x');
            if (at == std::string_view::npos || x == std::string_view::npos || x > at)
                throw InputError("block spec: cell '" + std::string(cell_text) + "' is not of the form RxC@p");
            BlockCell cell;
            cell.rows = parse_or_throw<std::size_t>(cell_text.substr(0, x), "row count");
            cell.cols = parse_or_throw<std::size_t>(cell_text.substr(x + 1, at - x - 1), "column count");
            cell.density = parse_or_throw<double>(cell_text.substr(at + 1), "density");
            if (!(cell.density >= 0.0 && cell.density <= 1.0))
                throw InputError("block spec: density of '" + std::string(cell_text) + "' is outside [0, 1]");
            row.push_back(cell);
        }
        spec.grid.push_back(std::move(row));
    }
    if (spec.grid.empty()) throw InputError("block spec is empty");
    return spec;
}

AdjacencyMatrix gen_block(const BlockSpec& spec) {
    if (spec.grid.empty() || spec.grid.front().empty()) throw InputError("block spec is empty");
    const std::size_t grid_cols = spec.grid.front().size();
    std::vector<std::size_t> widths;
    for (const auto& c : spec.grid.front()) widths.push_back(c.cols);

    // Row/column offsets of each block and the density lookup per global cell.
    std::vector<std::size_t> row_block;
    for (std::size_t b = 0; b < spec.grid.size(); ++b) {
        const auto& row = spec.grid[b];
        if (row.size() != grid_cols) throw InputError("block spec: grid rows have different cell counts");
        const std::size_t height = row.front().rows;
        for (std::size_t c = 0; c < grid_cols; ++c) {
            if (row[c].rows != height) throw InputError("block spec: cells in one grid row differ in height");
            if (row[c].cols != widths[c]) throw InputError("block spec: cells in one grid column differ in width");
            check_probability(row[c].density);
        }
        row_block.insert(row_block.end(), height, b);
    }
    std::vector<std::size_t> col_block;
    for (std::size_t c = 0; c < grid_cols; ++c) col_block.insert(col_block.end(), widths[c], c);
    if (row_block.size() != col_block.size())
        throw InputError("block spec does not tile a square layout (" + std::to_string(row_block.size()) + "x" +
                         std::to_string(col_block.size()) + ")");
    const std::size_t n = row_block.size();
    if (n == 0) throw InputError("block spec has no nodes");

    SplitMix64 rng(spec.seed);
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const bool edge = rng.bernoulli(spec.grid[row_block[i]][col_block[j]].density);
            if (edge && !(spec.zero_diagonal && i == j)) m(i, j) = 1.0;
        }
    return AdjacencyMatrix(std::move(m));
}

BlockSpec e2_layout(std::size_t n1, std::size_t n2, double p, std::uint64_t seed) {
    BlockSpec spec;
    spec.grid = {{{n1, n1, p}, {n1, n2, 0.0}}, {{n2, n1, p}, {n2, n2, p}}};
    spec.seed = seed;
    return spec;
}

BlockSpec e3_layout(std::size_t n1, std::size_t n2, double p, std::uint64_t seed) {
    BlockSpec spec;
    spec.grid = {{{n1, n1, p}, {n1, n1, 0.0}, {n1, n2, 0.0}},
                 {{n1, n1, 0.0}, {n1, n1, p}, {n1, n2, 0.0}},
                 {{n2, n1, p}, {n2, n1, p}, {n2, n2, p}}};
    spec.seed = seed;
    return spec;
}

SweepReport invariance_sweep(const AdjacencyMatrix& a, const std::vector<double>& alphas,
                             const std::vector<double>& epsilons, const SweepOptions& options) {
    for (double alpha : alphas)
        if (!(alpha > 0.0 && alpha <= 1.0)) throw InputError("alpha grid value outside (0, 1]");
    for (double eps : epsilons)
        if (!(eps >= 0.0 && eps <= 1.0)) throw InputError("epsilon grid value outside [0, 1]");

    SweepReport report;
    report.n = a.n();
    report.alphas = alphas;
    report.epsilons = epsilons;
    report.alpha_baseline = options.alpha_baseline;
    report.epsilon_baseline = options.epsilon_baseline;
    report.tie_tolerance = options.tie_tolerance;
    sweep_family(RankKind::pagerank, a, alphas, options.alpha_baseline, options, report.records);
    sweep_family(RankKind::markovrank, a, epsilons, options.epsilon_baseline, options, report.records);
    return report;
}

std::string_view to_string(RankKind kind) noexcept {
    return kind == RankKind::pagerank ? "pagerank" : "markovrank";
}

}  // namespace mrank
