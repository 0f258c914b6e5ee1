#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "markovrank/eigenrank.hpp"
#include "markovrank/graph.hpp"
#include "markovrank/rank_stats.hpp"

namespace mrank {

/// SplitMix64 (Steele, Lea & Flood 2014). 64-bit state, one output per call;
/// split() derives an independent stream from the next output.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) from the top 53 bits.
    double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) noexcept { return uniform() < p; }

    SplitMix64 split() noexcept { return SplitMix64(next()); }

private:
    std::uint64_t state_;
};

/// Erdos-Renyi digraph: every off-diagonal cell is 1 with probability p.
/// One draw per cell in row-major order (diagonal draws are discarded).
AdjacencyMatrix gen_er(std::size_t n, double p, std::uint64_t seed);

struct BlockCell {
    std::size_t rows = 0;
    std::size_t cols = 0;
    double density = 0.0;
};

/// Grid of Bernoulli blocks. Every cell in a grid row shares its height, every
/// cell in a grid column shares its width, and the total layout is square.
struct BlockSpec {
    std::vector<std::vector<BlockCell>> grid;
    bool zero_diagonal = true;
    std::uint64_t seed = 0;
};

/// Parses "80x80@0.1,80x20@0;20x80@0.1,20x20@0.1" (';' between grid rows).
BlockSpec parse_block_spec(std::string_view text, std::uint64_t seed = 0, bool zero_diagonal = true);

/// One draw per cell of the assembled matrix in row-major order, so a
/// single-cell spec reproduces gen_er with the same seed.
AdjacencyMatrix gen_block(const BlockSpec& spec);

/// Example (E2) layout of size n1 + n2 with the upper-right n1 x n2 block zero.
BlockSpec e2_layout(std::size_t n1, std::size_t n2, double p, std::uint64_t seed);

/// Example (E3) layout: two isolated n1-blocks and an n2-block linking into both.
BlockSpec e3_layout(std::size_t n1, std::size_t n2, double p, std::uint64_t seed);

enum class RankKind { pagerank, markovrank };

/// Comparison of one grid point against the family's baseline.
struct SweepRecord {
    RankKind kind = RankKind::pagerank;
    double parameter = 0.0;
    double baseline = 0.0;
    bool multiplicity_failure = false;  ///< this grid point's eigenvalue 1 is not simple
    bool failed = false;                ///< this grid point could not be ranked
    bool baseline_failed = false;       ///< the baseline could not be ranked; no comparison
    std::string error;
    bool warning = false;               ///< degenerate scores at this grid point
    std::size_t near_zero_count = 0;    ///< scores <= 1e-12
    std::size_t agreement = 0;
    bool identical = false;
    bool point_finer_baseline = false;
    bool baseline_finer_point = false;
};

struct SweepReport {
    std::size_t n = 0;
    std::vector<double> alphas;
    std::vector<double> epsilons;
    double alpha_baseline = 0.85;
    double epsilon_baseline = 1.0;
    double tie_tolerance = default_tie_tolerance;
    std::vector<SweepRecord> records;  ///< alphas first, then epsilons, in grid order
};

struct SweepOptions {
    RankOptions rank{};
    double tie_tolerance = default_tie_tolerance;
    double alpha_baseline = 0.85;
    double epsilon_baseline = 1.0;
};

/// PageRank over `alphas` vs the alpha baseline and MarkovRank over `epsilons`
/// vs the epsilon baseline. Failures are recorded, never thrown.
SweepReport invariance_sweep(const AdjacencyMatrix& a, const std::vector<double>& alphas,
                             const std::vector<double>& epsilons, const SweepOptions& options = {});

std::string to_json(const SweepReport& report);
std::string to_csv(const SweepReport& report);

std::string_view to_string(RankKind kind) noexcept;

}  // namespace mrank
