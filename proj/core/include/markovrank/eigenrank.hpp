#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "markovrank/chain.hpp"
#include "markovrank/graph.hpp"

namespace mrank {

/// Normalized scores over labelled nodes.
struct ScoreVector {
    std::vector<double> values;
    std::vector<std::string> labels;
    /// Set when some score is <= degenerate_threshold (including negative values).
    bool degenerate = false;
    /// Power iterations used; 0 for the exact method.
    std::size_t iterations = 0;

    static constexpr double degenerate_threshold = 1e-12;

    std::size_t size() const noexcept { return values.size(); }
};

/// Eigenvalue-1 eigenspace of a transition matrix.
struct EigenSpace {
    std::size_t multiplicity = 0;
    /// Real eigenvector, unnormalized; empty unless multiplicity == 1.
    std::vector<double> vector;
    double tolerance_used = 0.0;
};

struct PowerIterConfig {
    double tolerance = 1e-6;            ///< stop when max |x_k - x_{k-1}| <= tolerance
    std::size_t max_iterations = 1'000'000;
    std::optional<std::vector<double>> initial;  ///< uniform when empty
};

enum class Method { exact, power };

inline constexpr double default_eigen_tolerance = 1e-5;
inline constexpr double itr_tolerance = 1e-15;

/// Counts eigenvalues with real part above 1 - tol; when exactly one, also
/// returns a null vector of (M - I) computed by complete-pivoting elimination.
EigenSpace eigenvalue_one_space(const TransitionMatrix& m, double tol = default_eigen_tolerance);

/// Iterates x_k = M x_{k-1}. Labels default to "1".."m".
/// Throws ConvergenceError once max_iterations is exceeded.
ScoreVector stationary_power(const TransitionMatrix& m, const PowerIterConfig& cfg = {},
                             std::vector<std::string> labels = {});

/// Normalized eigenvalue-1 vector of `m` (exact route); throws MultiplicityError.
ScoreVector stationary_exact(const TransitionMatrix& m, std::vector<std::string> labels = {},
                             double tol = default_eigen_tolerance);

struct RankOptions {
    Method method = Method::exact;
    PowerIterConfig power{};
    double eigen_tolerance = default_eigen_tolerance;
};

/// alpha-PageRank: stationary vector of alpha M~ + ((1-alpha)/n) 1.
ScoreVector pagerank(const AdjacencyMatrix& a, double alpha, const RankOptions& options = {});

/// epsilon-MarkovRank: stationary vector of the augmented chain restricted to the
/// original n nodes and renormalized over them.
ScoreVector markovrank(const AdjacencyMatrix& a, double epsilon, const RankOptions& options = {});

}  // namespace mrank
