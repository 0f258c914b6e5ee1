#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "markovrank/eigenrank.hpp"

namespace mrank {

inline constexpr double default_tie_tolerance = 1e-9;

/// Ascending average-tie ranks (smallest score gets rank 1), as R's rank().
struct RankStatistic {
    std::vector<double> ranks;
    double tie_tolerance = default_tie_tolerance;

    friend bool operator==(const RankStatistic& a, const RankStatistic& b) { return a.ranks == b.ranks; }
};

/// Ties are the transitive closure of |v_i - v_j| <= tie_tol over sorted values.
RankStatistic rank_statistic(std::span<const double> values, double tie_tol = default_tie_tolerance);
RankStatistic rank_statistic(const ScoreVector& v, double tie_tol = default_tie_tolerance);

/// True iff rank(x)_i <= rank(x)_j implies rank(y)_i <= rank(y)_j for all i, j.
bool is_finer(std::span<const double> x, std::span<const double> y, double tie_tol = default_tie_tolerance);
bool is_finer(const ScoreVector& x, const ScoreVector& y, double tie_tol = default_tie_tolerance);

/// Each is finer than the other; same as equal rank statistics.
bool is_identical_rank(std::span<const double> x, std::span<const double> y,
                       double tie_tol = default_tie_tolerance);
bool is_identical_rank(const ScoreVector& x, const ScoreVector& y, double tie_tol = default_tie_tolerance);

/// Positions whose ranks coincide exactly.
std::size_t agreement_count(std::span<const double> x, std::span<const double> y,
                            double tie_tol = default_tie_tolerance);
std::size_t agreement_count(const ScoreVector& x, const ScoreVector& y, double tie_tol = default_tie_tolerance);

}  // namespace mrank
