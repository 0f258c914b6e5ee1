#include "markovrank/rank_stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "markovrank/errors.hpp"

namespace mrank {
namespace {

void check_lengths(std::size_t a, std::size_t b) {
    if (a != b) throw InputError("score vectors differ in length (" + std::to_string(a) + " vs " + std::to_string(b) + ")");
}

}  // namespace

RankStatistic rank_statistic(std::span<const double> values, double tie_tol) {
    if (!(tie_tol >= 0.0) || !std::isfinite(tie_tol)) throw InputError("tie tolerance must be finite and non-negative");
    for (double v : values)
        if (!std::isfinite(v)) throw InputError("cannot rank a non-finite score");
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return values[i] < values[j]; });

    RankStatistic out{std::vector<double>(n), tie_tol};
    // Chaining neighbours in sorted order gives the transitive closure of the tie relation.
    std::size_t start = 0;
    while (start < n) {
        std::size_t end = start + 1;
        while (end < n && values[order[end]] - values[order[end - 1]] <= tie_tol) ++end;
        // positions start+1 .. end share their mean
        const double rank = 0.5 * static_cast<double>(start + 1 + end);
        for (std::size_t k = start; k < end; ++k) out.ranks[order[k]] = rank;
        start = end;
    }
    return out;
}

RankStatistic rank_statistic(const ScoreVector& v, double tie_tol) { return rank_statistic(v.values, tie_tol); }

bool is_finer(std::span<const double> x, std::span<const double> y, double tie_tol) {
    check_lengths(x.size(), y.size());
    const auto rx = rank_statistic(x, tie_tol).ranks;
    const auto ry = rank_statistic(y, tie_tol).ranks;
    std::vector<std::size_t> order(x.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return rx[i] < rx[j]; });

    // Sorted by rank(x): each x-tie group must be a single y value, and the y
    // values must be non-decreasing from group to group.
    for (std::size_t k = 1; k < order.size(); ++k) {
        const std::size_t prev = order[k - 1];
        const std::size_t cur = order[k];
        if (rx[prev] == rx[cur]) {
            if (ry[prev] != ry[cur]) return false;
        } else if (ry[prev] > ry[cur]) {
            return false;
        }
    }
    return true;
}

bool is_finer(const ScoreVector& x, const ScoreVector& y, double tie_tol) { return is_finer(x.values, y.values, tie_tol); }

bool is_identical_rank(std::span<const double> x, std::span<const double> y, double tie_tol) {
    return is_finer(x, y, tie_tol) && is_finer(y, x, tie_tol);
}

bool is_identical_rank(const ScoreVector& x, const ScoreVector& y, double tie_tol) {
    return is_identical_rank(x.values, y.values, tie_tol);
}

std::size_t agreement_count(std::span<const double> x, std::span<const double> y, double tie_tol) {
    check_lengths(x.size(), y.size());
    const auto rx = rank_statistic(x, tie_tol).ranks;
    const auto ry = rank_statistic(y, tie_tol).ranks;
    std::size_t count = 0;
    for (std::size_t i = 0; i < rx.size(); ++i)
        if (rx[i] == ry[i]) ++count;
    return count;
}

std::size_t agreement_count(const ScoreVector& x, const ScoreVector& y, double tie_tol) {
    return agreement_count(x.values, y.values, tie_tol);
}

}  // namespace mrank
