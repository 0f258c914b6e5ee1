#include "markovrank/eigenrank.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "markovrank/errors.hpp"

namespace mrank {
namespace {

std::size_t count_unit_eigenvalues(const Matrix& m, double tol) {
    const auto n = static_cast<Eigen::Index>(m.rows());
    Eigen::MatrixXd dense(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            dense(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    Eigen::EigenSolver<Eigen::MatrixXd> solver(dense, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) throw std::runtime_error("eigenvalue computation did not converge");
    const auto& values = solver.eigenvalues();
    std::size_t count = 0;
    for (Eigen::Index i = 0; i < values.size(); ++i)
        if (values[i].real() > 1.0 - tol) ++count;
    return count;
}

// Null vector of a rank m-1 matrix by Gaussian elimination with complete
// pivoting. The last pivot is treated as zero and its column becomes the
// free variable.
std::vector<double> null_vector(Matrix k) {
    const std::size_t m = k.rows();
    std::vector<std::size_t> col_of(m);
    std::iota(col_of.begin(), col_of.end(), std::size_t{0});

    std::size_t rank = 0;
    for (std::size_t step = 0; step + 1 < m; ++step) {
        std::size_t pr = step;
        std::size_t pc = step;
        double best = 0.0;
        for (std::size_t i = step; i < m; ++i)
            for (std::size_t j = step; j < m; ++j)
                if (std::abs(k(i, j)) > best) {
                    best = std::abs(k(i, j));
                    pr = i;
                    pc = j;
                }
        if (best == 0.0) break;
        if (pr != step) std::swap_ranges(k.row(pr).begin(), k.row(pr).end(), k.row(step).begin());
        if (pc != step) {
            for (std::size_t i = 0; i < m; ++i) std::swap(k(i, pc), k(i, step));
            std::swap(col_of[pc], col_of[step]);
        }
        const double pivot = k(step, step);
        for (std::size_t i = step + 1; i < m; ++i) {
            const double f = k(i, step) / pivot;
            if (f == 0.0) continue;
            k(i, step) = 0.0;
            for (std::size_t j = step + 1; j < m; ++j) k(i, j) -= f * k(step, j);
        }
        ++rank;
    }

    // Free variables beyond the first (rank < m-1) are set to zero; callers only
    // reach here with a simple eigenvalue.
    std::vector<double> y(m, 0.0);
    y[rank] = 1.0;
    for (std::size_t r = rank; r-- > 0;) {
        double acc = 0.0;
        for (std::size_t j = r + 1; j <= rank; ++j) acc += k(r, j) * y[j];
        y[r] = -acc / k(r, r);
    }
    std::vector<double> x(m, 0.0);
    for (std::size_t j = 0; j < m; ++j) x[col_of[j]] = y[j];
    return x;
}

bool any_degenerate(std::span<const double> v) {
    return std::any_of(v.begin(), v.end(), [](double s) { return s <= ScoreVector::degenerate_threshold; });
}

// Flips the sign so the leading `count` entries sum positive, then scales them to sum 1.
std::vector<double> normalize_leading(std::vector<double> v, std::size_t count) {
    double sum = 0.0;
    double scale = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        sum += v[i];
        scale = std::max(scale, std::abs(v[i]));
    }
    if (!(std::abs(sum) > 1e-14 * scale) || scale == 0.0) throw DegenerateEigenvector();
    v.resize(count);
    for (double& x : v) x /= sum;
    return v;
}

std::vector<std::string> labels_or_default(std::vector<std::string> labels, std::size_t n) {
    if (labels.empty()) return default_labels(n);
    if (labels.size() != n) throw InputError("label count does not match matrix dimension");
    return labels;
}

void check_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw InputError("alpha must lie in (0, 1]");
}

void check_epsilon(double epsilon) {
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw InputError("epsilon must lie in [0, 1]");
}

}  // namespace

EigenSpace eigenvalue_one_space(const TransitionMatrix& m, double tol) {
    if (!(tol > 0.0)) throw InputError("eigenvalue tolerance must be positive");
    EigenSpace space;
    space.tolerance_used = tol;
    space.multiplicity = count_unit_eigenvalues(m.matrix(), tol);
    if (space.multiplicity == 1) {
        Matrix k = m.matrix();
        for (std::size_t i = 0; i < k.rows(); ++i) k(i, i) -= 1.0;
        space.vector = null_vector(std::move(k));
    }
    return space;
}

ScoreVector stationary_power(const TransitionMatrix& m, const PowerIterConfig& cfg, std::vector<std::string> labels) {
    if (!(cfg.tolerance > 0.0)) throw InputError("power iteration tolerance must be positive");
    if (cfg.max_iterations == 0) throw InputError("max_iterations must be positive");
    const std::size_t n = m.dim();

    std::vector<double> x;
    if (cfg.initial) {
        x = *cfg.initial;
        if (x.size() != n) throw InputError("initial vector has the wrong length");
        const double s = std::accumulate(x.begin(), x.end(), 0.0);
        if (std::abs(s - 1.0) > 1e-9) throw InputError("initial vector must sum to 1");
    } else {
        x.assign(n, 1.0 / static_cast<double>(n));
    }

    double diff = 0.0;
    for (std::size_t it = 1; it <= cfg.max_iterations; ++it) {
        auto next = multiply(m.matrix(), x);
        diff = max_abs_diff(next, x);
        x = std::move(next);
        if (diff <= cfg.tolerance) {
            ScoreVector out;
            out.degenerate = any_degenerate(x);
            out.values = std::move(x);
            out.labels = labels_or_default(std::move(labels), n);
            out.iterations = it;
            return out;
        }
    }
    throw ConvergenceError(cfg.max_iterations, diff, std::move(x));
}

ScoreVector stationary_exact(const TransitionMatrix& m, std::vector<std::string> labels, double tol) {
    auto space = eigenvalue_one_space(m, tol);
    if (space.multiplicity != 1) throw MultiplicityError(space.multiplicity);
    ScoreVector out;
    out.values = normalize_leading(std::move(space.vector), m.dim());
    out.labels = labels_or_default(std::move(labels), m.dim());
    out.degenerate = any_degenerate(out.values);
    return out;
}

ScoreVector pagerank(const AdjacencyMatrix& a, double alpha, const RankOptions& options) {
    check_alpha(alpha);
    const auto damped = damped_transition(transition_from_patched(patch_zero_rows(a)), alpha);
    if (options.method == Method::power) return stationary_power(damped, options.power, a.labels());
    return stationary_exact(damped, a.labels(), options.eigen_tolerance);
}

ScoreVector markovrank(const AdjacencyMatrix& a, double epsilon, const RankOptions& options) {
    check_epsilon(epsilon);
    const std::size_t n = a.n();
    const auto chain = transition_from_augmented(augment_adjacency(patch_zero_rows(a), epsilon));

    ScoreVector out;
    if (options.method == Method::power) {
        auto full = stationary_power(chain, options.power);
        out.values = normalize_leading(std::move(full.values), n);
        out.iterations = full.iterations;
    } else {
        auto space = eigenvalue_one_space(chain, options.eigen_tolerance);
        if (space.multiplicity != 1) throw MultiplicityError(space.multiplicity);
        // The extra node's entry is dropped before normalizing.
        out.values = normalize_leading(std::move(space.vector), n);
    }
    out.labels = a.labels();
    out.degenerate = any_degenerate(out.values);
    return out;
}

}  // namespace mrank
