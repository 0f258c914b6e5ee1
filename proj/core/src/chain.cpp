#include "markovrank/chain.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>

#include "markovrank/errors.hpp"

namespace mrank {

TransitionMatrix::TransitionMatrix(Matrix m, Provenance provenance)
    : m_(std::move(m)), provenance_(provenance) {
    if (m_.rows() == 0 || !m_.square()) throw InputError("transition matrix must be square and non-empty");
    for (double v : m_.data())
        if (!(v >= 0.0)) throw InputError("transition matrix has a negative or NaN entry");
    const auto sums = m_.col_sums();
    for (std::size_t j = 0; j < sums.size(); ++j)
        if (std::abs(sums[j] - 1.0) > column_tolerance)
            throw InputError("transition matrix column " + std::to_string(j + 1) + " sums to " +
                             std::to_string(sums[j]));
}

AugmentedAdjacency::AugmentedAdjacency(const AdjacencyMatrix& base, double epsilon) : epsilon_(epsilon) {
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw InputError("epsilon must lie in [0, 1]");
    const std::size_t n = base.n();
    const auto rows = base.entries().row_sums();
    for (double s : rows)
        if (!(s > 0.0)) throw InputError("augment_adjacency needs positive row sums; patch zero rows first");
    const double total = base.entries().total();

    entries_ = Matrix(n + 1, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        auto src = base.entries().row(i);
        std::copy(src.begin(), src.end(), entries_.row(i).begin());
        entries_(i, n) = 0.5 * epsilon * rows[i] / total;
        entries_(n, i) = 1.0;
    }
}

TransitionMatrix transition_from_patched(const AdjacencyMatrix& patched) {
    const std::size_t n = patched.n();
    const auto out = patched.entries().row_sums();
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(out[i] > 0.0))
            throw InputError("row " + std::to_string(i + 1) + " has zero out-degree; patch zero rows first");
        for (std::size_t j = 0; j < n; ++j) m(j, i) = patched(i, j) / out[i];
    }
    return TransitionMatrix(std::move(m), {Provenance::Kind::patched, 0.0});
}

TransitionMatrix transition_generalized_inverse(const AdjacencyMatrix& a) {
    const std::size_t n = a.n();
    const auto out = a.entries().row_sums();
    // Diagonal Moore-Penrose inverse of B = diag(out).
    std::vector<double> b_pinv(n);
    for (std::size_t i = 0; i < n; ++i) b_pinv[i] = out[i] != 0.0 ? 1.0 / out[i] : 0.0;

    Matrix m(n, n);
    const double inv_n = 1.0 / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) {
        // (I - B B^-)_{jj} is 1 exactly when out_j == 0.
        const double deficit = 1.0 - out[j] * b_pinv[j];
        for (std::size_t i = 0; i < n; ++i) m(i, j) = a(j, i) * b_pinv[j] + inv_n * deficit;
    }
    return TransitionMatrix(std::move(m), {Provenance::Kind::patched, 0.0});
}

TransitionMatrix damped_transition(const TransitionMatrix& m, double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw InputError("alpha must lie in (0, 1]");
    const std::size_t n = m.dim();
    const double teleport = (1.0 - alpha) / static_cast<double>(n);
    Matrix d(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) d(i, j) = alpha * m(i, j) + teleport;
    return TransitionMatrix(std::move(d), {Provenance::Kind::damped, alpha});
}

AugmentedAdjacency augment_adjacency(const AdjacencyMatrix& patched, double epsilon) {
    return AugmentedAdjacency(patched, epsilon);
}

TransitionMatrix transition_from_augmented(const AugmentedAdjacency& augmented) {
    const Matrix& a = augmented.entries();
    const std::size_t m = a.rows();
    const auto rows = a.row_sums();
    Matrix t(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        if (!(rows[i] > 0.0)) throw InputError("augmented adjacency has a zero row");
        for (std::size_t j = 0; j < m; ++j) t(j, i) = a(i, j) / rows[i];
    }
    return TransitionMatrix(std::move(t), {Provenance::Kind::augmented, augmented.epsilon()});
}

std::size_t wielandt_bound(std::size_t m) { return m * m - 2 * m + 2; }

namespace {

// Zero pattern of a square matrix as packed bit rows.
class Pattern {
public:
    explicit Pattern(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

    void set(std::size_t i, std::size_t j) { bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64); }
    bool get(std::size_t i, std::size_t j) const { return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U; }

    bool all_set() const {
        std::size_t count = 0;
        for (auto w : bits_) count += static_cast<std::size_t>(std::popcount(w));
        return count == n_ * n_;
    }

    // (this * rhs) pattern: row i is the union of rhs rows k with this(i,k) set.
    Pattern times(const Pattern& rhs) const {
        Pattern out(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            std::uint64_t* dst = &out.bits_[i * words_];
            for (std::size_t k = 0; k < n_; ++k) {
                if (!get(i, k)) continue;
                const std::uint64_t* src = &rhs.bits_[k * words_];
                for (std::size_t w = 0; w < words_; ++w) dst[w] |= src[w];
            }
        }
        return out;
    }

    const std::vector<std::uint64_t>& bits() const { return bits_; }

private:
    std::size_t n_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

}  // namespace

Regularity is_regular(const TransitionMatrix& m, std::optional<std::size_t> k_max) {
    const std::size_t n = m.dim();
    const std::size_t limit = k_max.value_or(wielandt_bound(n));

    Pattern base(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (m(i, j) > 0.0) base.set(i, j);

    // The pattern sequence of M^k is eventually periodic; a repeat without
    // positivity means no later power can be positive either. Brent-style
    // checkpoints find the repeat in O(1) extra memory.
    Pattern power = base;
    Pattern checkpoint = base;
    std::size_t checkpoint_k = 1;
    for (std::size_t k = 1; k <= limit; ++k) {
        if (power.all_set()) return {true, k};
        if (k > checkpoint_k && power.bits() == checkpoint.bits()) break;
        if (k == 2 * checkpoint_k) {
            checkpoint = power;
            checkpoint_k = k;
        }
        power = power.times(base);
    }
    return {false, std::nullopt};
}

}  // namespace mrank
