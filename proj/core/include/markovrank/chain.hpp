#pragma once

#include <cstddef>
#include <optional>

#include "markovrank/graph.hpp"
#include "markovrank/matrix.hpp"

namespace mrank {

/// How a transition matrix was produced.
struct Provenance {
    enum class Kind { plain, patched, damped, augmented };
    Kind kind = Kind::plain;
    double parameter = 0.0;  ///< alpha for damped, epsilon for augmented
};

/// Column-stochastic matrix: entries >= 0 and every column sums to 1.
/// Column j holds the outgoing probabilities of state j, so it acts on
/// probability column vectors as x_k = M x_{k-1}.
class TransitionMatrix {
public:
    static constexpr double column_tolerance = 1e-12;

    /// Throws InputError if `m` is not square and column-stochastic.
    explicit TransitionMatrix(Matrix m, Provenance provenance = {});

    std::size_t dim() const noexcept { return m_.rows(); }
    const Matrix& matrix() const noexcept { return m_; }
    const Provenance& provenance() const noexcept { return provenance_; }
    double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

private:
    Matrix m_;
    Provenance provenance_;
};

/// (n+1)x(n+1) adjacency extended by one absorbing-back "teleport" node.
///   top-left block   = base
///   last column i<n  = (eps/2) * rowsum_i(base) / total(base)
///   last row         = (1, ..., 1, 0)
class AugmentedAdjacency {
public:
    AugmentedAdjacency(const AdjacencyMatrix& base, double epsilon);

    std::size_t n() const noexcept { return entries_.rows() - 1; }
    double epsilon() const noexcept { return epsilon_; }
    const Matrix& entries() const noexcept { return entries_; }

private:
    Matrix entries_;
    double epsilon_;
};

/// M~ = A~^T B~^{-1}. Every row of `patched` must have a positive sum.
TransitionMatrix transition_from_patched(const AdjacencyMatrix& patched);

/// M~ = A^T B^- + (1/n) 1 (I - B B^-), with B^- the diagonal Moore-Penrose inverse.
TransitionMatrix transition_generalized_inverse(const AdjacencyMatrix& a);

/// alpha M + ((1 - alpha)/n) 1, alpha in (0, 1].
TransitionMatrix damped_transition(const TransitionMatrix& m, double alpha);

/// Builds the augmented adjacency; `patched` must have positive row sums, epsilon in [0, 1].
AugmentedAdjacency augment_adjacency(const AdjacencyMatrix& patched, double epsilon);

/// (A^eps)^T (B^eps)^{-1} for the augmented adjacency.
TransitionMatrix transition_from_augmented(const AugmentedAdjacency& augmented);

struct Regularity {
    bool regular = false;
    std::optional<std::size_t> witness;  ///< smallest k with M^k > 0 entrywise
};

/// Wielandt bound m^2 - 2m + 2.
std::size_t wielandt_bound(std::size_t m);

/// Searches k = 1..k_max (default: Wielandt bound) for an entrywise positive power.
/// Works on the zero pattern only, so underflow cannot hide positivity.
Regularity is_regular(const TransitionMatrix& m, std::optional<std::size_t> k_max = std::nullopt);

}  // namespace mrank
