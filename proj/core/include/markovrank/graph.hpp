#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "markovrank/matrix.hpp"

namespace mrank {

/// Square non-negative adjacency matrix with unique node labels.
/// Entry (i, j) is the weight of the edge i -> j (node i follows node j).
class AdjacencyMatrix {
public:
    /// Validates shape, non-negativity and label uniqueness; throws InputError.
    /// Empty labels default to "1".."n".
    explicit AdjacencyMatrix(Matrix entries, std::vector<std::string> labels = {});

    std::size_t n() const noexcept { return entries_.rows(); }
    const Matrix& entries() const noexcept { return entries_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    double operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

    friend bool operator==(const AdjacencyMatrix&, const AdjacencyMatrix&) = default;

private:
    Matrix entries_;
    std::vector<std::string> labels_;
};

std::vector<std::string> default_labels(std::size_t n);

enum class DegreeKind { out, in };

struct DegreeVector {
    std::vector<double> values;
    DegreeKind kind = DegreeKind::out;
};

/// Row sums (out) or column sums (in).
DegreeVector degrees(const AdjacencyMatrix& a, DegreeKind kind);

/// Replaces every all-zero row by an all-ones row (diagonal included).
AdjacencyMatrix patch_zero_rows(const AdjacencyMatrix& a);

using Edge = std::pair<std::string, std::string>;

/// Builds a 0/1 adjacency matrix from (follower, followed) pairs.
/// With a roster the node set and order are fixed by it; otherwise nodes appear
/// in first-seen order. Duplicate edges collapse to 1.
AdjacencyMatrix load_edge_list(std::span<const Edge> edges,
                               const std::optional<std::vector<std::string>>& roster = std::nullopt);

}  // namespace mrank
