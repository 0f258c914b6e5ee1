#include "markovrank/graph.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include "markovrank/errors.hpp"

namespace mrank {

std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    return labels;
}

AdjacencyMatrix::AdjacencyMatrix(Matrix entries, std::vector<std::string> labels)
    : entries_(std::move(entries)), labels_(std::move(labels)) {
    if (entries_.rows() == 0) throw InputError("adjacency matrix has no nodes");
    if (!entries_.square())
        throw InputError("adjacency matrix is not square (" + std::to_string(entries_.rows()) + "x" +
                         std::to_string(entries_.cols()) + ")");
    for (double v : entries_.data()) {
        if (!std::isfinite(v)) throw InputError("adjacency matrix has a non-finite entry");
        if (v < 0.0) throw InputError("adjacency matrix has a negative entry");
    }
    if (labels_.empty()) labels_ = default_labels(n());
    if (labels_.size() != n())
        throw InputError("expected " + std::to_string(n()) + " labels, got " + std::to_string(labels_.size()));
    std::unordered_set<std::string> seen;
    for (const auto& l : labels_)
        if (!seen.insert(l).second) throw InputError("duplicate node label '" + l + "'");
}

DegreeVector degrees(const AdjacencyMatrix& a, DegreeKind kind) {
    return {kind == DegreeKind::out ? a.entries().row_sums() : a.entries().col_sums(), kind};
}

AdjacencyMatrix patch_zero_rows(const AdjacencyMatrix& a) {
    Matrix m = a.entries();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto r = m.row(i);
        if (std::all_of(r.begin(), r.end(), [](double v) { return v == 0.0; }))
            std::fill(r.begin(), r.end(), 1.0);
    }
    return AdjacencyMatrix(std::move(m), a.labels());
}

AdjacencyMatrix load_edge_list(std::span<const Edge> edges, const std::optional<std::vector<std::string>>& roster) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, std::size_t> index;

    if (roster) {
        labels = *roster;
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (!index.emplace(labels[i], i).second) throw InputError("duplicate roster label '" + labels[i] + "'");
    }

    auto lookup = [&](const std::string& label) -> std::size_t {
        if (label.empty()) throw InputError("edge with an empty label");
        if (auto it = index.find(label); it != index.end()) return it->second;
        if (roster) throw InputError("edge label '" + label + "' is not in the roster");
        index.emplace(label, labels.size());
        labels.push_back(label);
        return labels.size() - 1;
    };

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(edges.size());
    for (const auto& [from, to] : edges) {
        const std::size_t i = lookup(from);
        const std::size_t j = lookup(to);
        pairs.emplace_back(i, j);
    }
    if (labels.empty()) throw InputError("edge list has no nodes");

    Matrix m(labels.size(), labels.size());
    for (auto [i, j] : pairs) m(i, j) = 1.0;
    return AdjacencyMatrix(std::move(m), std::move(labels));
}

}  // namespace mrank
