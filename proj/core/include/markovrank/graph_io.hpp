#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "markovrank/graph.hpp"

namespace mrank {

/// Splits one CSV record. Handles double-quoted fields with "" escapes.
std::vector<std::string> split_csv_line(std::string_view line);

/// Parses a comma- or whitespace-separated numeric grid. A non-numeric first
/// row is taken as a header of node labels. Explicit labels override it.
AdjacencyMatrix load_dense_matrix(std::string_view text,
                                  std::optional<std::vector<std::string>> labels = std::nullopt);

struct EdgeColumns {
    std::string from = "following";
    std::string to = "followed";
};

/// Reads an edge-list CSV with a header naming the follower/followed columns.
std::vector<Edge> read_edge_csv(std::string_view text, const EdgeColumns& columns = {});

/// Reads the node order from a roster CSV's `column` (default `screen_name`).
std::vector<std::string> read_roster_csv(std::string_view text, std::string_view column = "screen_name");

/// Headerless dense CSV; integral entries are written without a decimal point.
void write_dense_matrix(std::ostream& out, const AdjacencyMatrix& a);

std::string read_file(const std::string& path);

}  // namespace mrank
