#include "markovrank/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "markovrank/errors.hpp"

namespace mrank {
namespace {

std::string_view trim(std::string_view s) {
    const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> lines_of(std::string_view text) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        out.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return out;
}

std::optional<double> parse_number(std::string_view token) {
    token = trim(token);
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    if (token.empty()) return std::nullopt;
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
    return v;
}

std::vector<std::string> split_grid_row(std::string_view line) {
    if (line.find(',') != std::string_view::npos) {
        auto fields = split_csv_line(line);
        for (auto& f : fields) f = std::string(trim(f));
        return fields;
    }
    std::vector<std::string> fields;
    std::istringstream in{std::string(line)};
    for (std::string tok; in >> tok;) fields.push_back(tok);
    return fields;
}

std::size_t column_index(const std::vector<std::string>& header, std::string_view name) {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (trim(header[i]) == name) return i;
    throw InputError("CSV header has no column named '" + std::string(name) + "'");
}

}  // namespace

std::vector<std::string> split_csv_line(std::string_view line) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (quoted) throw InputError("unterminated quoted CSV field");
    fields.push_back(std::move(cur));
    return fields;
}

AdjacencyMatrix load_dense_matrix(std::string_view text, std::optional<std::vector<std::string>> labels) {
    std::vector<std::vector<double>> rows;
    std::vector<std::string> header;
    bool first = true;
    std::size_t line_no = 0;
    for (auto line : lines_of(text)) {
        ++line_no;
        line = trim(line);
        if (line.empty()) continue;
        auto fields = split_grid_row(line);
        std::vector<double> values;
        values.reserve(fields.size());
        bool numeric = true;
        for (const auto& f : fields) {
            auto v = parse_number(f);
            if (!v) {
                numeric = false;
                break;
            }
            values.push_back(*v);
        }
        if (!numeric) {
            if (!first) throw InputError("non-numeric entry on line " + std::to_string(line_no));
            header = std::move(fields);
        } else {
            rows.push_back(std::move(values));
        }
        first = false;
    }
    if (rows.empty()) throw InputError("dense matrix has no rows");
    Matrix m = Matrix::from_rows(rows);
    if (!m.square())
        throw InputError("dense matrix is not square (" + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ")");
    if (labels) return AdjacencyMatrix(std::move(m), std::move(*labels));
    return AdjacencyMatrix(std::move(m), std::move(header));
}

std::vector<Edge> read_edge_csv(std::string_view text, const EdgeColumns& columns) {
    std::vector<Edge> edges;
    std::optional<std::pair<std::size_t, std::size_t>> cols;
    std::size_t line_no = 0;
    for (auto line : lines_of(text)) {
        ++line_no;
        if (trim(line).empty()) continue;
        auto fields = split_csv_line(line);
        if (!cols) {
            cols.emplace(column_index(fields, columns.from), column_index(fields, columns.to));
            continue;
        }
        const std::size_t need = std::max(cols->first, cols->second);
        if (fields.size() <= need) throw InputError("edge list line " + std::to_string(line_no) + " is too short");
        std::string from(trim(fields[cols->first]));
        std::string to(trim(fields[cols->second]));
        if (from.empty() || to.empty())
            throw InputError("edge list line " + std::to_string(line_no) + " has an empty label");
        edges.emplace_back(std::move(from), std::move(to));
    }
    if (!cols) throw InputError("edge list is empty (missing header)");
    return edges;
}

std::vector<std::string> read_roster_csv(std::string_view text, std::string_view column) {
    std::vector<std::string> roster;
    std::optional<std::size_t> col;
    std::size_t line_no = 0;
    for (auto line : lines_of(text)) {
        ++line_no;
        if (trim(line).empty()) continue;
        auto fields = split_csv_line(line);
        if (!col) {
            col = column_index(fields, column);
            continue;
        }
        if (fields.size() <= *col) throw InputError("roster line " + std::to_string(line_no) + " is too short");
        std::string name(trim(fields[*col]));
        if (name.empty()) throw InputError("roster line " + std::to_string(line_no) + " has an empty name");
        roster.push_back(std::move(name));
    }
    if (roster.empty()) throw InputError("roster has no entries");
    return roster;
}

void write_dense_matrix(std::ostream& out, const AdjacencyMatrix& a) {
    char buf[32];
    for (std::size_t i = 0; i < a.n(); ++i) {
        for (std::size_t j = 0; j < a.n(); ++j) {
            const double v = a(i, j);
            if (v == std::floor(v) && std::abs(v) < 1e15)
                std::snprintf(buf, sizeof buf, "%.0f", v);
            else
                std::snprintf(buf, sizeof buf, "%.17g", v);
            if (j) out << ',';
            out << buf;
        }
        out << '\n';
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace mrank
