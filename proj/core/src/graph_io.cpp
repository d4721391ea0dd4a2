#include "locol/graph_io.hpp"

#include <cerrno>
#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>
#include <vector>

#include "locol/error.hpp"

namespace locol {
namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) fields.push_back(line.substr(i, j - i));
        i = j;
    }
    return fields;
}

int parse_int(std::string_view field, std::size_t line_no) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw ParseError(line_no, "expected an integer, got '" + std::string(field) + "'");
    }
    return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
    int order = -1;
    std::vector<Edge> edges;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        auto fields = split_fields(line);
        if (fields.empty() || fields[0].front() == '#') {
            if (end == text.size()) break;
            continue;
        }
        if (fields[0] == "n") {
            if (order >= 0) throw ParseError(line_no, "duplicate 'n' line");
            if (fields.size() != 2) throw ParseError(line_no, "expected 'n <order>'");
            order = parse_int(fields[1], line_no);
            if (order < 0) throw ParseError(line_no, "negative order");
        } else if (fields[0] == "e") {
            if (order < 0) throw ParseError(line_no, "edge before 'n' line");
            if (fields.size() != 3) throw ParseError(line_no, "expected 'e <u> <v>'");
            const int u = parse_int(fields[1], line_no);
            const int v = parse_int(fields[2], line_no);
            if (u < 0 || v < 0 || u >= order || v >= order) {
                throw ParseError(line_no, "endpoint out of range [0," + std::to_string(order) + ")");
            }
            if (u == v) throw ParseError(line_no, "loop at vertex " + std::to_string(u));
            edges.emplace_back(u, v);
        } else {
            throw ParseError(line_no, "unknown record '" + std::string(fields[0]) + "'");
        }
        if (end == text.size()) break;
    }
    if (order < 0) throw ParseError(line_no, "missing 'n <order>' line");
    return make_graph(order, edges);
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.order() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
    return out.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::system_error(errno, std::generic_category(), "cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::system_error(errno, std::generic_category(), "cannot write " + path);
    out << text;
    if (!out) throw std::system_error(errno, std::generic_category(), "write failed for " + path);
}

Graph read_graph_file(const std::string& path) { return parse_graph(read_text_file(path)); }

}  // namespace locol
