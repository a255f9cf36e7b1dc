#include "truemper/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace truemper {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

/// Whitespace-separated integers on one line; throws on anything else.
std::vector<long long> integers(std::string_view line, int line_no) {
    std::vector<long long> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        if (i == line.size()) break;
        long long value = 0;
        const char* begin = line.data() + i;
        const char* end = line.data() + line.size();
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc{} || (ptr != end && *ptr != ' ' && *ptr != '\t'))
            throw ParseError("line " + std::to_string(line_no) + ": expected integers");
        out.push_back(value);
        i += static_cast<std::size_t>(ptr - begin);
    }
    return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    long long n = -1, m = -1;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto values = integers(line, line_no);
        if (values.size() != 2) throw ParseError("line " + std::to_string(line_no) + ": expected two integers");
        if (n < 0) {
            n = values[0];
            m = values[1];
            if (n < 0 || m < 0) throw ParseError("line " + std::to_string(line_no) + ": negative header value");
            if (n > 1'000'000) throw ParseError("line " + std::to_string(line_no) + ": too many vertices");
            continue;
        }
        const long long u = values[0], v = values[1];
        const std::string where = "line " + std::to_string(line_no) + ": ";
        if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(where + "vertex out of range");
        if (u == v) throw ParseError(where + "self-loop");
        const Edge key{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
        if (!seen.insert(key).second) throw ParseError(where + "repeated edge");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (n < 0) throw ParseError("missing header line \"n m\"");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError("header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string render_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (const auto& [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

Graph parse_graph6(std::string_view line) {
    line = trim(line);
    if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
    if (line.empty()) throw ParseError("graph6: empty input");
    if (line.front() == ':' || line.front() == '&') throw ParseError("graph6: sparse6 and digraph6 are not supported");
    for (char ch : line)
        if (ch < 63 || ch > 126) throw ParseError("graph6: character outside 63..126");

    std::size_t pos = 0;
    auto take = [&] {
        if (pos >= line.size()) throw ParseError("graph6: truncated input");
        return static_cast<long long>(line[pos++] - 63);
    };
    long long n = take();
    if (n == 63) {
        n = take();
        if (n == 63) {
            n = 0;
            for (int i = 0; i < 6; ++i) n = n << 6 | take();
        } else {
            n = n << 12 | take() << 6;
            n |= take();
        }
    }
    if (n > 100'000) throw ParseError("graph6: too many vertices");

    const long long bits = n * (n - 1) / 2;
    const long long bytes = (bits + 5) / 6;
    if (static_cast<long long>(line.size() - pos) != bytes) throw ParseError("graph6: wrong length for " + std::to_string(n) + " vertices");
    std::vector<Edge> edges;
    long long k = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++k) {
            const int byte = line[pos + static_cast<std::size_t>(k / 6)] - 63;
            if (byte >> (5 - k % 6) & 1) edges.emplace_back(i, j);
        }
    for (; k < bytes * 6; ++k)
        if ((line[pos + static_cast<std::size_t>(k / 6)] - 63) >> (5 - k % 6) & 1) throw ParseError("graph6: nonzero padding");
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string render_graph6(const Graph& g) {
    const long long n = g.order();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(n + 63);
    } else if (n <= 258047) {
        out += static_cast<char>(126);
        for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>((n >> shift & 63) + 63);
    } else {
        out += static_cast<char>(126);
        out += static_cast<char>(126);
        for (int shift = 30; shift >= 0; shift -= 6) out += static_cast<char>((n >> shift & 63) + 63);
    }
    int acc = 0, filled = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            acc = acc << 1 | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out += static_cast<char>(acc + 63);
                acc = filled = 0;
            }
        }
    if (filled > 0) out += static_cast<char>((acc << (6 - filled)) + 63);
    return out;
}

std::vector<Graph> parse_graph6_lines(std::string_view text) {
    std::vector<Graph> out;
    std::size_t start = 0;
    int line_no = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++line_no;
        const auto line = trim(text.substr(start, end - start));
        if (!line.empty()) {
            try {
                out.push_back(parse_graph6(line));
            } catch (const ParseError& e) {
                throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
            }
        }
        start = end + 1;
    }
    if (out.empty()) throw ParseError("graph6: no graphs in input");
    return out;
}

std::vector<Graph> parse_graphs(std::string_view text, GraphFormat format) {
    if (format == GraphFormat::Graph6) return parse_graph6_lines(text);
    return {parse_edge_list(text)};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("error reading " + path);
    return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << contents;
    if (!out) throw IoError("error writing " + path);
}

}  // namespace truemper
