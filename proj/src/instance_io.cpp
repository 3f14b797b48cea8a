#include "gltc/instance.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace gltc {

ParseError::ParseError(int line, const std::string &message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

struct Line {
    int number;
    std::vector<std::string_view> tokens;
};

std::vector<std::string_view> split(std::string_view text) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != '\r')
            ++j;
        if (j > i)
            tokens.push_back(text.substr(i, j - i));
        i = j;
    }
    return tokens;
}

std::vector<Line> significant_lines(std::string_view text) {
    std::vector<Line> lines;
    int number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        ++number;
        auto tokens = split(text.substr(start, end - start));
        if (!tokens.empty() && tokens.front().front() != '#')
            lines.push_back({number, std::move(tokens)});
        start = end + 1;
    }
    return lines;
}

long long integer(const Line &line, std::string_view token) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError(line.number, "expected an integer, got '" + std::string(token) + "'");
    return value;
}

int vertex_id(const Line &line, std::string_view token, int n) {
    long long id = integer(line, token);
    if (id < 1 || id > n)
        throw ParseError(line.number, "vertex id " + std::string(token) + " out of range 1.." + std::to_string(n));
    return static_cast<int>(id - 1);
}

int bounded(const Line &line, std::string_view token, long long low, const char *what) {
    long long value = integer(line, token);
    if (value < low || value > 1'000'000'000)
        throw ParseError(line.number, std::string(what) + " " + std::string(token) + " out of range");
    return static_cast<int>(value);
}

} // namespace

Instance parse_instance(std::string_view text) {
    auto lines = significant_lines(text);
    if (lines.empty())
        throw ParseError(1, "empty document");
    const auto &header = lines.front();
    if (header.tokens.size() != 3 || header.tokens[0] != "gltc")
        throw ParseError(header.number, "expected header 'gltc <n> <m>'");
    const int n = bounded(header, header.tokens[1], 0, "vertex count");
    const int m = bounded(header, header.tokens[2], 0, "edge count");
    if (lines.size() != 1 + static_cast<std::size_t>(n) + static_cast<std::size_t>(m)) {
        int at = lines.back().number;
        throw ParseError(at, "expected " + std::to_string(n) + " vertex and " + std::to_string(m) + " edge lines, found " +
                                 std::to_string(lines.size() - 1) + " lines");
    }

    std::vector<LabelSet> lists(static_cast<std::size_t>(n));
    std::vector<char> declared(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        const auto &line = lines[i];
        if (line.tokens[0] != "v" || line.tokens.size() < 2)
            throw ParseError(line.number, "expected vertex line 'v <id> <label>...'");
        int v = vertex_id(line, line.tokens[1], n);
        if (declared[v])
            throw ParseError(line.number, "duplicate vertex " + std::string(line.tokens[1]));
        declared[v] = 1;
        for (std::size_t t = 2; t < line.tokens.size(); ++t)
            lists[v].push_back(bounded(line, line.tokens[t], 1, "label"));
    }

    std::vector<Edge> edges;
    std::vector<std::pair<Edge, DiffSet>> edge_diffs;
    for (int i = n + 1; i <= n + m; ++i) {
        const auto &line = lines[i];
        if (line.tokens[0] != "e" || line.tokens.size() < 3)
            throw ParseError(line.number, "expected edge line 'e <u> <v> <diff>...'");
        int u = vertex_id(line, line.tokens[1], n);
        int v = vertex_id(line, line.tokens[2], n);
        if (u == v)
            throw ParseError(line.number, "self-loop at vertex " + std::string(line.tokens[1]));
        DiffSet diffs;
        bool has_zero = false;
        for (std::size_t t = 3; t < line.tokens.size(); ++t) {
            diffs.push_back(bounded(line, line.tokens[t], 0, "difference"));
            has_zero = has_zero || diffs.back() == 0;
        }
        if (!has_zero)
            throw ParseError(line.number, "edge " + std::to_string(u + 1) + "-" + std::to_string(v + 1) +
                                              ": 0 not in difference set");
        edges.push_back(make_edge(u, v));
        edge_diffs.emplace_back(make_edge(u, v), std::move(diffs));
    }

    std::sort(edge_diffs.begin(), edge_diffs.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    for (std::size_t i = 1; i < edge_diffs.size(); ++i)
        if (edge_diffs[i].first == edge_diffs[i - 1].first) {
            // report the later of the two declarations
            const auto e = edge_diffs[i].first;
            for (int l = n + m; l > n; --l) {
                const auto &line = lines[l];
                if (make_edge(vertex_id(line, line.tokens[1], n), vertex_id(line, line.tokens[2], n)) == e)
                    throw ParseError(line.number, "duplicate edge " + std::to_string(e.first + 1) + "-" +
                                                      std::to_string(e.second + 1));
            }
        }

    Graph graph(n, std::move(edges));
    std::vector<DiffSet> diffs;
    diffs.reserve(edge_diffs.size());
    for (auto &[e, d] : edge_diffs)
        diffs.push_back(std::move(d));
    return Instance(std::move(graph), std::move(lists), std::move(diffs));
}

std::string serialize(const Instance &inst) {
    std::ostringstream out;
    out << "gltc " << inst.vertex_count() << ' ' << inst.graph().edge_count() << '\n';
    for (int v = 0; v < inst.vertex_count(); ++v) {
        out << "v " << v + 1;
        for (int label : inst.labels(v))
            out << ' ' << label;
        out << '\n';
    }
    const auto &edges = inst.graph().edges();
    for (std::size_t id = 0; id < edges.size(); ++id) {
        out << "e " << edges[id].first + 1 << ' ' << edges[id].second + 1;
        for (int d : inst.diffs(static_cast<int>(id)))
            out << ' ' << d;
        out << '\n';
    }
    return out.str();
}

} // namespace gltc
