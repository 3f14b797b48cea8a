#include "gltc/instance.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace gltc {

namespace {

template <typename T>
void normalize(std::vector<T> &values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
}

std::string edge_name(const Edge &e) { return std::to_string(e.first + 1) + "-" + std::to_string(e.second + 1); }

} // namespace

Graph::Graph(int n) : adjacency_(static_cast<std::size_t>(n)) {
    if (n < 0)
        throw std::invalid_argument("negative vertex count");
}

Graph::Graph(int n, std::vector<Edge> edges) : Graph(n) {
    for (auto &e : edges) {
        if (e.first == e.second)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(e.first + 1));
        if (e.first < 0 || e.second < 0 || e.first >= n || e.second >= n)
            throw std::invalid_argument("edge endpoint out of range");
        e = make_edge(e.first, e.second);
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
        throw std::invalid_argument("duplicate edge " + edge_name(*dup));
    edges_ = std::move(edges);
    for (int id = 0; id < static_cast<int>(edges_.size()); ++id) {
        adjacency_[edges_[id].first].push_back({edges_[id].second, id});
        adjacency_[edges_[id].second].push_back({edges_[id].first, id});
    }
    for (auto &list : adjacency_)
        std::sort(list.begin(), list.end(), [](const Neighbor &a, const Neighbor &b) { return a.vertex < b.vertex; });
}

int Graph::max_degree() const {
    int best = 0;
    for (const auto &list : adjacency_)
        best = std::max(best, static_cast<int>(list.size()));
    return best;
}

std::optional<int> Graph::edge_id(int u, int v) const {
    const auto &list = adjacency_[u];
    auto it = std::lower_bound(list.begin(), list.end(), v, [](const Neighbor &a, int x) { return a.vertex < x; });
    if (it == list.end() || it->vertex != v)
        return std::nullopt;
    return it->edge;
}

Graph Graph::induced(const std::vector<int> &vertices) const {
    std::vector<int> position(adjacency_.size(), -1);
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
        position[vertices[i]] = i;
    std::vector<Edge> edges;
    for (const auto &e : edges_)
        if (position[e.first] >= 0 && position[e.second] >= 0)
            edges.push_back(make_edge(position[e.first], position[e.second]));
    return Graph(static_cast<int>(vertices.size()), std::move(edges));
}

Instance::Instance(Graph graph, std::vector<LabelSet> lists, std::vector<DiffSet> diffs)
    : graph_(std::move(graph)), lists_(std::move(lists)), diffs_(std::move(diffs)) {
    if (static_cast<int>(lists_.size()) != graph_.vertex_count())
        throw std::invalid_argument("label list count does not match vertex count");
    if (diffs_.size() != graph_.edge_count())
        throw std::invalid_argument("difference set count does not match edge count");
    for (int v = 0; v < graph_.vertex_count(); ++v) {
        normalize(lists_[v]);
        if (!lists_[v].empty() && lists_[v].front() < 1)
            throw std::invalid_argument("vertex " + std::to_string(v + 1) + ": labels must be >= 1");
    }
    for (std::size_t id = 0; id < diffs_.size(); ++id) {
        normalize(diffs_[id]);
        const auto name = edge_name(graph_.edges()[id]);
        if (!diffs_[id].empty() && diffs_[id].front() < 0)
            throw std::invalid_argument("edge " + name + ": negative difference");
        if (diffs_[id].empty() || diffs_[id].front() != 0)
            throw std::invalid_argument("edge " + name + ": 0 not in difference set");
    }
}

const DiffSet &Instance::forbidden(int u, int v) const {
    auto id = graph_.edge_id(u, v);
    if (!id)
        throw std::out_of_range("no edge " + edge_name(make_edge(u, v)));
    return diffs_[*id];
}

bool Instance::permits(int v, int label) const { return std::binary_search(lists_[v].begin(), lists_[v].end(), label); }

bool Instance::forbids(int edge, int difference) const {
    return std::binary_search(diffs_[edge].begin(), diffs_[edge].end(), difference);
}

Instance Instance::relabel(const std::vector<int> &order) const {
    if (static_cast<int>(order.size()) != vertex_count())
        throw std::invalid_argument("relabel: order is not a permutation");
    return induced(order);
}

Instance Instance::induced(const std::vector<int> &vertices) const {
    Graph sub = graph_.induced(vertices);
    std::vector<LabelSet> lists;
    lists.reserve(vertices.size());
    for (int v : vertices)
        lists.push_back(lists_[v]);
    std::vector<DiffSet> diffs;
    diffs.reserve(sub.edge_count());
    for (const auto &e : sub.edges())
        diffs.push_back(forbidden(vertices[e.first], vertices[e.second]));
    return Instance(std::move(sub), std::move(lists), std::move(diffs));
}

InstanceStats validate(const Instance &inst) {
    InstanceStats stats;
    for (const auto &diffs : inst.all_diffs())
        stats.tau = std::max(stats.tau, diffs.back());
    for (int v = 0; v < inst.vertex_count(); ++v) {
        const auto &labels = inst.labels(v);
        if (labels.empty())
            stats.empty_list_vertices.push_back(v);
        else
            stats.lambda_max = std::max(stats.lambda_max, labels.back());
    }
    stats.connected = component_vertices(inst.graph()).size() <= 1;
    return stats;
}

std::vector<std::vector<int>> component_vertices(const Graph &g) {
    const int n = g.vertex_count();
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> components;
    for (int root = 0; root < n; ++root) {
        if (seen[root])
            continue;
        std::vector<int> members{root};
        seen[root] = 1;
        for (std::size_t head = 0; head < members.size(); ++head)
            for (const auto &nb : g.neighbors(members[head]))
                if (!seen[nb.vertex]) {
                    seen[nb.vertex] = 1;
                    members.push_back(nb.vertex);
                }
        std::sort(members.begin(), members.end());
        components.push_back(std::move(members));
    }
    return components;
}

std::vector<Component> connected_components(const Instance &inst) {
    std::vector<Component> result;
    for (auto &vertices : component_vertices(inst.graph()))
        result.push_back({inst.induced(vertices), std::move(vertices)});
    return result;
}

LabelCompression compress_gaps(const Instance &inst) {
    const int tau = validate(inst).tau;
    std::vector<int> used;
    for (const auto &labels : inst.lists())
        used.insert(used.end(), labels.begin(), labels.end());
    normalize(used);

    // compressed[i] is the new value of used[i]
    std::vector<int> compressed(used.size());
    for (std::size_t i = 0; i < used.size(); ++i)
        compressed[i] = i == 0 ? 1 : compressed[i - 1] + std::min(used[i] - used[i - 1], tau + 1);

    LabelCompression result;
    result.original.assign(static_cast<std::size_t>(used.empty() ? 1 : compressed.back() + 1), 0);
    for (std::size_t i = 0; i < used.size(); ++i)
        result.original[compressed[i]] = used[i];

    std::vector<LabelSet> lists = inst.lists();
    for (auto &labels : lists)
        for (auto &label : labels)
            label = compressed[std::lower_bound(used.begin(), used.end(), label) - used.begin()];
    result.instance = Instance(inst.graph(), std::move(lists), inst.all_diffs());
    return result;
}

Graph graph_square(const Graph &g) {
    std::vector<Edge> edges;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> reach;
        for (const auto &a : g.neighbors(v)) {
            reach.push_back(a.vertex);
            for (const auto &b : g.neighbors(a.vertex))
                reach.push_back(b.vertex);
        }
        normalize(reach);
        for (int w : reach)
            if (w > v)
                edges.push_back({v, w});
    }
    return Graph(g.vertex_count(), std::move(edges));
}

namespace {

DiffSet interval(int width) {
    DiffSet diffs(static_cast<std::size_t>(width));
    for (int i = 0; i < width; ++i)
        diffs[i] = i;
    return diffs;
}

} // namespace

Instance reduce_list_coloring(const Graph &g, std::vector<LabelSet> lists) {
    return Instance(g, std::move(lists), std::vector<DiffSet>(g.edge_count(), DiffSet{0}));
}

Instance reduce_lpq(const Graph &g, int p, int q, std::vector<LabelSet> lists) {
    if (q < 1 || p < q)
        throw std::invalid_argument("L(p,q)-labeling requires p >= q >= 1");
    Graph square = graph_square(g);
    std::vector<DiffSet> diffs;
    for (const auto &e : square.edges())
        diffs.push_back(interval(g.adjacent(e.first, e.second) ? p : q));
    return Instance(std::move(square), std::move(lists), std::move(diffs));
}

Instance reduce_channel(const Graph &g, const std::vector<int> &weights, std::vector<LabelSet> lists) {
    if (weights.size() != g.edge_count())
        throw std::invalid_argument("channel assignment needs one weight per edge");
    std::vector<DiffSet> diffs;
    for (int w : weights) {
        if (w < 1)
            throw std::invalid_argument("channel assignment weights must be >= 1");
        diffs.push_back(interval(w));
    }
    return Instance(g, std::move(lists), std::move(diffs));
}

Instance reduce_tcoloring(const Graph &g, DiffSet T, std::vector<LabelSet> lists) {
    normalize(T);
    if (T.empty() || T.front() != 0)
        throw std::invalid_argument("T-coloring set must contain 0");
    return Instance(g, std::move(lists), std::vector<DiffSet>(g.edge_count(), T));
}

} // namespace gltc
