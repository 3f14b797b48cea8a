#ifndef GLTC_INSTANCE_HPP
#define GLTC_INSTANCE_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gltc {

/// Undirected edge between two vertex indices, stored with first < second.
struct Edge {
    int first = 0;
    int second = 0;

    friend auto operator<=>(const Edge &, const Edge &) = default;
};

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are kept in lexicographic order and numbered by that order, so an
/// edge id doubles as an index into per-edge data such as difference sets.
class Graph {
  public:
    struct Neighbor {
        int vertex;
        int edge;
    };

    Graph() = default;
    explicit Graph(int n);
    /// Throws std::invalid_argument on self-loops, duplicates or ids out of range.
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return static_cast<int>(adjacency_.size()); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge> &edges() const { return edges_; }
    const std::vector<Neighbor> &neighbors(int v) const { return adjacency_[v]; }
    int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
    int max_degree() const;

    bool adjacent(int u, int v) const { return edge_id(u, v).has_value(); }
    std::optional<int> edge_id(int u, int v) const;

    /// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
    Graph induced(const std::vector<int> &vertices) const;

    friend bool operator==(const Graph &a, const Graph &b) { return a.edges_ == b.edges_ && a.vertex_count() == b.vertex_count(); }

  private:
    std::vector<Edge> edges_;
    std::vector<std::vector<Neighbor>> adjacency_;
};

/// Sorted, duplicate-free list of positive labels.
using LabelSet = std::vector<int>;
/// Sorted, duplicate-free set of forbidden differences; always contains 0.
using DiffSet = std::vector<int>;

/// A generalized list T-coloring instance: graph, permitted labels per vertex,
/// forbidden differences per edge. Immutable once constructed.
class Instance {
  public:
    Instance() = default;
    /// `diffs` is indexed by the graph's edge ids. Sets are normalized
    /// (sorted, deduplicated). Throws std::invalid_argument when a label is
    /// below 1, a difference is negative, or some difference set lacks 0.
    Instance(Graph graph, std::vector<LabelSet> lists, std::vector<DiffSet> diffs);

    const Graph &graph() const { return graph_; }
    int vertex_count() const { return graph_.vertex_count(); }
    const LabelSet &labels(int v) const { return lists_[v]; }
    const std::vector<LabelSet> &lists() const { return lists_; }
    const DiffSet &diffs(int edge) const { return diffs_[edge]; }
    const std::vector<DiffSet> &all_diffs() const { return diffs_; }
    /// Forbidden differences on edge uv; the edge must exist.
    const DiffSet &forbidden(int u, int v) const;

    bool permits(int v, int label) const;
    bool forbids(int edge, int difference) const;

    /// Instance with vertex i of the result being `order[i]` of this one.
    Instance relabel(const std::vector<int> &order) const;
    /// Vertex-induced sub-instance; vertex i of the result is vertices[i].
    Instance induced(const std::vector<int> &vertices) const;

    friend bool operator==(const Instance &, const Instance &) = default;

  private:
    Graph graph_;
    std::vector<LabelSet> lists_;
    std::vector<DiffSet> diffs_;
};

struct InstanceStats {
    int tau = 0;
    int lambda_max = 0;
    bool connected = true;
    std::vector<int> empty_list_vertices;

    bool has_empty_list() const { return !empty_list_vertices.empty(); }
};

class ParseError : public std::runtime_error {
  public:
    ParseError(int line, const std::string &message);
    int line() const { return line_; }

  private:
    int line_;
};

Instance parse_instance(std::string_view text);
/// Canonical text form; parse_instance(serialize(x)) == x.
std::string serialize(const Instance &inst);

InstanceStats validate(const Instance &inst);

/// Connected components as vertex lists, each ascending, ordered by smallest vertex.
std::vector<std::vector<int>> component_vertices(const Graph &g);

struct Component {
    Instance instance;
    /// vertices[i] is the original index of component vertex i.
    std::vector<int> vertices;
};

std::vector<Component> connected_components(const Instance &inst);

struct LabelCompression {
    Instance instance;
    /// original[l] is the label in the input that compressed label l stands for.
    std::vector<int> original;
};

/// Shrinks every gap between consecutive used labels to at most tau+1 and
/// shifts the smallest used label to 1. Differences above tau are never
/// forbidden, so the answer is preserved.
LabelCompression compress_gaps(const Instance &inst);

/// u~v iff their distance in g is 1 or 2.
Graph graph_square(const Graph &g);

Instance reduce_list_coloring(const Graph &g, std::vector<LabelSet> lists);
/// L(p,q)-labeling on g as an instance over g's square. Requires p >= q >= 1.
Instance reduce_lpq(const Graph &g, int p, int q, std::vector<LabelSet> lists);
/// `weights` is indexed by g's edge ids; each must be >= 1.
Instance reduce_channel(const Graph &g, const std::vector<int> &weights, std::vector<LabelSet> lists);
/// T must contain 0.
Instance reduce_tcoloring(const Graph &g, DiffSet T, std::vector<LabelSet> lists);

} // namespace gltc

#endif
