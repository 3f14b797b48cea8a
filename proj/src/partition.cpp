#include "gltc/partition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gltc {

std::string_view to_string(BlockKind kind) {
    switch (kind) {
    case BlockKind::singleton:
        return "singleton";
    case BlockKind::star:
        return "star";
    case BlockKind::clique:
        return "clique";
    }
    return "?";
}

Partition::Partition(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
    for (const auto &block : blocks_)
        ordering_.insert(ordering_.end(), block.vertices.begin(), block.vertices.end());
}

void check_partition(const Graph &g, const Partition &partition) {
    const int n = g.vertex_count();
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    for (int v : partition.ordering()) {
        if (v < 0 || v >= n || seen[v]++)
            throw std::logic_error("partition blocks are not disjoint");
    }
    if (static_cast<int>(partition.vertex_count()) != n)
        throw std::logic_error("partition does not cover every vertex");
    for (const auto &block : partition.blocks()) {
        const auto &vs = block.vertices;
        if (vs.empty())
            throw std::logic_error("empty block");
        switch (block.kind) {
        case BlockKind::singleton:
            if (vs.size() != 1)
                throw std::logic_error("singleton block with several vertices");
            break;
        case BlockKind::star:
            if (vs.size() < 2)
                throw std::logic_error("star block needs at least 2 vertices");
            for (std::size_t i = 1; i < vs.size(); ++i)
                if (!g.adjacent(vs[0], vs[i]))
                    throw std::logic_error("star center not adjacent to a leaf");
            break;
        case BlockKind::clique:
            if (vs.size() < 2)
                throw std::logic_error("clique block needs at least 2 vertices");
            for (std::size_t i = 0; i < vs.size(); ++i)
                for (std::size_t j = i + 1; j < vs.size(); ++j)
                    if (!g.adjacent(vs[i], vs[j]))
                        throw std::logic_error("clique block is not a clique");
            break;
        }
    }
}

Partition singleton_partition(const Graph &g) {
    std::vector<Block> blocks;
    for (int v = 0; v < g.vertex_count(); ++v)
        blocks.push_back({{v}, BlockKind::singleton});
    return Partition(std::move(blocks));
}

namespace {

/// Spanning tree of a shrinking vertex set, with the walks the star
/// constructions need.
class ResidualTree {
  public:
    explicit ResidualTree(const Graph &g) : adj_(static_cast<std::size_t>(g.vertex_count())), alive_(adj_.size(), 1) {
        const int n = g.vertex_count();
        std::vector<int> seen(static_cast<std::size_t>(n), 0);
        std::vector<int> queue{0};
        seen[0] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (const auto &nb : g.neighbors(queue[head]))
                if (!seen[nb.vertex]) {
                    seen[nb.vertex] = 1;
                    link(queue[head], nb.vertex);
                    queue.push_back(nb.vertex);
                }
        if (static_cast<int>(queue.size()) != n)
            throw std::invalid_argument("star partition needs a connected graph");
        count_ = n;
    }

    int size() const { return count_; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::set<int> &neighbors(int v) const { return adj_[v]; }
    void link(int a, int b) {
        adj_[a].insert(b);
        adj_[b].insert(a);
    }
    void unlink(int a, int b) {
        adj_[a].erase(b);
        adj_[b].erase(a);
    }

    std::vector<int> alive_vertices() const {
        std::vector<int> out;
        for (int v = 0; v < static_cast<int>(alive_.size()); ++v)
            if (alive_[v])
                out.push_back(v);
        return out;
    }

    void remove(const std::vector<int> &vertices) {
        for (int v : vertices) {
            for (int w : std::vector<int>(adj_[v].begin(), adj_[v].end()))
                unlink(v, w);
            alive_[v] = 0;
            --count_;
        }
    }

    /// Farthest vertex from `start`, smallest id among ties.
    int farthest(int start) const {
        std::vector<int> dist(adj_.size(), -1);
        std::vector<int> queue{start};
        dist[start] = 0;
        int best = start;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            if (dist[v] > dist[best] || (dist[v] == dist[best] && v < best))
                best = v;
            for (int w : adj_[v])
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
        }
        return best;
    }

    /// End vertex of a longest path (double sweep from the smallest live id).
    int path_end() const {
        const int first = static_cast<int>(std::find(alive_.begin(), alive_.end(), 1) - alive_.begin());
        return farthest(farthest(first));
    }

    /// Center of the residual tree if it is a star, else -1.
    int star_center() const {
        if (count_ == 1)
            return alive_vertices().front();
        for (int v : alive_vertices())
            if (degree(v) == count_ - 1)
                return v;
        return -1;
    }

  private:
    std::vector<std::set<int>> adj_;
    std::vector<char> alive_;
    int count_ = 0;
};

Block star_block(int center, std::vector<int> others) {
    std::sort(others.begin(), others.end());
    others.erase(std::remove(others.begin(), others.end(), center), others.end());
    others.insert(others.begin(), center);
    const auto kind = others.size() == 1 ? BlockKind::singleton : BlockKind::star;
    return {std::move(others), kind};
}

std::vector<int> leaf_neighbors(const ResidualTree &tree, int u) {
    std::vector<int> leaves;
    for (int w : tree.neighbors(u))
        if (tree.degree(w) == 1)
            leaves.push_back(w);
    return leaves;
}

} // namespace

Partition star_partition_spanning_tree(const Graph &g) {
    if (g.vertex_count() < 2)
        throw std::invalid_argument("star partition needs at least 2 vertices");
    ResidualTree tree(g);
    std::vector<Block> blocks;
    while (tree.size() > 0) {
        if (int center = tree.star_center(); center >= 0) {
            blocks.push_back(star_block(center, tree.alive_vertices()));
            break;
        }
        const int v = tree.path_end();
        const int u = *tree.neighbors(v).begin();
        auto members = leaf_neighbors(tree, u);
        members.insert(members.begin(), u);
        blocks.push_back(star_block(u, members));
        tree.remove(members);
    }
    return Partition(std::move(blocks));
}

Partition star_partition_k1d(const Graph &g, int d) {
    if (d < 3)
        throw std::invalid_argument("K_{1,d}-free star partition needs d >= 3");
    if (g.vertex_count() < 2)
        throw std::invalid_argument("star partition needs at least 2 vertices");
    ResidualTree tree(g);
    std::vector<Block> blocks;
    const long long max_moves = 4LL * g.vertex_count() * g.vertex_count() + 16;
    long long moves = 0;
    while (tree.size() > 0) {
        if (tree.size() <= d) {
            if (int center = tree.star_center(); center >= 0) {
                blocks.push_back(star_block(center, tree.alive_vertices()));
                break;
            }
            auto rest = tree.alive_vertices();
            auto hub = std::find_if(rest.begin(), rest.end(), [&](int c) {
                return std::all_of(rest.begin(), rest.end(), [&](int w) { return w == c || g.adjacent(c, w); });
            });
            if (hub != rest.end()) {
                blocks.push_back(star_block(*hub, rest));
                break;
            }
        }
        const int v = tree.path_end();
        const int u = *tree.neighbors(v).begin();
        auto leaves = leaf_neighbors(tree, u);
        if (static_cast<int>(leaves.size()) <= d - 2) {
            auto members = leaves;
            members.insert(members.begin(), u);
            blocks.push_back(star_block(u, members));
            tree.remove(members);
            continue;
        }
        if (++moves > max_moves)
            throw std::logic_error("K_{1,d} star partition did not converge");
        bool moved = false;
        // two leaves of u adjacent in g: hang one below the other
        for (std::size_t i = 0; i < leaves.size() && !moved; ++i)
            for (std::size_t j = i + 1; j < leaves.size() && !moved; ++j)
                if (g.adjacent(leaves[i], leaves[j])) {
                    tree.unlink(u, leaves[i]);
                    tree.link(leaves[i], leaves[j]);
                    moved = true;
                }
        if (moved)
            continue;
        // a leaf of u adjacent in g to u's non-leaf neighbour x: move it under x
        int x = -1;
        for (int w : tree.neighbors(u))
            if (tree.degree(w) > 1)
                x = w;
        for (std::size_t i = 0; x >= 0 && i < leaves.size() && !moved; ++i)
            if (g.adjacent(leaves[i], x)) {
                tree.unlink(u, leaves[i]);
                tree.link(leaves[i], x);
                moved = true;
            }
        if (!moved)
            throw std::invalid_argument("input not K_{1," + std::to_string(d) + "}-free");
    }
    return Partition(std::move(blocks));
}

Partition clique_partition(const Graph &g) {
    const int n = g.vertex_count();
    auto before = [&](int a, int b) { return std::pair(g.degree(a), a) < std::pair(g.degree(b), b); };
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), before);

    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> pairs;
    for (int v : order) {
        if (used[v])
            continue;
        int best = -1;
        for (const auto &nb : g.neighbors(v))
            if (!used[nb.vertex] && (best < 0 || before(nb.vertex, best)))
                best = nb.vertex;
        if (best >= 0) {
            used[v] = used[best] = 1;
            pairs.push_back({std::min(v, best), std::max(v, best)});
        }
    }

    std::vector<Block> edges, triangles, singles;
    for (auto &pair : pairs) {
        int third = -1;
        for (const auto &nb : g.neighbors(pair[0]))
            if (!used[nb.vertex] && g.adjacent(pair[1], nb.vertex) && (third < 0 || before(nb.vertex, third)))
                third = nb.vertex;
        if (third >= 0) {
            used[third] = 1;
            pair.push_back(third);
            std::sort(pair.begin(), pair.end());
            triangles.push_back({pair, BlockKind::clique});
        } else {
            edges.push_back({pair, BlockKind::clique});
        }
    }
    for (int v = 0; v < n; ++v)
        if (!used[v])
            singles.push_back({{v}, BlockKind::singleton});

    std::vector<Block> blocks = std::move(edges);
    blocks.insert(blocks.end(), triangles.begin(), triangles.end());
    blocks.insert(blocks.end(), singles.begin(), singles.end());
    return Partition(std::move(blocks));
}

namespace {

struct InBlockEdge {
    int earlier;
    const DiffSet *diffs;
};

/// Backtracking over block positions; calls emit(prefix) for every survivor.
template <typename Emit>
void enumerate_prefixes(const Block &block, int tau, const Graph &g, const Instance *strengthened, Emit &&emit) {
    const std::size_t s = block.size();
    std::vector<std::vector<InBlockEdge>> earlier(s);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (auto id = g.edge_id(block.vertices[i], block.vertices[j]))
                earlier[i].push_back(
                    {static_cast<int>(j), strengthened ? &strengthened->diffs(*id) : static_cast<const DiffSet *>(nullptr)});

    std::vector<Symbol> prefix(s, symbol(0));
    auto fits = [&](std::size_t i) {
        const int a = value_of(prefix[i]);
        if (a < 2)
            return true;
        for (const auto &e : earlier[i]) {
            const int b = value_of(prefix[e.earlier]);
            if (b < 2)
                continue;
            if (a == b)
                return false;
            if (e.diffs && std::binary_search(e.diffs->begin(), e.diffs->end(), std::abs(a - b)))
                return false;
        }
        return true;
    };
    auto rec = [&](auto &self, std::size_t i) -> void {
        if (i == s) {
            emit(prefix);
            return;
        }
        for (int value = 0; value <= tau + 1; ++value) {
            prefix[i] = symbol(value);
            if (fits(i))
                self(self, i + 1);
        }
    };
    rec(rec, 0);
}

constexpr std::uint64_t kExactCountLimit = std::uint64_t{1} << 26;

std::uint64_t checked_pow(std::uint64_t base, int exponent) {
    std::uint64_t result = 1;
    for (int i = 0; i < exponent; ++i) {
        if (result > std::numeric_limits<std::uint64_t>::max() / base)
            throw std::overflow_error("prefix count overflows 64 bits");
        result *= base;
    }
    return result;
}

} // namespace

std::vector<std::vector<Symbol>> feasible_prefixes(const Block &block, int tau, const Instance &inst, Pruning pruning) {
    std::vector<std::vector<Symbol>> out;
    enumerate_prefixes(block, tau, inst.graph(), pruning == Pruning::strengthened ? &inst : nullptr,
                       [&](const std::vector<Symbol> &prefix) { out.push_back(prefix); });
    return out;
}

std::uint64_t count_feasible_prefixes(const Block &block, int tau, const Graph &g) {
    const int s = static_cast<int>(block.size());
    const std::uint64_t all = checked_pow(static_cast<std::uint64_t>(tau) + 2, s);
    if (all > kExactCountLimit) {
        // too many to walk; star blocks get their closed-form ceiling
        return block.kind == BlockKind::star ? f_star(s, tau) : all;
    }
    std::uint64_t count = 0;
    enumerate_prefixes(block, tau, g, nullptr, [&](const std::vector<Symbol> &) { ++count; });
    return count;
}

std::uint64_t f_star(int s, int tau) {
    if (s < 2)
        throw std::invalid_argument("star blocks have at least 2 vertices");
    const auto t = static_cast<std::uint64_t>(tau);
    return 2 * checked_pow(t + 2, s - 1) + t * checked_pow(t + 1, s - 1);
}

double alpha(int tau, int d) {
    if (d < 2)
        throw std::invalid_argument("alpha is defined for d >= 2");
    const long double t = tau;
    const long double inner = 2.0L * std::pow(t + 2, d - 1) + t * std::pow(t + 1, d - 1);
    return static_cast<double>(std::pow(inner, 1.0L / d));
}

BigUnsigned::BigUnsigned(std::uint64_t value) {
    while (value) {
        limbs_.push_back(static_cast<std::uint32_t>(value));
        value >>= 32;
    }
}

BigUnsigned &BigUnsigned::operator*=(std::uint64_t factor) {
    unsigned __int128 carry = 0;
    for (auto &limb : limbs_) {
        unsigned __int128 cur = static_cast<unsigned __int128>(limb) * factor + carry;
        limb = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
    }
    while (carry) {
        limbs_.push_back(static_cast<std::uint32_t>(carry));
        carry >>= 32;
    }
    if (factor == 0)
        limbs_.clear();
    return *this;
}

double BigUnsigned::log() const {
    if (limbs_.empty())
        return -std::numeric_limits<double>::infinity();
    // top two limbs carry all the precision a double can hold
    const std::size_t k = limbs_.size();
    long double top = limbs_[k - 1];
    if (k >= 2)
        top = top * 4294967296.0L + limbs_[k - 2];
    const long double shift = static_cast<long double>(k >= 2 ? k - 2 : 0) * 32.0L;
    return static_cast<double>(std::log(top) + shift * std::log(2.0L));
}

std::string BigUnsigned::to_string() const {
    if (limbs_.empty())
        return "0";
    std::vector<std::uint32_t> digits = limbs_;
    std::string out;
    while (!digits.empty()) {
        std::uint64_t rem = 0;
        for (std::size_t i = digits.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | digits[i];
            digits[i] = static_cast<std::uint32_t>(cur / 1000000000U);
            rem = cur % 1000000000U;
        }
        while (!digits.empty() && digits.back() == 0)
            digits.pop_back();
        std::string chunk = std::to_string(rem);
        if (!digits.empty())
            chunk.insert(0, 9 - chunk.size(), '0');
        out.insert(0, chunk);
    }
    return out;
}

std::strong_ordering operator<=>(const BigUnsigned &a, const BigUnsigned &b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() <=> b.limbs_.size();
    for (std::size_t i = a.limbs_.size(); i-- > 0;)
        if (a.limbs_[i] != b.limbs_[i])
            return a.limbs_[i] <=> b.limbs_[i];
    return std::strong_ordering::equal;
}

ComplexityEstimate predict(const Graph &g, const Partition &partition, int tau) {
    ComplexityEstimate estimate;
    for (const auto &block : partition.blocks()) {
        const auto f = count_feasible_prefixes(block, tau, g);
        estimate.per_block_f.push_back(f);
        estimate.product *= f;
        if (block.kind == BlockKind::clique)
            estimate.rho += static_cast<int>(block.size());
    }
    const auto n = partition.vertex_count();
    estimate.base = n == 0 ? 1.0 : std::exp(estimate.product.log() / static_cast<double>(n));
    return estimate;
}

PartitionChoice parse_partition_choice(std::string_view text) {
    if (text == "singleton")
        return {Strategy::singleton, 3};
    if (text == "star")
        return {Strategy::star, 3};
    if (text == "clique")
        return {Strategy::clique, 3};
    if (text == "auto")
        return {Strategy::automatic, 3};
    if (text.starts_with("k1d:")) {
        const std::string digits(text.substr(4));
        std::size_t used = 0;
        int d = 0;
        try {
            d = std::stoi(digits, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == digits.size() && used > 0 && d >= 3)
            return {Strategy::k1d, d};
    }
    throw std::invalid_argument("unknown partition '" + std::string(text) +
                                "' (expected singleton, star, k1d:<d> with d >= 3, clique or auto)");
}

std::string to_string(const PartitionChoice &choice) {
    switch (choice.strategy) {
    case Strategy::singleton:
        return "singleton";
    case Strategy::star:
        return "star";
    case Strategy::k1d:
        return "k1d:" + std::to_string(choice.d);
    case Strategy::clique:
        return "clique";
    case Strategy::automatic:
        return "auto";
    }
    return "?";
}

namespace {

Partition partition_connected(const Graph &g, const PartitionChoice &choice, int tau) {
    if (g.vertex_count() == 1)
        return singleton_partition(g);
    switch (choice.strategy) {
    case Strategy::singleton:
        return singleton_partition(g);
    case Strategy::star:
        return star_partition_spanning_tree(g);
    case Strategy::k1d:
        return star_partition_k1d(g, choice.d);
    case Strategy::clique:
        return clique_partition(g);
    case Strategy::automatic:
        break;
    }
    Partition best = singleton_partition(g);
    BigUnsigned best_product = predict(g, best, tau).product;
    for (auto candidate : {star_partition_spanning_tree(g), clique_partition(g)}) {
        auto product = predict(g, candidate, tau).product;
        if (product < best_product) {
            best_product = product;
            best = std::move(candidate);
        }
    }
    return best;
}

} // namespace

Partition build_partition(const Graph &g, const PartitionChoice &choice, int tau) {
    std::vector<Block> blocks;
    for (const auto &members : component_vertices(g)) {
        auto part = partition_connected(g.induced(members), choice, tau);
        for (auto block : part.blocks()) {
            for (auto &v : block.vertices)
                v = members[v];
            blocks.push_back(std::move(block));
        }
    }
    return Partition(std::move(blocks));
}

} // namespace gltc
