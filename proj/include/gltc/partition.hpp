#ifndef GLTC_PARTITION_HPP
#define GLTC_PARTITION_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gltc/encoding.hpp"
#include "gltc/instance.hpp"

namespace gltc {

enum class BlockKind { singleton, star, clique };

std::string_view to_string(BlockKind kind);

/// A group of vertices processed together by the solver. A star block lists
/// its center first.
struct Block {
    std::vector<int> vertices;
    BlockKind kind = BlockKind::singleton;

    std::size_t size() const { return vertices.size(); }
    friend bool operator==(const Block &, const Block &) = default;
};

/// Ordered partition of the vertex set. The concatenated block lists give the
/// global vertex ordering used by state vectors.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<Block> blocks);

    const std::vector<Block> &blocks() const { return blocks_; }
    std::size_t block_count() const { return blocks_.size(); }
    const std::vector<int> &ordering() const { return ordering_; }
    std::size_t vertex_count() const { return ordering_.size(); }

    friend bool operator==(const Partition &, const Partition &) = default;

  private:
    std::vector<Block> blocks_;
    std::vector<int> ordering_;
};

/// Throws std::logic_error unless the blocks partition V(g) and every star or
/// clique block is realized by edges of g.
void check_partition(const Graph &g, const Partition &partition);

Partition singleton_partition(const Graph &g);
/// Star partition peeled from a BFS spanning tree. g must be connected with n >= 2.
Partition star_partition_spanning_tree(const Graph &g);
/// Star partition for connected K_{1,d}-free graphs: non-final blocks have at
/// most d-1 vertices, the final one at most d. Throws std::invalid_argument
/// when the tree surgery finds an induced K_{1,d}.
Partition star_partition_k1d(const Graph &g, int d);
/// Greedy clique packing split into K2 and K3 blocks, then singletons.
Partition clique_partition(const Graph &g);

enum class Pruning {
    /// adjacent in-block vertices may not carry the same exact label
    equality,
    /// additionally, exact labels of adjacent in-block vertices may not differ by a forbidden amount
    strengthened,
};

/// Block-local feasible prefixes over symbol codes 0..tau+1, in canonical order.
/// Position i of each prefix refers to block.vertices[i].
std::vector<std::vector<Symbol>> feasible_prefixes(const Block &block, int tau, const Instance &inst,
                                                   Pruning pruning = Pruning::strengthened);
/// Count of equality-pruned prefixes, without materializing them.
std::uint64_t count_feasible_prefixes(const Block &block, int tau, const Graph &g);

/// Prefix count of a star block of size s whose leaves are pairwise non-adjacent.
std::uint64_t f_star(int s, int tau);
/// Per-vertex base reached by star blocks of size d.
double alpha(int tau, int d);

/// Arbitrary-precision non-negative integer, just enough for products of block counts.
class BigUnsigned {
  public:
    BigUnsigned(std::uint64_t value = 0);

    BigUnsigned &operator*=(std::uint64_t factor);
    double log() const;
    std::string to_string() const;

    friend bool operator==(const BigUnsigned &, const BigUnsigned &) = default;
    friend std::strong_ordering operator<=>(const BigUnsigned &a, const BigUnsigned &b);

  private:
    // little-endian base 2^32
    std::vector<std::uint32_t> limbs_;
};

struct ComplexityEstimate {
    std::vector<std::uint64_t> per_block_f;
    BigUnsigned product{1};
    /// (product)^(1/n)
    double base = 1.0;
    /// vertices covered by clique blocks
    int rho = 0;
};

/// Equality-pruned prefix counts for each block, and the resulting base.
ComplexityEstimate predict(const Graph &g, const Partition &partition, int tau);

enum class Strategy { singleton, star, k1d, clique, automatic };

struct PartitionChoice {
    Strategy strategy = Strategy::automatic;
    /// forbidden star size for Strategy::k1d
    int d = 3;
};

/// Parses "singleton", "star", "k1d:<d>", "clique" or "auto".
PartitionChoice parse_partition_choice(std::string_view text);
std::string to_string(const PartitionChoice &choice);

/// Builds a partition of any graph: each connected component is partitioned on
/// its own (single vertices become singleton blocks) and the results are
/// concatenated. Automatic choice takes, per component, the candidate among
/// singleton, star and clique with the smallest predicted product.
Partition build_partition(const Graph &g, const PartitionChoice &choice, int tau);

} // namespace gltc

#endif
