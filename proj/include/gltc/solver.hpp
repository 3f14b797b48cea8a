#ifndef GLTC_SOLVER_HPP
#define GLTC_SOLVER_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gltc/encoding.hpp"
#include "gltc/instance.hpp"
#include "gltc/partition.hpp"
#include "gltc/vector_set.hpp"

namespace gltc {

struct SolveOptions {
    /// stop at the first level holding a complete vector
    bool early_exit = true;
    /// keep every level table so a witness can be walked back
    bool store_parents = true;
    bool strengthened_pruning = true;
    bool gap_compress = true;
    /// cap on vectors held at once across all retained tables
    std::size_t vector_limit = std::size_t{1} << 26;
    /// per-level "k<TAB>|T[k]|<TAB>cumulative" lines when set
    std::ostream *trace = nullptr;
};

class ResourceLimitExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// labels[v] is the label of vertex v.
struct Witness {
    std::vector<int> labels;
};

/// Both proper-labeling conditions: listed labels, no forbidden difference on any edge.
bool check_witness(const Instance &inst, const Witness &w);

enum class Decision { no, yes };

struct SolveStats {
    int levels = 0;
    std::size_t max_table = 0;
    std::size_t total_vectors = 0;
    /// |T[k]| for k = 0.. levels processed
    std::vector<std::size_t> table_sizes;
};

struct SolveResult {
    Decision decision = Decision::no;
    std::optional<Witness> witness;
    SolveStats stats;
};

/// Output of one aging step T[k] (+) P before the bar pass.
struct StepResult {
    /// reduced vectors, sorted
    VectorSet vectors;
    /// per member: index of a predecessor in T[k]
    std::vector<std::uint32_t> parent;
    /// per member: positions labeled by this step (bit i = position i)
    std::vector<std::uint64_t> labeled;
};

struct LevelTable {
    int level = 0;
    VectorSet vectors;
    /// empty for T[0]
    std::vector<std::uint32_t> parent;
    std::vector<std::uint64_t> labeled;
};

/// The level-by-level dynamic program for one instance under a fixed partition.
///
/// All vectors are indexed by position in the partition's ordering: position
/// i is vertex partition.ordering()[i] of the input instance.
class LevelEngine {
  public:
    static constexpr int kMaxVertices = 64;

    /// Throws std::invalid_argument when the instance exceeds kMaxVertices or
    /// the partition does not match it, ResourceLimitExceeded when a block has
    /// too many prefixes to plan.
    LevelEngine(const Instance &inst, const Partition &partition, Pruning pruning = Pruning::strengthened);
    ~LevelEngine();
    LevelEngine(LevelEngine &&) noexcept;
    LevelEngine &operator=(LevelEngine &&) noexcept;

    const Instance &ordered_instance() const;
    const std::vector<int> &ordering() const;
    int tau() const;
    int lambda_max() const;
    const VectorSet &independent_sets() const;
    std::size_t block_count() const;

    /// T[0]: every vertex unlabeled, open exactly when label 1 is listed.
    VectorSet initial_table() const;
    /// T[k] (+) P through the prefix-decomposed recursion over the blocks.
    /// Throws ResourceLimitExceeded once the output would exceed `budget` vectors.
    StepResult compute_step(const VectorSet &table, std::size_t budget = SIZE_MAX) const;
    /// T[k+1] from the step output at level k.
    LevelTable apply_bar(StepResult step, int k) const;
    VectorSet bar_all(const VectorSet &reduced, int k) const;

    struct Impl; // opaque; public so the recursion helper can name it

  private:
    std::unique_ptr<Impl> impl_;
};

/// Every defined a (+) p over all pairs; a reference for compute_step.
VectorSet direct_step(const VectorSet &table, const VectorSet &independent, int tau);

/// Labels of the witness walked back from member `index` of tables.back().
/// Positions follow the engine ordering. Throws std::logic_error when the
/// tables carry no parent links.
std::vector<int> reconstruct_witness(const std::vector<LevelTable> &tables, std::size_t index);

/// Runs the level loop on `inst` with the given partition of its vertices.
/// Empty lists answer NO at once. Throws ResourceLimitExceeded past the vector cap.
SolveResult solve(const Instance &inst, const Partition &partition, const SolveOptions &opts = {});

/// Splits into connected components, partitions each one and solves them in turn.
SolveResult solve_instance(const Instance &inst, const PartitionChoice &choice, const SolveOptions &opts = {});

} // namespace gltc

#endif
