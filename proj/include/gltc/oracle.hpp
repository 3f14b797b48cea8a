#ifndef GLTC_ORACLE_HPP
#define GLTC_ORACLE_HPP

#include <optional>
#include <vector>

#include "gltc/instance.hpp"
#include "gltc/solver.hpp"

namespace gltc {

/// Partial assignment built by the reference search; 0 marks an unassigned vertex.
struct SearchState {
    std::vector<int> assignment;

    explicit SearchState(int n) : assignment(static_cast<std::size_t>(n), 0) {}
};

/// True iff `label` is listed for v and no assigned neighbour sits at a forbidden difference.
bool extension_predicate(const SearchState &state, int v, int label, const Instance &inst);

enum class LabelOrder { ascending, descending };

struct OracleResult {
    Decision decision = Decision::no;
    std::optional<Witness> witness;
};

/// Chronological backtracking over vertices in index order, trying each
/// vertex's labels in `order`. Exponential; meant for small instances.
OracleResult brute_force_solve(const Instance &inst, LabelOrder order = LabelOrder::ascending);

} // namespace gltc

#endif
