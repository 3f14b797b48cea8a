#include "gltc/oracle.hpp"

#include <cstdlib>

namespace gltc {

bool extension_predicate(const SearchState &state, int v, int label, const Instance &inst) {
    if (!inst.permits(v, label))
        return false;
    for (const auto &nb : inst.graph().neighbors(v)) {
        const int other = state.assignment[nb.vertex];
        if (other != 0 && inst.forbids(nb.edge, std::abs(label - other)))
            return false;
    }
    return true;
}

namespace {

bool search(SearchState &state, int v, const Instance &inst, LabelOrder order) {
    if (v == inst.vertex_count())
        return true;
    const auto &labels = inst.labels(v);
    const auto count = labels.size();
    for (std::size_t i = 0; i < count; ++i) {
        const int label = order == LabelOrder::ascending ? labels[i] : labels[count - 1 - i];
        if (!extension_predicate(state, v, label, inst))
            continue;
        state.assignment[v] = label;
        if (search(state, v + 1, inst, order))
            return true;
        state.assignment[v] = 0;
    }
    return false;
}

} // namespace

OracleResult brute_force_solve(const Instance &inst, LabelOrder order) {
    OracleResult result;
    for (const auto &labels : inst.lists())
        if (labels.empty())
            return result;
    SearchState state(inst.vertex_count());
    if (search(state, 0, inst, order)) {
        result.decision = Decision::yes;
        result.witness = Witness{std::move(state.assignment)};
    }
    return result;
}

} // namespace gltc
