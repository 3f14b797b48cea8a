#ifndef GLTC_INDSETS_HPP
#define GLTC_INDSETS_HPP

#include <cstdint>
#include <vector>

#include "gltc/instance.hpp"
#include "gltc/vector_set.hpp"

namespace gltc {

/// Characteristic vectors (one 0/1 byte per position) of every independent
/// set of g, including the empty set. Position i refers to vertex ordering[i].
/// Enumeration is depth-first with 0 before 1, so the output is already sorted.
VectorSet enumerate_independent_sets(const Graph &g, const std::vector<int> &ordering);

/// { v : prefix v in P }
VectorSet restrict_prefix(const VectorSet &P, const std::vector<std::uint8_t> &prefix);

} // namespace gltc

#endif
