#ifndef GLTC_GENERATE_HPP
#define GLTC_GENERATE_HPP

#include <cstdint>

#include "gltc/instance.hpp"

namespace gltc {

struct GeneratorParams {
    int n = 8;
    double density = 0.5;
    int tau = 1;
    int lmax = 8;
};

/// Random instance, a pure function of (params, seed).
///
/// Draws come straight from std::mt19937_64, whose output sequence is fixed
/// by the C++ standard; no std distribution is used, so files are identical
/// across standard libraries. Each pair u<v (lexicographic) becomes an edge
/// when a 53-bit uniform draw falls below the density. Then, per vertex in
/// order, each label 1..lmax is kept on a draw's top bit (an empty list gets
/// one label picked by a draw modulo lmax), and per edge in order each
/// difference 1..tau joins {0} on a draw's top bit.
Instance generate_instance(const GeneratorParams &params, std::uint64_t seed);

} // namespace gltc

#endif
