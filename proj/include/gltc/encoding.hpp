#ifndef GLTC_ENCODING_HPP
#define GLTC_ENCODING_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gltc/instance.hpp"

namespace gltc {

/// One coordinate of a state vector.
///
/// Stored as a code: 0 is the blocked-unlabeled symbol (written B in traces),
/// and code c >= 1 is the value c-1. Code order is the canonical symbol order
/// B < 0 < 1 < ... < tau+1.
using Symbol = std::uint8_t;

inline constexpr Symbol kZeroBar = 0;
/// Largest supported forbidden difference; symbol codes must fit a 64-bit mask.
inline constexpr int kMaxTau = 60;

constexpr Symbol symbol(int value) { return static_cast<Symbol>(value + 1); }
/// -1 for B.
constexpr int value_of(Symbol s) { return static_cast<int>(s) - 1; }
constexpr bool is_labeled(Symbol s) { return s >= symbol(1); }

/// Word over B,0,..,tau+1 encoding a class of partial labelings at some level k:
/// 0 = unlabeled and may take k+1, B = unlabeled and blocked, 1 = labeled at
/// most k-tau, j >= 2 = labeled exactly k+j-tau-1.
using StateVector = std::vector<Symbol>;

/// Output of the aging step, over 0..tau+1 only.
struct ReducedVector {
    std::vector<Symbol> symbols;

    friend auto operator<=>(const ReducedVector &, const ReducedVector &) = default;
};

/// x (+) y: ages x by one level and, when y = 1, labels an extendable vertex.
/// nullopt where the combination is undefined.
std::optional<Symbol> oplus(Symbol x, bool y, int tau);

std::optional<ReducedVector> oplus(std::span<const Symbol> a, std::span<const std::uint8_t> bits, int tau);

/// Recomputes 0 versus B for unlabeled coordinates after a step at level k:
/// label k+2 must be listed and no neighbour may sit at a forbidden distance.
/// The bar operator of level k is built once and applied to many vectors.
class BarOperator {
  public:
    explicit BarOperator(const Instance &inst);

    int tau() const { return tau_; }
    /// Rewrites `row` in place. Only coordinates equal to 0 are touched.
    void apply(std::span<Symbol> row, int k) const;

  private:
    struct Blocker {
        int neighbor;
        /// bit c set: a neighbour carrying symbol code c blocks the next label
        std::uint64_t codes;
    };

    std::vector<LabelSet> lists_;
    int tau_;
    std::vector<std::vector<Blocker>> blockers_;
};

StateVector bar(const ReducedVector &b, int k, const Instance &inst);

bool is_complete(std::span<const Symbol> a);

/// Trace form: B for the blocked symbol, digits otherwise, multi-digit values bracketed.
std::string format_vector(std::span<const Symbol> a);
StateVector parse_vector(std::string_view text);

} // namespace gltc

#endif
