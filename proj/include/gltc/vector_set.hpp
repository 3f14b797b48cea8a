#ifndef GLTC_VECTOR_SET_HPP
#define GLTC_VECTOR_SET_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace gltc {

/// A set of equal-length words over small integers, kept sorted and
/// duplicate-free in one flat buffer.
///
/// Sorted storage makes the set a flattened trie: all members sharing a
/// prefix form one contiguous run, so restricting to a prefix is a pair of
/// binary searches and the suffixes of a run are themselves sorted.
class VectorSet {
  public:
    using Word = std::span<const std::uint8_t>;

    explicit VectorSet(std::size_t width = 0) : width_(width) {}
    /// Builds from concatenated rows in any order; duplicates are dropped.
    static VectorSet from_flat(std::size_t width, std::vector<std::uint8_t> flat);
    static VectorSet from_rows(std::size_t width, const std::vector<std::vector<std::uint8_t>> &rows);
    /// Takes rows that are already strictly increasing; width must be positive.
    static VectorSet adopt_sorted(std::size_t width, std::vector<std::uint8_t> flat);

    std::size_t width() const { return width_; }
    std::size_t size() const { return width_ == 0 ? zero_width_rows_ : flat_.size() / width_; }
    bool empty() const { return size() == 0; }
    Word operator[](std::size_t i) const { return Word(flat_.data() + i * width_, width_); }
    const std::vector<std::uint8_t> &flat() const { return flat_; }

    bool contains(Word w) const;
    /// Returns false when w was already present.
    bool insert(Word w);

    /// Index range [first, last) of members beginning with `prefix`.
    std::pair<std::size_t, std::size_t> prefix_range(Word prefix) const;
    /// { v : prefix v in this set }
    VectorSet restrict(Word prefix) const;

    friend VectorSet unite(const VectorSet &a, const VectorSet &b);
    friend bool operator==(const VectorSet &a, const VectorSet &b) {
        return a.width_ == b.width_ && a.size() == b.size() && a.flat_ == b.flat_;
    }

  private:
    std::size_t width_;
    std::vector<std::uint8_t> flat_;
    // a width-0 set is either empty or holds the empty word
    std::size_t zero_width_rows_ = 0;
};

} // namespace gltc

#endif
