#include "gltc/vector_set.hpp"

#include <algorithm>
#include <cassert>
#include <cstring>
#include <numeric>

namespace gltc {

namespace {

int compare(const std::uint8_t *a, const std::uint8_t *b, std::size_t n) { return n == 0 ? 0 : std::memcmp(a, b, n); }

} // namespace

VectorSet VectorSet::from_flat(std::size_t width, std::vector<std::uint8_t> flat) {
    VectorSet set(width);
    if (width == 0) {
        set.zero_width_rows_ = flat.empty() ? 0 : 1;
        return set;
    }
    assert(flat.size() % width == 0);
    const std::size_t rows = flat.size() / width;
    std::vector<std::size_t> order(rows);
    std::iota(order.begin(), order.end(), std::size_t{0});
    const auto *base = flat.data();
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return compare(base + a * width, base + b * width, width) < 0; });
    set.flat_.reserve(flat.size());
    for (std::size_t i = 0; i < rows; ++i) {
        const auto *row = base + order[i] * width;
        if (i > 0 && compare(row, base + order[i - 1] * width, width) == 0)
            continue;
        set.flat_.insert(set.flat_.end(), row, row + width);
    }
    return set;
}

VectorSet VectorSet::from_rows(std::size_t width, const std::vector<std::vector<std::uint8_t>> &rows) {
    if (width == 0) {
        VectorSet set(0);
        set.zero_width_rows_ = rows.empty() ? 0 : 1;
        return set;
    }
    std::vector<std::uint8_t> flat;
    flat.reserve(rows.size() * width);
    for (const auto &row : rows) {
        assert(row.size() == width);
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return from_flat(width, std::move(flat));
}

VectorSet VectorSet::adopt_sorted(std::size_t width, std::vector<std::uint8_t> flat) {
    assert(width > 0 && flat.size() % width == 0);
    VectorSet set(width);
    set.flat_ = std::move(flat);
#ifndef NDEBUG
    for (std::size_t i = 1; i < set.size(); ++i)
        assert(compare(set[i - 1].data(), set[i].data(), width) < 0);
#endif
    return set;
}

std::pair<std::size_t, std::size_t> VectorSet::prefix_range(Word prefix) const {
    assert(prefix.size() <= width_);
    std::size_t lo = 0;
    std::size_t hi = size();
    const std::size_t len = prefix.size();
    // first row >= prefix
    std::size_t a = lo, b = hi;
    while (a < b) {
        std::size_t mid = a + (b - a) / 2;
        if (compare((*this)[mid].data(), prefix.data(), len) < 0)
            a = mid + 1;
        else
            b = mid;
    }
    lo = a;
    b = hi;
    while (a < b) {
        std::size_t mid = a + (b - a) / 2;
        if (compare((*this)[mid].data(), prefix.data(), len) <= 0)
            a = mid + 1;
        else
            b = mid;
    }
    return {lo, a};
}

bool VectorSet::contains(Word w) const {
    assert(w.size() == width_);
    auto [lo, hi] = prefix_range(w);
    return lo < hi;
}

bool VectorSet::insert(Word w) {
    assert(w.size() == width_);
    if (width_ == 0) {
        bool fresh = zero_width_rows_ == 0;
        zero_width_rows_ = 1;
        return fresh;
    }
    auto [lo, hi] = prefix_range(w);
    if (lo < hi)
        return false;
    flat_.insert(flat_.begin() + static_cast<std::ptrdiff_t>(lo * width_), w.begin(), w.end());
    return true;
}

VectorSet VectorSet::restrict(Word prefix) const {
    const std::size_t suffix = width_ - prefix.size();
    auto [lo, hi] = prefix_range(prefix);
    VectorSet result(suffix);
    if (suffix == 0) {
        result.zero_width_rows_ = lo < hi ? 1 : 0;
        return result;
    }
    result.flat_.reserve((hi - lo) * suffix);
    for (std::size_t i = lo; i < hi; ++i) {
        auto row = (*this)[i].subspan(prefix.size());
        result.flat_.insert(result.flat_.end(), row.begin(), row.end());
    }
    return result;
}

VectorSet unite(const VectorSet &a, const VectorSet &b) {
    assert(a.width_ == b.width_);
    VectorSet result(a.width_);
    if (a.width_ == 0) {
        result.zero_width_rows_ = std::max(a.zero_width_rows_, b.zero_width_rows_);
        return result;
    }
    const std::size_t w = a.width_;
    std::size_t i = 0, j = 0;
    result.flat_.reserve(a.flat_.size() + b.flat_.size());
    while (i < a.size() || j < b.size()) {
        int c = i == a.size() ? 1 : j == b.size() ? -1 : compare(a[i].data(), b[j].data(), w);
        auto row = c <= 0 ? a[i] : b[j];
        result.flat_.insert(result.flat_.end(), row.begin(), row.end());
        if (c <= 0)
            ++i;
        if (c >= 0)
            ++j;
    }
    return result;
}

} // namespace gltc
