#include "gltc/encoding.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace gltc {

std::optional<Symbol> oplus(Symbol x, bool y, int tau) {
    const int value = value_of(x);
    if (value > tau + 1)
        return std::nullopt;
    if (y)
        return value == 0 ? std::optional<Symbol>(symbol(tau + 1)) : std::nullopt;
    if (value <= 0)
        return symbol(0);
    if (value <= 2)
        return symbol(1);
    return symbol(value - 1);
}

std::optional<ReducedVector> oplus(std::span<const Symbol> a, std::span<const std::uint8_t> bits, int tau) {
    assert(a.size() == bits.size());
    ReducedVector result;
    result.symbols.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto s = oplus(a[i], bits[i] != 0, tau);
        if (!s)
            return std::nullopt;
        result.symbols.push_back(*s);
    }
    return result;
}

BarOperator::BarOperator(const Instance &inst)
    : lists_(inst.lists()), tau_(validate(inst).tau), blockers_(static_cast<std::size_t>(inst.vertex_count())) {
    if (tau_ > kMaxTau)
        throw std::invalid_argument("forbidden differences above " + std::to_string(kMaxTau) + " are not supported");
    for (int v = 0; v < inst.vertex_count(); ++v)
        for (const auto &nb : inst.graph().neighbors(v)) {
            // neighbour value j blocks when tau - j + 2 is a forbidden difference
            std::uint64_t codes = 0;
            for (int d : inst.diffs(nb.edge))
                if (d >= 1)
                    codes |= std::uint64_t{1} << symbol(tau_ + 2 - d);
            if (codes)
                blockers_[v].push_back({nb.vertex, codes});
        }
}

void BarOperator::apply(std::span<Symbol> row, int k) const {
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i] != symbol(0))
            continue;
        const auto &labels = lists_[i];
        bool open = std::binary_search(labels.begin(), labels.end(), k + 2);
        for (std::size_t b = 0; open && b < blockers_[i].size(); ++b)
            open = !((blockers_[i][b].codes >> row[blockers_[i][b].neighbor]) & 1U);
        if (!open)
            row[i] = kZeroBar;
    }
}

StateVector bar(const ReducedVector &b, int k, const Instance &inst) {
    StateVector row = b.symbols;
    BarOperator(inst).apply(row, k);
    return row;
}

bool is_complete(std::span<const Symbol> a) {
    return std::all_of(a.begin(), a.end(), [](Symbol s) { return is_labeled(s); });
}

std::string format_vector(std::span<const Symbol> a) {
    std::string out;
    for (Symbol s : a) {
        if (s == kZeroBar)
            out += 'B';
        else if (value_of(s) < 10)
            out += static_cast<char>('0' + value_of(s));
        else
            out += '[' + std::to_string(value_of(s)) + ']';
    }
    return out;
}

StateVector parse_vector(std::string_view text) {
    StateVector row;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == 'B') {
            row.push_back(kZeroBar);
        } else if (c >= '0' && c <= '9') {
            row.push_back(symbol(c - '0'));
        } else if (c == '[') {
            auto close = text.find(']', i);
            if (close == std::string_view::npos)
                throw std::invalid_argument("unterminated '[' in vector");
            row.push_back(symbol(std::stoi(std::string(text.substr(i + 1, close - i - 1)))));
            i = close;
        } else {
            throw std::invalid_argument(std::string("bad symbol '") + c + "' in vector");
        }
    }
    return row;
}

} // namespace gltc
