#include "gltc/indsets.hpp"

#include <stdexcept>

namespace gltc {

namespace {

struct Enumerator {
    const Graph &g;
    const std::vector<int> &ordering;
    std::vector<int> chosen_neighbors;
    std::vector<std::uint8_t> current;
    std::vector<std::uint8_t> out;

    void run(std::size_t i) {
        if (i == ordering.size()) {
            out.insert(out.end(), current.begin(), current.end());
            return;
        }
        const int v = ordering[i];
        current[i] = 0;
        run(i + 1);
        if (chosen_neighbors[v] == 0) {
            current[i] = 1;
            for (const auto &nb : g.neighbors(v))
                ++chosen_neighbors[nb.vertex];
            run(i + 1);
            for (const auto &nb : g.neighbors(v))
                --chosen_neighbors[nb.vertex];
            current[i] = 0;
        }
    }
};

} // namespace

VectorSet enumerate_independent_sets(const Graph &g, const std::vector<int> &ordering) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    if (ordering.size() != n)
        throw std::invalid_argument("ordering must list every vertex once");
    std::vector<char> seen(n, 0);
    for (int v : ordering) {
        if (v < 0 || static_cast<std::size_t>(v) >= n || seen[v])
            throw std::invalid_argument("ordering must list every vertex once");
        seen[v] = 1;
    }
    Enumerator e{g, ordering, std::vector<int>(n, 0), std::vector<std::uint8_t>(n, 0), {}};
    e.run(0);
    if (n == 0)
        return VectorSet::from_rows(0, {{}});
    return VectorSet::from_flat(n, std::move(e.out));
}

VectorSet restrict_prefix(const VectorSet &P, const std::vector<std::uint8_t> &prefix) { return P.restrict(prefix); }

} // namespace gltc
