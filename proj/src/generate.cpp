#include "gltc/generate.hpp"

#include <random>
#include <stdexcept>

namespace gltc {

Instance generate_instance(const GeneratorParams &params, std::uint64_t seed) {
    if (params.n < 0 || params.tau < 0 || params.lmax < 1)
        throw std::invalid_argument("generator needs n >= 0, tau >= 0 and lmax >= 1");
    if (!(params.density >= 0.0 && params.density <= 1.0))
        throw std::invalid_argument("density must lie in [0, 1]");

    std::mt19937_64 rng(seed);
    auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    auto coin = [&] { return (rng() >> 63) != 0; };

    std::vector<Edge> edges;
    for (int u = 0; u < params.n; ++u)
        for (int v = u + 1; v < params.n; ++v)
            if (unit() < params.density)
                edges.push_back({u, v});

    std::vector<LabelSet> lists(static_cast<std::size_t>(params.n));
    for (auto &labels : lists) {
        for (int label = 1; label <= params.lmax; ++label)
            if (coin())
                labels.push_back(label);
        if (labels.empty())
            labels.push_back(1 + static_cast<int>(rng() % static_cast<std::uint64_t>(params.lmax)));
    }

    std::vector<DiffSet> diffs(edges.size());
    for (auto &d : diffs) {
        d.push_back(0);
        for (int diff = 1; diff <= params.tau; ++diff)
            if (coin())
                d.push_back(diff);
    }
    return Instance(Graph(params.n, std::move(edges)), std::move(lists), std::move(diffs));
}

} // namespace gltc
