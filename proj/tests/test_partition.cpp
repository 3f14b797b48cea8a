#include <doctest.h>

#include <cmath>
#include <numeric>

#include "gltc/partition.hpp"
#include "support.hpp"

using namespace gltc;
using namespace gltc::testing;

namespace {

std::vector<std::vector<int>> vertex_lists(const Partition &p) {
    std::vector<std::vector<int>> out;
    for (const auto &b : p.blocks())
        out.push_back(b.vertices);
    return out;
}

std::size_t count_kind(const Partition &p, BlockKind kind, std::size_t size) {
    return static_cast<std::size_t>(std::count_if(p.blocks().begin(), p.blocks().end(), [&](const Block &b) {
        return b.kind == kind && b.size() == size;
    }));
}

} // namespace

TEST_SUITE("partition") {

TEST_CASE("singleton partition") {
    auto p = singleton_partition(path_graph(3));
    CHECK(vertex_lists(p) == std::vector<std::vector<int>>{{0}, {1}, {2}});
    CHECK(p.ordering() == std::vector<int>{0, 1, 2});
    auto inst = uniform_instance(path_graph(3), {1, 2}, {0, 1});
    for (const auto &b : p.blocks())
        CHECK(feasible_prefixes(b, 1, inst).size() == 3);
    CHECK(predict(path_graph(3), p, 1).base == doctest::Approx(3.0));
}

TEST_CASE("spanning-tree stars") {
    auto claw = star_partition_spanning_tree(star_graph(3));
    REQUIRE(claw.block_count() == 1);
    CHECK(claw.blocks()[0].size() == 4);
    CHECK(claw.blocks()[0].vertices.front() == 0);
    CHECK(claw.blocks()[0].kind == BlockKind::star);

    auto p4 = star_partition_spanning_tree(path_graph(4));
    CHECK(vertex_lists(p4) == std::vector<std::vector<int>>{{1, 0}, {2, 3}});
    CHECK(p4.ordering() == std::vector<int>{1, 0, 2, 3});

    CHECK_THROWS_AS(star_partition_spanning_tree(Graph(3, {{0, 1}})), std::invalid_argument);
}

TEST_CASE("spanning-tree stars respect the degree bound") {
    // subcubic trees: non-final blocks have at most 3 vertices
    Graph caterpillar(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {2, 6}, {3, 7}, {4, 8}, {4, 9}});
    auto p = star_partition_spanning_tree(caterpillar);
    check_partition(caterpillar, p);
    for (std::size_t i = 0; i + 1 < p.block_count(); ++i)
        CHECK(p.blocks()[i].size() <= 3);
    CHECK(p.blocks().back().size() <= 4);
}

TEST_CASE("k1d stars") {
    auto tri = star_partition_k1d(complete_graph(3), 3);
    REQUIRE(tri.block_count() == 1);
    CHECK(tri.blocks()[0].size() == 3);

    auto c4 = star_partition_k1d(cycle_graph(4), 3);
    CHECK(c4.block_count() == 2);
    for (const auto &b : c4.blocks())
        CHECK(b.size() == 2);

    for (int n = 4; n <= 9; ++n) {
        auto g = cycle_graph(n);
        auto p = star_partition_k1d(g, 3);
        check_partition(g, p);
        for (std::size_t i = 0; i + 1 < p.block_count(); ++i)
            CHECK(p.blocks()[i].size() <= 2);
        CHECK(p.blocks().back().size() <= 3);
    }

    CHECK_THROWS_WITH_AS(star_partition_k1d(star_graph(3), 3), "input not K_{1,3}-free", std::invalid_argument);
    CHECK_THROWS_AS(star_partition_k1d(path_graph(3), 2), std::invalid_argument);
}

TEST_CASE("k1d stars on line graphs") {
    std::vector<Graph> bases{complete_graph(4), cycle_graph(6), star_graph(4), path_graph(6),
                             Graph(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3}})};
    for (const auto &base : bases) {
        auto g = line_graph(base);
        auto p = star_partition_k1d(g, 3);
        check_partition(g, p);
        for (std::size_t i = 0; i + 1 < p.block_count(); ++i)
            CHECK(p.blocks()[i].size() <= 2);
        CHECK(p.blocks().back().size() <= 3);
    }
}

TEST_CASE("clique partition") {
    auto p4 = clique_partition(path_graph(4));
    CHECK(count_kind(p4, BlockKind::clique, 2) == 2);
    CHECK(p4.block_count() == 2);

    auto tri = clique_partition(complete_graph(3));
    REQUIRE(tri.block_count() == 1);
    CHECK(tri.blocks()[0].size() == 3);
    CHECK(tri.blocks()[0].kind == BlockKind::clique);

    auto claw = clique_partition(star_graph(3));
    CHECK(count_kind(claw, BlockKind::clique, 2) == 1);
    CHECK(count_kind(claw, BlockKind::singleton, 1) == 2);
    CHECK(predict(star_graph(3), claw, 1).rho == 2);

    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const auto g = corpus_instance(seed, 12).graph();
        auto p = clique_partition(g);
        check_partition(g, p);
        const auto pairs = count_kind(p, BlockKind::clique, 2);
        const auto triangles = count_kind(p, BlockKind::clique, 3);
        CHECK(2 * pairs + 3 * triangles <= static_cast<std::size_t>(g.vertex_count()));
        CHECK(count_kind(p, BlockKind::singleton, 1) + pairs + triangles == p.block_count());
    }
}

TEST_CASE("check_partition catches violations") {
    auto g = path_graph(3);
    CHECK_THROWS_AS(check_partition(g, Partition({{{0, 1}, BlockKind::star}})), std::logic_error);
    CHECK_THROWS_AS(check_partition(g, Partition({{{0, 2}, BlockKind::star}, {{1}, BlockKind::singleton}})),
                    std::logic_error);
    CHECK_THROWS_AS(check_partition(g, Partition({{{0, 1, 2}, BlockKind::clique}})), std::logic_error);
    CHECK_THROWS_AS(check_partition(g, Partition({{{0, 1}, BlockKind::singleton}, {{2}, BlockKind::singleton}})),
                    std::logic_error);
    CHECK_NOTHROW(check_partition(g, Partition({{{1, 0, 2}, BlockKind::star}})));
}

TEST_CASE("prefix counts") {
    for (int tau = 0; tau <= 5; ++tau) {
        const std::uint64_t t = static_cast<std::uint64_t>(tau);
        Block single{{0}, BlockKind::singleton};
        CHECK(count_feasible_prefixes(single, tau, Graph(1)) == t + 2);
        Block pair{{0, 1}, BlockKind::clique};
        CHECK(count_feasible_prefixes(pair, tau, complete_graph(2)) == t * t + 3 * t + 4);
        Block triple{{0, 1, 2}, BlockKind::clique};
        CHECK(count_feasible_prefixes(triple, tau, complete_graph(3)) == t * t * t + 3 * t * t + 8 * t + 8);
        for (int s = 2; s <= 5; ++s) {
            std::vector<int> vertices(static_cast<std::size_t>(s));
            std::iota(vertices.begin(), vertices.end(), 0);
            Block star{vertices, BlockKind::star};
            CHECK(count_feasible_prefixes(star, tau, star_graph(s - 1)) == f_star(s, tau));
        }
    }
    CHECK(count_feasible_prefixes({{0, 1, 2}, BlockKind::clique}, 1, complete_graph(3)) == 20);
}

TEST_CASE("feasible prefixes are enumerated in canonical order") {
    auto inst = uniform_instance(complete_graph(2), {1, 2, 3}, {0, 1});
    auto equality = feasible_prefixes({{0, 1}, BlockKind::clique}, 1, inst, Pruning::equality);
    CHECK(equality.size() == 8);
    CHECK(std::is_sorted(equality.begin(), equality.end()));
    auto strong = feasible_prefixes({{0, 1}, BlockKind::clique}, 1, inst, Pruning::strengthened);
    CHECK(strong.size() == 8);
    // tau = 2: the exact symbols 2 and 3 sit one label apart
    auto wide = uniform_instance(complete_graph(2), {1, 2, 3}, {0, 1, 2});
    auto narrow = uniform_instance(complete_graph(2), {1, 2, 3}, {0, 2});
    CHECK(feasible_prefixes({{0, 1}, BlockKind::clique}, 2, wide, Pruning::equality).size() == 14);
    CHECK(feasible_prefixes({{0, 1}, BlockKind::clique}, 2, wide, Pruning::strengthened).size() == 12);
    CHECK(feasible_prefixes({{0, 1}, BlockKind::clique}, 2, narrow, Pruning::strengthened).size() == 14);
}

TEST_CASE("f_star and alpha") {
    CHECK(f_star(2, 1) == 8);
    CHECK(f_star(3, 1) == 22);
    for (int tau = 0; tau <= 8; ++tau)
        CHECK(f_star(2, tau) == static_cast<std::uint64_t>(tau * tau + 3 * tau + 4));
    CHECK(alpha(1, 2) == doctest::Approx(std::sqrt(8.0)));
    CHECK(alpha(1, 3) == doctest::Approx(std::cbrt(22.0)));
    CHECK(alpha(2, 2) == doctest::Approx(std::sqrt(14.0)));
    CHECK(alpha(1, 6) == doctest::Approx(std::pow(518.0, 1.0 / 6.0)));
}

TEST_CASE("predict") {
    Graph matching(4, {{0, 1}, {2, 3}});
    auto p = clique_partition(matching);
    auto est = predict(matching, p, 1);
    CHECK(est.per_block_f == std::vector<std::uint64_t>{8, 8});
    CHECK(est.product.to_string() == "64");
    CHECK(est.base == doctest::Approx(std::sqrt(8.0)));
    CHECK(predict(matching, p, 2).base == doctest::Approx(std::sqrt(14.0)));
    CHECK(predict(cycle_graph(6), singleton_partition(cycle_graph(6)), 1).product.to_string() == "729");
}

TEST_CASE("big products") {
    BigUnsigned x(1);
    for (int i = 0; i < 4; ++i)
        x *= 4294967296ULL;
    CHECK(x.to_string() == "340282366920938463463374607431768211456");
    CHECK(x.log() == doctest::Approx(128 * std::log(2.0)));
    CHECK(BigUnsigned(7) < x);
    CHECK(BigUnsigned(0).to_string() == "0");
}

TEST_CASE("partition choice") {
    CHECK(parse_partition_choice("k1d:4").strategy == Strategy::k1d);
    CHECK(parse_partition_choice("k1d:4").d == 4);
    CHECK(to_string(parse_partition_choice("clique")) == "clique");
    CHECK(to_string(parse_partition_choice("auto")) == "auto");
    CHECK_THROWS_AS(parse_partition_choice("stars"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition_choice("k1d:"), std::invalid_argument);
}

TEST_CASE("build_partition covers every component") {
    Graph g(7, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {5, 3}});
    for (auto name : {"singleton", "star", "k1d:3", "clique", "auto"}) {
        auto p = build_partition(g, parse_partition_choice(name), 1);
        check_partition(g, p);
    }
    auto automatic = build_partition(g, parse_partition_choice("auto"), 1);
    auto single = build_partition(g, parse_partition_choice("singleton"), 1);
    CHECK(predict(g, automatic, 1).product <= predict(g, single, 1).product);
}

}
