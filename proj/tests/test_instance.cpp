#include <doctest.h>

#include "gltc/instance.hpp"
#include "gltc/oracle.hpp"
#include "gltc/solver.hpp"
#include "support.hpp"

using namespace gltc;
using namespace gltc::testing;

TEST_SUITE("instance") {

TEST_CASE("smallest document parses") {
    auto inst = parse_instance("gltc 1 0\nv 1 1 2\n");
    CHECK(inst.vertex_count() == 1);
    CHECK(inst.labels(0) == LabelSet{1, 2});
}

TEST_CASE("difference sets are order-insensitive and deduplicated") {
    auto inst = parse_instance("gltc 2 1\nv 1 1\nv 2 2\ne 1 2 1 0 1\n");
    CHECK(inst.forbidden(0, 1) == DiffSet{0, 1});
    CHECK(inst.forbidden(1, 0) == DiffSet{0, 1});
}

TEST_CASE("comments, blank lines and tabs are accepted") {
    auto inst = parse_instance("# header follows\n\ngltc\t2 1\nv 2  3 1 3\n# middle\nv 1\ne 2 1 0\n");
    CHECK(inst.labels(0).empty());
    CHECK(inst.labels(1) == LabelSet{1, 3});
    CHECK(inst.graph().adjacent(0, 1));
}

TEST_CASE("parse errors carry the line number") {
    auto message = [](const char *text) {
        try {
            parse_instance(text);
        } catch (const ParseError &e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK(message("gltc 2 1\nv 1 1\nv 2 1\ne 1 2 1\n") == "line 4: edge 1-2: 0 not in difference set");
    CHECK(message("gltc 2 0\nv 1 1\nv 3 1\n") == "line 3: vertex id 3 out of range 1..2");
    CHECK(message("gltc 2 0\nv 1 1\nv 1 2\n") == "line 3: duplicate vertex 1");
    CHECK(message("gltc 2 2\nv 1 1\nv 2 1\ne 1 2 0\ne 2 1 0\n") == "line 5: duplicate edge 1-2");
    CHECK(message("gltc 1 0\nv 1 0\n") == "line 2: label 0 out of range");
    CHECK(message("gltc 1 0\nv 1 x\n") == "line 2: expected an integer, got 'x'");
    CHECK(message("graph 1 0\n").rfind("line 1:", 0) == 0);
    CHECK(message("gltc 2 0\nv 1 1\n").rfind("line 2:", 0) == 0);
    CHECK(message("").rfind("line 1:", 0) == 0);
}

TEST_CASE("constructor rejects malformed data") {
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Instance(Graph(1), {{0}}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Instance(path_graph(2), {{1}, {1}}, {{1}}), std::invalid_argument);
    CHECK_THROWS_AS(Instance(path_graph(2), {{1}, {1}}, {{0, -1}}), std::invalid_argument);
}

TEST_CASE("serialize round-trips") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        auto inst = corpus_instance(seed);
        CHECK(parse_instance(serialize(inst)) == inst);
    }
    CHECK(serialize(parse_instance("gltc 2 1\nv 2 3 1\nv 1 2\ne 2 1 1 0\n")) == "gltc 2 1\nv 1 2\nv 2 1 3\ne 1 2 0 1\n");
}

TEST_CASE("validate reads off tau, lambda_max and connectivity") {
    auto k2 = uniform_instance(complete_graph(2), {1, 2, 3}, {0, 1});
    auto stats = validate(k2);
    CHECK(stats.tau == 1);
    CHECK(stats.lambda_max == 3);
    CHECK(stats.connected);
    CHECK_FALSE(stats.has_empty_list());

    auto two = uniform_instance(Graph(2), {1}, {});
    CHECK_FALSE(validate(two).connected);

    auto uhf = reduce_tcoloring(path_graph(3), {0, 7, 14, 15}, std::vector<LabelSet>(3, range_labels(1, 20)));
    CHECK(validate(uhf).tau == 15);

    auto empty = Instance(Graph(2), {{}, {1}}, {});
    CHECK(validate(empty).empty_list_vertices == std::vector<int>{0});
}

TEST_CASE("connected components") {
    auto tri = uniform_instance(complete_graph(3), {1, 2}, {0});
    auto comps = connected_components(tri);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].instance == tri);

    CHECK(connected_components(uniform_instance(Graph(2), {1}, {})).size() == 2);

    // P2 on {0,1} and P3 on {2,3,4}
    auto g = Graph(5, {{0, 1}, {2, 3}, {3, 4}});
    auto parts = connected_components(uniform_instance(g, {1, 2}, {0}));
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].instance.vertex_count() == 2);
    CHECK(parts[1].instance.vertex_count() == 3);
    CHECK(parts[1].vertices == std::vector<int>{2, 3, 4});
}

TEST_CASE("disconnected answer is the conjunction of component answers") {
    for (std::uint64_t seed = 1; seed <= 80; ++seed) {
        auto inst = corpus_instance(seed);
        bool all = true;
        for (const auto &c : connected_components(inst))
            all = all && brute_force_solve(c.instance).decision == Decision::yes;
        CHECK((brute_force_solve(inst).decision == Decision::yes) == all);
    }
}

TEST_CASE("compress_gaps") {
    SUBCASE("no gap") {
        auto inst = uniform_instance(complete_graph(2), {1, 2}, {0, 1});
        CHECK(compress_gaps(inst).instance == inst);
    }
    SUBCASE("wide gap shrinks to tau+1") {
        auto inst = Instance(complete_graph(2), {{1}, {100}}, {{0, 1}});
        auto c = compress_gaps(inst);
        CHECK(c.instance.labels(0) == LabelSet{1});
        CHECK(c.instance.labels(1) == LabelSet{3});
        CHECK(c.original[3] == 100);
        CHECK(brute_force_solve(c.instance).decision == brute_force_solve(inst).decision);
    }
    SUBCASE("leading gap removed") {
        auto inst = Instance(Graph(1), {{5}}, {});
        auto c = compress_gaps(inst);
        CHECK(c.instance.labels(0) == LabelSet{1});
        CHECK(c.original[1] == 5);
    }
    SUBCASE("answer preserved on the corpus") {
        for (std::uint64_t seed = 1; seed <= 150; ++seed) {
            auto inst = corpus_instance(seed);
            CHECK(brute_force_solve(compress_gaps(inst).instance).decision == brute_force_solve(inst).decision);
        }
    }
}

TEST_CASE("graph_square") {
    CHECK(graph_square(path_graph(3)) == complete_graph(3));
    CHECK(graph_square(complete_graph(2)) == complete_graph(2));
    CHECK(graph_square(cycle_graph(5)) == complete_graph(5));
    CHECK(graph_square(complete_graph(4)) == complete_graph(4));
    CHECK(graph_square(path_graph(5)).edge_count() == 7);
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const auto g = corpus_instance(seed).graph();
        auto sq = graph_square(g);
        CHECK(sq.edge_count() >= g.edge_count());
        for (const auto &e : g.edges())
            CHECK(sq.adjacent(e.first, e.second));
    }
}

TEST_CASE("reduce_list_coloring") {
    auto tri = complete_graph(3);
    auto yes = reduce_list_coloring(tri, std::vector<LabelSet>(3, {1, 2, 3}));
    CHECK(validate(yes).tau == 0);
    CHECK(brute_force_solve(yes).decision == Decision::yes);
    CHECK(brute_force_solve(reduce_list_coloring(tri, std::vector<LabelSet>(3, {1, 2}))).decision == Decision::no);
    CHECK(brute_force_solve(reduce_list_coloring(path_graph(2), {{1}, {1}})).decision == Decision::no);
}

TEST_CASE("reduce_lpq") {
    auto p3 = reduce_lpq(path_graph(3), 2, 1, std::vector<LabelSet>(3, {1, 2, 3}));
    CHECK(p3.graph() == complete_graph(3));
    CHECK(p3.forbidden(0, 1) == DiffSet{0, 1});
    CHECK(p3.forbidden(1, 2) == DiffSet{0, 1});
    CHECK(p3.forbidden(0, 2) == DiffSet{0});

    auto k2 = reduce_lpq(complete_graph(2), 2, 1, std::vector<LabelSet>(2, {1, 2, 3}));
    CHECK(k2.graph() == complete_graph(2));
    CHECK(k2.forbidden(0, 1) == DiffSet{0, 1});

    // the middle vertex needs two distinct labels at distance >= 2 from its own, impossible within 1..3
    CHECK(brute_force_solve(p3).decision == Decision::no);
    CHECK(brute_force_solve(reduce_lpq(path_graph(3), 2, 1, std::vector<LabelSet>(3, {1, 2, 3, 4}))).decision ==
          Decision::yes);

    CHECK_THROWS_AS(reduce_lpq(path_graph(3), 1, 2, std::vector<LabelSet>(3, {1})), std::invalid_argument);
    CHECK_THROWS_AS(reduce_lpq(path_graph(3), 1, 0, std::vector<LabelSet>(3, {1})), std::invalid_argument);
}

TEST_CASE("reduce_channel") {
    auto g = path_graph(3);
    auto inst = reduce_channel(g, {3, 1}, std::vector<LabelSet>(3, {1}));
    CHECK(inst.forbidden(0, 1) == DiffSet{0, 1, 2});
    CHECK(inst.forbidden(1, 2) == DiffSet{0});

    auto p2 = reduce_channel(path_graph(2), {2}, std::vector<LabelSet>(2, {1, 2, 3}));
    auto r = brute_force_solve(p2);
    REQUIRE(r.decision == Decision::yes);
    CHECK(r.witness->labels == std::vector<int>{1, 3});
}

TEST_CASE("reduce_tcoloring") {
    auto yes = reduce_tcoloring(complete_graph(2), {0, 2}, std::vector<LabelSet>(2, {1, 2, 3, 4}));
    auto r = brute_force_solve(yes);
    REQUIRE(r.decision == Decision::yes);
    CHECK(r.witness->labels == std::vector<int>{1, 2});
    auto no = reduce_tcoloring(complete_graph(2), {0, 1, 2, 3}, std::vector<LabelSet>(2, {1, 2, 3, 4}));
    CHECK(brute_force_solve(no).decision == Decision::no);
    CHECK_THROWS_AS(reduce_tcoloring(complete_graph(2), {1, 2}, std::vector<LabelSet>(2, {1})), std::invalid_argument);
}

TEST_CASE("every reduction keeps 0 in each difference set") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto base = corpus_instance(seed);
        const auto &g = base.graph();
        auto lists = base.lists();
        std::vector<Instance> made{reduce_list_coloring(g, lists), reduce_lpq(g, 3, 2, lists),
                                   reduce_channel(g, std::vector<int>(g.edge_count(), 4), lists),
                                   reduce_tcoloring(g, {0, 5}, lists)};
        for (const auto &inst : made)
            for (const auto &d : inst.all_diffs())
                CHECK(d.front() == 0);
    }
}

TEST_CASE("relabel and induced") {
    auto inst = Instance(path_graph(3), {{1}, {2}, {3}}, {{0, 1}, {0, 2}});
    auto r = inst.relabel({2, 0, 1});
    CHECK(r.labels(0) == LabelSet{3});
    CHECK(r.forbidden(0, 2) == DiffSet{0, 2});
    auto sub = inst.induced({1, 2});
    CHECK(sub.vertex_count() == 2);
    CHECK(sub.forbidden(0, 1) == DiffSet{0, 2});
}

}
