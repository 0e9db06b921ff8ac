#include <doctest.h>

#include <sstream>

#include "euler/graph.hpp"

using namespace euler;

namespace {

std::size_t count_edges(const BipartiteGraph& g) { return g.edges().size(); }

}  // namespace

TEST_CASE("build_graph colours each component from its lowest vertex") {
    const Edge edges[] = {{0, 1}, {1, 2}, {3, 4}};
    const BipartiteGraph g = build_graph(5, edges);
    CHECK(g.is_bipartite());
    CHECK(g.parts() == std::vector<int>{1, 2, 1, 1, 2});
    CHECK(g.part_mask(1) == (bit(0) | bit(2) | bit(3)));
    CHECK(g.neighbours(1) == (bit(0) | bit(2)));
}

TEST_CASE("odd cycles are flagged, even cycles are not") {
    CHECK_FALSE(families::cycle(3).is_bipartite());
    CHECK_FALSE(families::cycle(7).is_bipartite());
    CHECK(families::cycle(4).is_bipartite());
    CHECK(families::cycle(10).is_bipartite());
}

TEST_CASE("invalid edge lists are rejected") {
    const Edge loop[] = {{1, 1}};
    const Edge range[] = {{0, 3}};
    const Edge dup[] = {{0, 1}, {1, 0}};
    CHECK_THROWS_AS(build_graph(2, loop), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(3, range), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(2, dup), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(65, {}), std::invalid_argument);
}

TEST_CASE("bipartition is stable") {
    const BipartiteGraph g = families::grid2(5);
    const BipartiteGraph again = build_graph(g.size(), g.edges());
    CHECK(g.parts() == again.parts());
}

TEST_CASE("part swap exchanges the labels") {
    const BipartiteGraph g = families::path(4);
    const BipartiteGraph s = g.with_parts_swapped();
    CHECK(s.part_mask(1) == g.part_mask(2));
    CHECK(s.part_mask(2) == g.part_mask(1));
    CHECK(s.edges() == g.edges());
}

TEST_CASE("products with a path") {
    SUBCASE("comb shape") {
        const BipartiteGraph comb = families::comb(5);
        CHECK(comb.size() == 10);
        CHECK(count_edges(comb) == 9);
    }
    SUBCASE("2 x 3 grid") {
        const BipartiteGraph grid = families::grid2(3);
        CHECK(grid.size() == 6);
        CHECK(count_edges(grid) == 7);
    }
    SUBCASE("m = 1 gives the base graph") {
        const BipartiteGraph c4 = families::cycle(4);
        CHECK(product_with_path({c4, 0b0101, 1}).edges() == c4.edges());
    }
    SUBCASE("S = V(G) is the Cartesian product") {
        for (int m = 1; m <= 6; ++m) {
            const BipartiteGraph g = families::star(3);
            const auto p = product_with_path({g, g.all_vertices(), m});
            CHECK(count_edges(p) == static_cast<std::size_t>(m) * count_edges(g) + (m - 1) * g.size());
        }
    }
    SUBCASE("vertex (v, i) is i * n + v") {
        const auto p = product_with_path({families::path(2), bit(0), 3});
        CHECK(p.neighbours(2) == (bit(0) | bit(3) | bit(4)));
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(product_with_path({families::path(2), bit(2), 2}), std::invalid_argument);
        CHECK_THROWS_AS(product_with_path({families::path(2), bit(0), 0}), std::invalid_argument);
        CHECK_THROWS_AS(product_with_path({families::path(2), bit(0), 33}), std::invalid_argument);
    }
}

TEST_CASE("products with a cycle") {
    const BipartiteGraph p1 = families::path(1);
    CHECK(product_with_cycle({p1, bit(0), 6}).edges() == families::cycle(6).edges());
    CHECK(product_with_cycle({p1, bit(0), 2}).edges() == families::path(2).edges());
}

TEST_CASE("disjoint union") {
    const auto a = disjoint_union(families::path(2), families::path(2));
    CHECK(a.size() == 4);
    CHECK(count_edges(a) == 2);
    const auto b = disjoint_union(families::path(1), families::path(1));
    CHECK(b.size() == 2);
    CHECK(count_edges(b) == 0);
    const auto c = disjoint_union(families::cycle(4), families::path(3));
    CHECK(c.size() == 7);
    CHECK(count_edges(c) == 6);
}

TEST_CASE("graph text format round-trips") {
    std::istringstream in("# comment\n4\n0 1\n\n1 2\n2 3\n");
    const BipartiteGraph g = read_graph(in);
    CHECK(g == families::path(4));
    std::ostringstream out;
    write_graph(out, g);
    std::istringstream back(out.str());
    CHECK(read_graph(back) == g);

    std::istringstream bad("3\n0 7\n");
    CHECK_THROWS(read_graph(bad));
}

TEST_CASE("vertex lists") {
    CHECK(parse_vertex_list("", 4) == 0);
    CHECK(parse_vertex_list("0,2", 4) == (bit(0) | bit(2)));
    CHECK(parse_vertex_list(" 3 ", 4) == bit(3));
    CHECK_THROWS(parse_vertex_list("4", 4));
    CHECK_THROWS(parse_vertex_list("1,x", 4));
}

TEST_CASE("digraphs") {
    const Edge arcs[] = {{0, 1}, {2, 1}};
    CHECK(build_digraph(3, arcs).arcs.size() == 2);
    const Edge loop[] = {{2, 2}};
    CHECK_THROWS_AS(build_digraph(3, loop), std::invalid_argument);
}
