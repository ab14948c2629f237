#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bdim/generators.hpp"
#include "bdim/treedec.hpp"

using namespace bdim;

TEST_CASE("td parse and write") {
    TreeDecomposition T = parse_td("s td 1 1 1\nb 1 1\n");
    CHECK(T.m == 1);
    CHECK(T.bags[1] == std::vector<int>{1});

    std::string text = "c a comment\ns td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n";
    TreeDecomposition U = parse_td(text);
    std::string out = write_td(U);
    TreeDecomposition V = parse_td(out);
    CHECK(U.bags == V.bags);
    CHECK(U.edges == V.edges);
    CHECK(U.m == V.m);
    CHECK(U.n == V.n);

    CHECK_THROWS_AS(parse_td("s td 2 2 3\nb 1 1 2\nb 2 2 3\nb 2 1\n1 2\n"), ParseError);      // duplicate bag id
    CHECK_THROWS_AS(parse_td("s td 2 2 3\nb 1 1 2\nb 2 2 3\nb 3 1\n"), ParseError);           // bag id out of range
    CHECK_THROWS_AS(parse_td("s td 3 2 3\nb 1 1 2\nb 2 2 3\n1 2\n"), InconsistentHeader);     // bag count mismatch
    CHECK_THROWS_AS(parse_td("s td 2 1 3\nb 1 1 2\nb 2 2 3\n1 2\n"), InconsistentHeader);     // bag too large
    CHECK_THROWS_AS(parse_td("b 1 1\n"), ParseError);                                         // missing header
}

TEST_CASE("validate the three properties") {
    // path graph 1-2-3, bags {1,2},{2,3}
    Graph G(3, {{1, 2}, {2, 3}});
    TreeDecomposition T = parse_td("s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n");
    auto rep = validate(G, T);
    CHECK(rep.valid());
    CHECK(rep.width == 1);

    // adding the edge (1,3) breaks property 2
    Graph G2(3, {{1, 2}, {2, 3}, {1, 3}});
    auto rep2 = validate(G2, T);
    CHECK(!rep2.valid());
    CHECK(rep2.uncovered_edges == std::vector<std::pair<int, int>>{{1, 3}});

    // vertex 1 in two far-apart bags breaks property 3
    TreeDecomposition T3 = parse_td("s td 3 1 2\nb 1 1\nb 2 2\nb 3 1\n1 2\n2 3\n");
    Graph G3(2, {});
    auto rep3 = validate(G3, T3);
    CHECK(!rep3.valid());
    CHECK(rep3.disconnected_vertices == std::vector<int>{1});

    // vertex missing from every bag breaks property 1
    Graph G4(4, {});
    auto rep4 = validate(G4, T);
    CHECK(rep4.uncovered_vertices == std::vector<int>{4});
}

TEST_CASE("min-fill heuristic") {
    // a tree gives width 1
    Graph tree(6, {{1, 2}, {1, 3}, {3, 4}, {3, 5}, {5, 6}});
    auto T = heuristic_decompose(tree);
    auto rep = validate(tree, T);
    CHECK(rep.valid());
    CHECK(rep.width == 1);

    // K4 forces a bag of size 4
    Graph k4(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    auto T2 = heuristic_decompose(k4);
    auto rep2 = validate(k4, T2);
    CHECK(rep2.valid());
    CHECK(rep2.width == 3);

    // isolated vertices give width 0
    Graph iso(5, {});
    auto T3 = heuristic_decompose(iso);
    auto rep3 = validate(iso, T3);
    CHECK(rep3.valid());
    CHECK(rep3.width == 0);
}

TEST_CASE("normalize, distinct roots") {
    // one bag holding three elements: the node splits into a chain
    Poset P = make_poset(3, {{1, 2}, {2, 3}});
    TreeDecomposition T = parse_td("s td 1 3 3\nb 1 1 2 3\n");
    auto N = normalize(P, T);
    CHECK(N.td.m == 3);
    CHECK(N.width == 2);
    std::vector<char> seen(N.td.m + 1, 0);
    for (int z = 1; z <= 3; ++z) {
        CHECK(N.root_of[z] >= 1);
        CHECK(!seen[N.root_of[z]]);
        seen[N.root_of[z]] = 1;
    }
    CHECK(validate(cover_graph(P), N.td).valid());

    // already-distinct roots: node count unchanged
    Poset C = make_poset(2, {{1, 2}});
    TreeDecomposition T2 = parse_td("s td 2 2 2\nb 1 1\nb 2 1 2\n1 2\n");
    auto N2 = normalize(C, T2);
    CHECK(N2.td.m == 2);

    // invalid input is rejected
    TreeDecomposition bad = parse_td("s td 1 2 2\nb 1 1\n");
    CHECK_THROWS_AS(normalize(C, bad), InvalidDecomposition);
}

TEST_CASE("normalize properties on random instances") {
    for (int seed = 0; seed < 100; ++seed) {
        auto G = gen_random_bounded_tw(6 + seed % 35, 1 + seed % 3, 1000 + seed);
        const Poset& P = G.poset;
        int w_before = G.decomposition->width();
        auto N = normalize(P, *G.decomposition);
        CHECK(N.width == w_before);
        CHECK(validate(cover_graph(P), N.td).valid());
        // injective roots; root_of(z) is the unique minimum-depth node of z's bag subtree
        std::vector<char> used(N.td.m + 1, 0);
        for (int z = 1; z <= P.n; ++z) {
            int r = N.root_of[z];
            CHECK(!used[r]);
            used[r] = 1;
            int mindepth = 1 << 30, cnt = 0;
            for (int t = 1; t <= N.td.m; ++t)
                if (std::binary_search(N.bag(t).begin(), N.bag(t).end(), z)) {
                    if (N.tree.depth[t] < mindepth) {
                        mindepth = N.tree.depth[t];
                        cnt = 1;
                    } else if (N.tree.depth[t] == mindepth) {
                        ++cnt;
                    }
                }
            CHECK(cnt == 1);
            CHECK(N.tree.depth[r] == mindepth);
        }
        // deterministic: rebuilding yields the same child order
        auto N2 = normalize(P, *G.decomposition);
        CHECK(N.tree.children == N2.tree.children);
        CHECK(N.root_of == N2.root_of);
    }
}

TEST_CASE("gr format round trip") {
    Graph G(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
    Graph H = parse_gr(write_gr(G));
    CHECK(G.n == H.n);
    CHECK(G.edges == H.edges);
    CHECK_THROWS_AS(parse_gr("p tw 2 2\n1 2\n"), InconsistentHeader);
}
