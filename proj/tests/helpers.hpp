#ifndef BDIM_TEST_HELPERS_HPP
#define BDIM_TEST_HELPERS_HPP

#include <random>
#include <vector>

#include "bdim/poset.hpp"
#include "bdim/tools.hpp"
#include "bdim/treedec.hpp"

namespace bdim::testing {

inline uint64_t draw(std::mt19937_64& rng, uint64_t bound) { return bound == 0 ? 0 : rng() % bound; }

inline RootedTree random_tree(std::mt19937_64& rng, int n) {
    RootedTree T;
    T.root = 1;
    T.parent.assign(n + 1, 0);
    T.children.assign(n + 1, {});
    T.depth.assign(n + 1, 0);
    for (int v = 2; v <= n; ++v) {
        int p = 1 + static_cast<int>(draw(rng, v - 1));
        T.parent[v] = p;
        T.children[p].push_back(v);
        T.depth[v] = T.depth[p] + 1;
    }
    // shuffle child orders
    for (int v = 1; v <= n; ++v)
        for (int i = static_cast<int>(T.children[v].size()) - 1; i > 0; --i)
            std::swap(T.children[v][i], T.children[v][draw(rng, i + 1)]);
    return T;
}

inline EdgeColoring random_coloring(std::mt19937_64& rng, const RootedTree& T) {
    EdgeColoring c(T.size());
    for (int v = 2; v <= T.size(); ++v) {
        switch (draw(rng, 3)) {
            case 0: c.set(v, EdgeColor::Uncolored); break;
            case 1: c.set(v, EdgeColor::Red); break;
            default: c.set(v, EdgeColor::Green); break;
        }
    }
    return c;
}

// random forest-shaped cover graph with random edge orientations
inline Poset random_forest_poset(std::mt19937_64& rng, int n) {
    std::vector<std::pair<int, int>> rel;
    for (int v = 2; v <= n; ++v) {
        if (draw(rng, 5) == 0) continue; // occasionally start a new component
        int p = 1 + static_cast<int>(draw(rng, v - 1));
        if (draw(rng, 2) == 0)
            rel.emplace_back(p, v);
        else
            rel.emplace_back(v, p);
    }
    return make_poset(n, rel);
}

inline Poset chain_poset(int n) {
    std::vector<std::pair<int, int>> rel;
    for (int i = 1; i < n; ++i) rel.emplace_back(i, i + 1);
    return make_poset(n, rel);
}

inline Poset antichain_poset(int n) { return make_poset(n, {}); }

} // namespace bdim::testing

#endif
