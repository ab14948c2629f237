#include "bdim/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace bdim {

GeneratorOutput gen_standard_example(int n) {
    if (n < 2) throw NTooSmall("standard example needs n >= 2");
    std::vector<std::pair<int, int>> rel;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) rel.emplace_back(i, n + j);
    GeneratorOutput out;
    out.poset = make_poset(2 * n, rel);
    for (int i = 1; i <= n; ++i) {
        out.witness["a" + std::to_string(i)] = i;
        out.witness["b" + std::to_string(i)] = n + i;
    }
    return out;
}

GeneratorOutput gen_kelly(int n) {
    if (n < 3) throw NTooSmall("kelly construction needs n >= 3");
    // ids: a_i = i, b_i = n+i, v_i = 2n+i (i<=n-1), u_i = 3n-1+i (i<=n-1)
    const int a0 = 0, b0 = n, v0 = 2 * n, u0 = 3 * n - 1;
    const int total = 4 * n - 2;
    std::vector<std::pair<int, int>> rel;
    for (int i = 1; i <= n - 2; ++i) {
        rel.emplace_back(v0 + i, v0 + i + 1); // v_i < v_{i+1}
        rel.emplace_back(u0 + i + 1, u0 + i); // u_{i+1} < u_i
    }
    for (int i = 1; i <= n - 1; ++i) rel.emplace_back(a0 + i, v0 + i);     // a_i < v_i
    for (int i = 2; i <= n; ++i) rel.emplace_back(a0 + i, u0 + i - 1);     // a_i < u_{i-1}
    for (int j = 2; j <= n; ++j) rel.emplace_back(v0 + j - 1, b0 + j);     // v_{j-1} < b_j
    for (int j = 1; j <= n - 1; ++j) rel.emplace_back(u0 + j, b0 + j);     // u_j < b_j

    GeneratorOutput out;
    out.poset = make_poset(total, rel);
    for (int i = 1; i <= n; ++i) {
        out.witness["a" + std::to_string(i)] = a0 + i;
        out.witness["b" + std::to_string(i)] = b0 + i;
    }

    // Path decomposition sweeping i = 1..n:
    //   {a1,v1,u1}, {b1,u1,v1},
    //   per i in 2..n-1: {a_i,v_i,v_{i-1},u_{i-1}}, {u_{i-1},u_i,v_{i-1},v_i}, {b_i,v_{i-1},u_i,v_i},
    //   {a_n,u_{n-1},v_{n-1}}, {b_n,v_{n-1},u_{n-1}}
    TreeDecomposition T;
    T.n = total;
    std::vector<std::vector<int>> bags;
    bags.push_back({a0 + 1, v0 + 1, u0 + 1});
    bags.push_back({b0 + 1, u0 + 1, v0 + 1});
    for (int i = 2; i <= n - 1; ++i) {
        bags.push_back({a0 + i, v0 + i, v0 + i - 1, u0 + i - 1});
        bags.push_back({u0 + i - 1, u0 + i, v0 + i - 1, v0 + i});
        bags.push_back({b0 + i, v0 + i - 1, u0 + i, v0 + i});
    }
    bags.push_back({a0 + n, u0 + n - 1, v0 + n - 1});
    bags.push_back({b0 + n, v0 + n - 1, u0 + n - 1});

    T.m = static_cast<int>(bags.size());
    T.bags.assign(T.m + 1, {});
    for (int t = 1; t <= T.m; ++t) {
        std::sort(bags[t - 1].begin(), bags[t - 1].end());
        T.bags[t] = std::move(bags[t - 1]);
    }
    for (int t = 1; t < T.m; ++t) T.edges.emplace_back(t, t + 1);
    out.decomposition = std::move(T);
    return out;
}

namespace {

// Deterministic bounded sampler; avoids std::uniform_int_distribution, whose
// output is implementation-defined.
uint64_t draw(std::mt19937_64& rng, uint64_t bound) { return bound == 0 ? 0 : rng() % bound; }

} // namespace

GeneratorOutput gen_random_bounded_tw(int n, int k, uint64_t seed) {
    if (n < 1) throw NTooSmall("need n >= 1");
    if (k < 1) throw NTooSmall("need k >= 1");
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 12345);

    // global linear order: orientation target
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 1);
    for (int i = n - 1; i > 0; --i) std::swap(order[i], order[draw(rng, i + 1)]);
    std::vector<int> pos(n + 1);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;

    // one tree node per element; bag = {element} + subset of parent's bag
    TreeDecomposition T;
    T.m = n;
    T.n = n;
    T.bags.assign(n + 1, {});
    T.bags[1] = {1};
    std::vector<std::pair<int, int>> rel;
    for (int z = 2; z <= n; ++z) {
        int p = 1 + static_cast<int>(draw(rng, z - 1));
        std::vector<int> inherit = T.bags[p];
        // keep at most k of the parent's bag
        while (static_cast<int>(inherit.size()) > k) inherit.erase(inherit.begin() + draw(rng, inherit.size()));
        for (int w : inherit)
            if (draw(rng, 2) == 0) {
                int u = pos[z] < pos[w] ? z : w;
                int v = u == z ? w : z;
                rel.emplace_back(u, v);
            }
        inherit.push_back(z);
        std::sort(inherit.begin(), inherit.end());
        T.bags[z] = std::move(inherit);
        T.edges.emplace_back(p, z);
    }
    std::sort(T.edges.begin(), T.edges.end());

    GeneratorOutput out;
    out.poset = make_poset(n, rel);
    out.decomposition = std::move(T);
    return out;
}

} // namespace bdim
