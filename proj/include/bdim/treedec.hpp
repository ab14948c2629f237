#ifndef BDIM_TREEDEC_HPP
#define BDIM_TREEDEC_HPP

#include <string>
#include <utility>
#include <vector>

#include "bdim/graph.hpp"
#include "bdim/poset.hpp"

namespace bdim {

// A tree-decomposition: tree nodes 1..m, undirected tree edges, one bag per node.
struct TreeDecomposition {
    int m = 0;                           // number of tree nodes
    int n = 0;                           // number of graph vertices it speaks about
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> bags;  // bags[1..m], each sorted

    int width() const;
};

// PACE 2017 .td: `s td <#bags> <width+1> <n>`, `b <i> <v...>` lines, tree edges.
TreeDecomposition parse_td(const std::string& text);
std::string write_td(const TreeDecomposition& T);

// Validation report for the three tree-decomposition properties.
struct TdReport {
    std::vector<int> uncovered_vertices;               // property (1)
    std::vector<std::pair<int, int>> uncovered_edges;  // property (2)
    std::vector<int> disconnected_vertices;            // property (3)
    bool tree_ok = true;                               // connected and acyclic
    int width = -1;

    bool valid() const {
        return tree_ok && uncovered_vertices.empty() && uncovered_edges.empty() && disconnected_vertices.empty();
    }
    std::string describe() const;
};

TdReport validate(const Graph& G, const TreeDecomposition& T);

// Min-fill elimination heuristic; valid for any nonempty graph, no optimality claim.
TreeDecomposition heuristic_decompose(const Graph& G);

// Rooted tree with an explicit left-to-right child order. Nodes 1..m.
struct RootedTree {
    int root = 1;
    std::vector<int> parent;                 // parent[root] == 0
    std::vector<std::vector<int>> children;  // ordered
    std::vector<int> depth;

    int size() const { return static_cast<int>(parent.size()) - 1; }
    std::vector<int> preorder() const;       // left-to-right
    // Closest-to-root node on the path between u and v.
    int meet(int u, int v) const;
    bool is_ancestor_or_self(int a, int b) const; // a on the path root..b
    std::vector<int> path(int u, int v) const;    // node sequence u..v
};

// Rooted, child-ordered decomposition where every element has its own root bag.
struct NormalizedDecomposition {
    TreeDecomposition td;            // relabeled; td.edges consistent with tree
    RootedTree tree;
    std::vector<int> root_of;        // element -> tree node, injective
    std::vector<int> preorder_rank;  // tree node -> rank in left-to-right preorder
    int width = -1;

    const std::vector<int>& bag(int t) const { return td.bags[t]; }
    // Elements z with root_of[z] == t (0 or 1 after normalization).
    std::vector<int> rooted_at(int t) const;
};

// Roots the decomposition, splits nodes so that the lowest bag of each element
// is unique, and fixes a deterministic child order. Width is preserved.
NormalizedDecomposition normalize(const Poset& P, const TreeDecomposition& T);

Graph cover_graph(const Poset& P);

} // namespace bdim

#endif
