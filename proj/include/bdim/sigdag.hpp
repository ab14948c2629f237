#ifndef BDIM_SIGDAG_HPP
#define BDIM_SIGDAG_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bdim/poset.hpp"
#include "bdim/treedec.hpp"

namespace bdim {

// Comparison of an element against one bag representative.
enum class Rel : uint8_t { LT, GT, INCOMP, EQ, STAR };
using VecKey = std::vector<Rel>; // length k+1

std::string veckey_str(const VecKey& k);

struct ElementColoring {
    std::vector<int> color; // element -> 1..k+1
    int num_colors = 0;
};

// Greedy coloring along any order compatible with root-below-root; elements
// of one bag end up with pairwise distinct colors, at most width+1 in total.
ElementColoring greedy_color(const Poset& P, const NormalizedDecomposition& N);

// rep(t, i): the unique element of color i in bag t, or 0 when undefined.
struct RepTable {
    int width1 = 0;
    std::vector<int> rep; // (t-1)*width1 + (i-1)
    int at(int t, int i) const { return rep[static_cast<size_t>(t - 1) * width1 + (i - 1)]; }
};

RepTable build_reps(const Poset& P, const NormalizedDecomposition& N, const ElementColoring& c);

// vec(z, t); requires root_of[z] on the path from the tree root to t.
VecKey comparison_vec(const Poset& P, const NormalizedDecomposition& N, const RepTable& reps,
                      const ElementColoring& c, int z, int t);

struct DagVertex {
    int node = 0; // tree node
    VecKey key;
    int color = 0;              // c_D, assigned by color_dag
    bool source = false;        // no incoming edge
    std::vector<int> witnesses; // elements z with vec(z, node) == key
};

// The auxiliary DAG D: one vertex per (tree node, distinct comparison vector),
// edges from each parent-level vertex to its unique child-level successor.
struct SignatureDag {
    int width1 = 0;
    long long act_bound = 0; // 5^{k+1}, saturated at 2^62
    std::vector<DagVertex> verts;
    std::vector<std::vector<int>> at_node;      // tree node -> vertex ids, key-lex order
    std::vector<int> pos_in_node;               // vertex id -> index in its at_node list
    std::vector<std::vector<int>> out_to_child; // child node c -> per position in at_node[parent(c)] -> vertex id
    std::vector<std::vector<std::pair<int, int>>> color_index; // node -> sorted (color, vertex id)
    std::vector<int> node_parent;               // copy of the tree structure
    std::vector<std::vector<int>> node_children;

    int vertex_at(int node, const VecKey& k) const; // -1 if absent
    int colored_vertex(int node, int color) const;  // -1 if absent
    int out_vertex(int vertex, int child_node) const;
};

// Enumerates D from all elements and checks that every vertex has exactly one
// out-neighbor per tree child (LemmaViolation otherwise).
SignatureDag build_dag(const Poset& P, const NormalizedDecomposition& N, const ElementColoring& c);

// Assigns c_D: distinct colors on the root level, inherited minima below,
// least-unused colors for fresh vertices; fills source flags and color index.
void color_dag(SignatureDag& D, const NormalizedDecomposition& N);

// Interned strictly-decreasing color sequences.
struct SigTable {
    std::vector<std::vector<int>> seqs;
    std::map<std::vector<int>, int> index;
    std::map<std::pair<int, int>, int> front_memo, back_memo;

    int intern(const std::vector<int>& s);
    int extend_front(int color, int sig); // signature of (color, then sig...)
    int extend_back(int sig, int color);
    const std::vector<int>& seq(int sig) const { return seqs[sig]; }
};

// Colors along a vertex path, deduplicated; NotAPath unless consecutive
// vertices are joined by edges.
std::vector<int> signature_of_path(const SignatureDag& D, const std::vector<int>& path);

// Vertices reachable from d through color-gamma vertices (d included).
std::vector<int> tree_of(const SignatureDag& D, int d, int gamma);
// Tree nodes met by a set of D vertices, sorted.
std::vector<int> project_to_tree(const SignatureDag& D, const std::vector<int>& verts);

struct RealizedTriple {
    int start = 0;    // D vertex id
    int sig = 0;      // interned signature
    int end_node = 0; // tree node carrying some root_of(z)
    auto operator<=>(const RealizedTriple&) const = default;
};

struct RealizedInfo {
    SigTable sigs;
    std::vector<RealizedTriple> triples;       // every walk ending at a root_of node
    std::vector<std::pair<int, int>> pairs;    // (sig to root_of(x), sig to root_of(y)) from the shared meet vertex
    std::vector<int> case2;                    // sigs realized with the end strictly above the start
    // sig of the walk from each vertex of D_m to D_r, for m on the root path of r
    std::map<std::pair<int, int>, std::vector<int>> walk_sig; // (r, m) -> per position in at_node[m]
};

RealizedInfo enumerate_realized(const SignatureDag& D, const NormalizedDecomposition& N);

// One `d` line per vertex (tree node, comparison vector, color), one `e` line
// per edge, in deterministic order.
std::string dump_dag(const SignatureDag& D, const NormalizedDecomposition& N);

} // namespace bdim

#endif
