#ifndef BDIM_TOOLS_HPP
#define BDIM_TOOLS_HPP

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "bdim/perm.hpp"
#include "bdim/treedec.hpp"

namespace bdim {

enum class EdgeColor : uint8_t { Uncolored, Red, Green };

// Edges of a rooted tree are identified by their child endpoint.
struct EdgeColoring {
    std::vector<EdgeColor> by_child;

    explicit EdgeColoring(int tree_size = 0) : by_child(tree_size + 1, EdgeColor::Uncolored) {}
    EdgeColor at(int child) const { return by_child[child]; }
    void set(int child, EdgeColor c) { by_child[child] = c; }
};

// --- Tool: set membership ----------------------------------------------------

// Three permutations of V deciding membership in C for both queried elements:
// pi(C)pi(V-C), pi*(C)pi(V-C), pi(C)pi*(V-C) with pi the id-ascending order.
std::array<Permutation, 3> set_membership_build(const std::vector<int>& V, const std::vector<int>& C);

// bits[i] == (x before y in permutation i). Returns (x in C, y in C).
std::pair<bool, bool> set_membership_decode(bool b1, bool b2, bool b3);

// --- Tool: color detection ---------------------------------------------------

std::pair<Permutation, Permutation> dfs_orders(const RootedTree& T); // (pi_L, pi_R)

enum class RelPos { YBelowX, XLeftOfY, YLeftOfX, XBelowY };

// bitL/bitR == (x before y) in pi_L / pi_R; valid for x != y.
RelPos rel_pos(bool bitL, bool bitR);

RootedTree mirrored(const RootedTree& T);

// Permutation detecting, for y strictly below x, whether the first colored
// edge on [y,x] is red: exactly when x comes before y in the output.
Permutation algo1_perm(const RootedTree& T, const EdgeColoring& colors);

// Permutation detecting, for x left of y, whether the first colored edge on
// [meet,x] is red: exactly when y comes before x in the output.
Permutation algo2_perm(const RootedTree& T, const EdgeColoring& colors);

enum class Side : uint8_t { X, Y };

// The five color-detection permutations: pi_L, pi_R, algo1, algo2, mirrored algo2.
struct ColorDetector {
    std::array<Permutation, 5> perms;
};

ColorDetector color_detect_build(const RootedTree& T, const EdgeColoring& colors);

// bits[i] == (x before y in perms[i]). Premise: the meet is strictly below the
// chosen side's endpoint; returns whether the first colored edge on the path
// from the meet to that endpoint exists and is red.
bool color_detect_eval(const std::array<bool, 5>& bits, Side side);

} // namespace bdim

#endif
