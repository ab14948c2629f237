#ifndef BDIM_REACH_HPP
#define BDIM_REACH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bdim/poset.hpp"
#include "bdim/realizer.hpp"
#include "bdim/treedec.hpp"

namespace bdim {

struct Digraph {
    int n = 0;
    std::vector<std::pair<int, int>> arcs; // deduplicated, self-loops dropped

    Digraph() = default;
    Digraph(int n_, std::vector<std::pair<int, int>> a);

    std::vector<std::vector<int>> out_adjacency() const;
    // u reaches v (reflexive)
    BitMatrix reachability() const;
};

// `p digraph <n> <m>` + arc lines, comments `c`.
Digraph parse_digraph(const std::string& text);
std::string write_digraph(const Digraph& G);

// Tarjan condensation; components numbered 1..n' in topological order.
std::pair<Digraph, std::vector<int>> condense_scc(const Digraph& G);

// x <= y iff a directed path runs from x to y; input must be acyclic.
Poset digraph_to_poset(const Digraph& dag);

struct LabelScheme {
    std::vector<std::vector<uint8_t>> labels; // original vertex -> bit string
    int bits_per_label = 0;
    int bits_per_position = 0;
    Realizer realizer;      // over the condensation poset
    std::vector<int> comp;  // original vertex -> component
    int n_prime = 0;

    std::string label_hex(int v) const;
};

// Labels are the concatenated fixed-width positions of the vertex's component
// in each realizer permutation, big-endian within each field.
LabelScheme build_labels(const Digraph& G, const std::optional<TreeDecomposition>& T = std::nullopt,
                         BuildOptions opt = {});

// Reachability from two labels and the scheme descriptor alone.
bool decode(const std::vector<uint8_t>& label1, const std::vector<uint8_t>& label2, const Realizer& realizer,
            int bits_per_position);

// descriptor JSON: embedded realizer + component map
std::string write_descriptor(const LabelScheme& S);
struct Descriptor {
    Realizer realizer;
    std::vector<int> comp;
    int bits_per_position = 0;
    int bits_per_label = 0;
    int n_prime = 0;
};
Descriptor read_descriptor(const std::string& bytes);

std::vector<uint8_t> label_from_hex(const std::string& hex, int bits_per_label);

} // namespace bdim

#endif
