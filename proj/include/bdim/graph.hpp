#ifndef BDIM_GRAPH_HPP
#define BDIM_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

namespace bdim {

// Simple undirected graph on vertices 1..n.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges; // (min,max), sorted, deduplicated

    Graph() = default;
    Graph(int n_, std::vector<std::pair<int, int>> e);

    std::vector<std::vector<int>> adjacency() const;
};

// PACE 2017 graph format: `p tw <n> <m>` + edge lines, comments `c`.
Graph parse_gr(const std::string& text);
std::string write_gr(const Graph& G);

} // namespace bdim

#endif
