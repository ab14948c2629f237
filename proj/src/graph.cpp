#include "bdim/graph.hpp"

#include <algorithm>
#include <sstream>

#include "bdim/errors.hpp"

namespace bdim {

Graph::Graph(int n_, std::vector<std::pair<int, int>> e) : n(n_) {
    edges.reserve(e.size());
    for (auto [u, v] : e) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw IdOutOfRange("edge (" + std::to_string(u) + "," + std::to_string(v) + ") outside 1.." +
                               std::to_string(n));
        if (u == v) continue;
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

std::vector<std::vector<int>> Graph::adjacency() const {
    std::vector<std::vector<int>> adj(n + 1);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

Graph parse_gr(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;
    std::vector<std::pair<int, int>> e;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (n < 0) {
            std::string p, kind;
            if (!(ls >> p >> kind >> n >> m) || p != "p" || kind != "tw" || n < 0 || m < 0)
                throw ParseError("line " + std::to_string(lineno) + ": expected `p tw <n> <m>`");
            continue;
        }
        long long u, v;
        if (!(ls >> u >> v)) throw ParseError("line " + std::to_string(lineno) + ": expected `<u> <v>`");
        e.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0) throw ParseError("missing `p tw` header");
    if (static_cast<long long>(e.size()) != m)
        throw InconsistentHeader("header announces " + std::to_string(m) + " edges, found " +
                                 std::to_string(e.size()));
    return Graph(static_cast<int>(n), std::move(e));
}

std::string write_gr(const Graph& G) {
    std::ostringstream out;
    out << "p tw " << G.n << ' ' << G.edges.size() << '\n';
    for (auto [u, v] : G.edges) out << u << ' ' << v << '\n';
    return out.str();
}

} // namespace bdim
