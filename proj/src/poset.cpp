#include "bdim/poset.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace bdim {

bool Poset::less(int x, int y) const {
    if (x < 1 || x > n || y < 1 || y > n)
        throw IdOutOfRange("element " + std::to_string(x < 1 || x > n ? x : y) + " outside 1.." + std::to_string(n));
    return closure.get(x, y);
}

bool Poset::leq(int x, int y) const { return x == y ? (less(x, x), true) : less(x, y); }

std::vector<std::pair<int, int>> Poset::cover_edges() const {
    std::vector<std::pair<int, int>> e;
    e.reserve(covers.size());
    for (auto [u, v] : covers) e.emplace_back(std::min(u, v), std::max(u, v));
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    return e;
}

bool leq(const Poset& P, int x, int y) { return P.leq(x, y); }

Poset make_poset(int n, const std::vector<std::pair<int, int>>& relations) {
    if (n < 1) throw InvalidArgument("poset needs at least one element");
    Poset P;
    P.n = n;
    P.closure = BitMatrix(n);
    for (auto [u, v] : relations) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw IdOutOfRange("relation (" + std::to_string(u) + "," + std::to_string(v) + ") outside 1.." +
                               std::to_string(n));
        if (u == v) throw CycleDetected("self-relation at " + std::to_string(u));
        P.closure.set(u, v);
    }
    // Warshall over bit rows.
    const int W = P.closure.words();
    for (int k = 1; k <= n; ++k) {
        const uint64_t* rk = P.closure.row(k);
        for (int i = 1; i <= n; ++i) {
            if (!P.closure.get(i, k)) continue;
            uint64_t* ri = P.closure.row(i);
            for (int w = 0; w < W; ++w) ri[w] |= rk[w];
        }
    }
    for (int i = 1; i <= n; ++i)
        if (P.closure.get(i, i)) throw CycleDetected("element " + std::to_string(i) + " reaches itself");

    // covers(u) = row(u) minus everything reachable in two or more steps.
    std::vector<uint64_t> reach2(P.closure.words());
    for (int u = 1; u <= n; ++u) {
        std::fill(reach2.begin(), reach2.end(), 0);
        for (int z = 1; z <= n; ++z) {
            if (!P.closure.get(u, z)) continue;
            const uint64_t* rz = P.closure.row(z);
            for (int w = 0; w < W; ++w) reach2[w] |= rz[w];
        }
        for (int v = 1; v <= n; ++v)
            if (P.closure.get(u, v) && !((reach2[static_cast<size_t>(v - 1) / 64] >> ((v - 1) % 64)) & 1ull))
                P.covers.emplace_back(u, v);
    }
    std::sort(P.covers.begin(), P.covers.end());
    return P;
}

Poset parse_poset(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;
    std::vector<std::pair<int, int>> rel;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (n < 0) {
            std::string p, kind;
            if (!(ls >> p >> kind >> n >> m) || p != "p" || kind != "poset" || n < 0 || m < 0)
                throw ParseError("line " + std::to_string(lineno) + ": expected `p poset <n> <m>`");
            continue;
        }
        long long u, v;
        if (!(ls >> u >> v)) throw ParseError("line " + std::to_string(lineno) + ": expected `<u> <v>`");
        std::string rest;
        if (ls >> rest) throw ParseError("line " + std::to_string(lineno) + ": trailing tokens");
        rel.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0) throw ParseError("missing `p poset` header");
    if (static_cast<long long>(rel.size()) != m)
        throw InconsistentHeader("header announces " + std::to_string(m) + " relations, found " +
                                 std::to_string(rel.size()));
    return make_poset(static_cast<int>(n), rel);
}

std::string write_poset(const Poset& P) {
    std::ostringstream out;
    out << "p poset " << P.n << ' ' << P.covers.size() << '\n';
    for (auto [u, v] : P.covers) out << u << ' ' << v << '\n';
    return out.str();
}

Poset read_poset_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_poset(ss.str());
}

void write_poset_file(const Poset& P, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw ParseError("cannot open " + path + " for writing");
    f << write_poset(P);
}

} // namespace bdim
