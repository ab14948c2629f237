#include "bdim/reach.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace bdim {

Digraph::Digraph(int n_, std::vector<std::pair<int, int>> a) : n(n_) {
    arcs.reserve(a.size());
    for (auto [u, v] : a) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw IdOutOfRange("arc (" + std::to_string(u) + "," + std::to_string(v) + ") outside 1.." +
                               std::to_string(n));
        if (u == v) continue;
        arcs.emplace_back(u, v);
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
}

std::vector<std::vector<int>> Digraph::out_adjacency() const {
    std::vector<std::vector<int>> adj(n + 1);
    for (auto [u, v] : arcs) adj[u].push_back(v);
    return adj;
}

BitMatrix Digraph::reachability() const {
    BitMatrix M(n);
    auto adj = out_adjacency();
    std::vector<int> stack;
    std::vector<char> seen(n + 1);
    for (int s = 1; s <= n; ++s) {
        std::fill(seen.begin(), seen.end(), 0);
        stack.assign(1, s);
        seen[s] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            M.set(s, u);
            for (int v : adj[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
        }
    }
    return M;
}

Digraph parse_digraph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;
    std::vector<std::pair<int, int>> arcs;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (n < 0) {
            std::string p, kind;
            if (!(ls >> p >> kind >> n >> m) || p != "p" || kind != "digraph" || n < 0 || m < 0)
                throw ParseError("line " + std::to_string(lineno) + ": expected `p digraph <n> <m>`");
            continue;
        }
        long long u, v;
        if (!(ls >> u >> v)) throw ParseError("line " + std::to_string(lineno) + ": expected `<u> <v>`");
        arcs.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0) throw ParseError("missing `p digraph` header");
    if (static_cast<long long>(arcs.size()) != m)
        throw InconsistentHeader("header announces " + std::to_string(m) + " arcs, found " +
                                 std::to_string(arcs.size()));
    return Digraph(static_cast<int>(n), std::move(arcs));
}

std::string write_digraph(const Digraph& G) {
    std::ostringstream out;
    out << "p digraph " << G.n << ' ' << G.arcs.size() << '\n';
    for (auto [u, v] : G.arcs) out << u << ' ' << v << '\n';
    return out.str();
}

std::pair<Digraph, std::vector<int>> condense_scc(const Digraph& G) {
    // iterative Tarjan
    const int n = G.n;
    auto adj = G.out_adjacency();
    std::vector<int> index(n + 1, 0), low(n + 1, 0), comp(n + 1, 0), stk;
    std::vector<char> onstk(n + 1, 0);
    int next_index = 0, next_comp = 0;
    struct Frame {
        int v;
        size_t ei;
    };
    for (int s = 1; s <= n; ++s) {
        if (index[s]) continue;
        std::vector<Frame> frames{{s, 0}};
        index[s] = low[s] = ++next_index;
        stk.push_back(s);
        onstk[s] = 1;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.ei < adj[f.v].size()) {
                int w = adj[f.v][f.ei++];
                if (!index[w]) {
                    index[w] = low[w] = ++next_index;
                    stk.push_back(w);
                    onstk[w] = 1;
                    frames.push_back({w, 0});
                } else if (onstk[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                if (low[f.v] == index[f.v]) {
                    ++next_comp;
                    while (true) {
                        int w = stk.back();
                        stk.pop_back();
                        onstk[w] = 0;
                        comp[w] = next_comp;
                        if (w == f.v) break;
                    }
                }
                int v = f.v;
                frames.pop_back();
                if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
            }
        }
    }
    // Tarjan yields reverse-topological component numbers; flip them
    const int nc = next_comp;
    std::vector<int> remap(nc + 1);
    for (int i = 1; i <= nc; ++i) remap[i] = nc - i + 1;
    for (int v = 1; v <= n; ++v) comp[v] = remap[comp[v]];
    std::vector<std::pair<int, int>> arcs;
    for (auto [u, v] : G.arcs)
        if (comp[u] != comp[v]) arcs.emplace_back(comp[u], comp[v]);
    return {Digraph(nc, std::move(arcs)), comp};
}

Poset digraph_to_poset(const Digraph& dag) {
    // make_poset rejects cycles, which is exactly the acyclicity requirement
    return make_poset(dag.n, dag.arcs);
}

namespace {

int bits_needed(int n_prime) {
    int b = 0;
    while ((1ll << b) < n_prime) ++b;
    return b; // ceil(log2 n'), 0 for n' == 1
}

std::vector<uint8_t> encode_positions(const std::vector<int>& positions, int bits_per_position) {
    std::vector<uint8_t> out;
    out.reserve(positions.size() * bits_per_position);
    for (int p : positions)
        for (int b = bits_per_position - 1; b >= 0; --b) out.push_back((p >> b) & 1);
    return out;
}

} // namespace

std::string LabelScheme::label_hex(int v) const {
    const auto& bits = labels[v];
    if (bits.empty()) return "-";
    std::string hex;
    for (size_t i = 0; i < bits.size(); i += 4) {
        int nib = 0;
        for (size_t j = i; j < i + 4; ++j) nib = (nib << 1) | (j < bits.size() ? bits[j] : 0);
        hex += "0123456789abcdef"[nib];
    }
    return hex;
}

std::vector<uint8_t> label_from_hex(const std::string& hex, int bits_per_label) {
    std::vector<uint8_t> bits;
    if (hex == "-") {
        if (bits_per_label != 0) throw LengthMismatch("empty label for a scheme with nonzero label width");
        return bits;
    }
    for (char c : hex) {
        int nib;
        if (c >= '0' && c <= '9')
            nib = c - '0';
        else if (c >= 'a' && c <= 'f')
            nib = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F')
            nib = c - 'A' + 10;
        else
            throw LengthMismatch("invalid hex digit in label");
        for (int b = 3; b >= 0; --b) bits.push_back((nib >> b) & 1);
    }
    if (static_cast<int>(bits.size()) < bits_per_label ||
        static_cast<int>(bits.size()) >= bits_per_label + 4)
        throw LengthMismatch("label has the wrong number of bits");
    bits.resize(bits_per_label);
    return bits;
}

LabelScheme build_labels(const Digraph& G, const std::optional<TreeDecomposition>& T, BuildOptions opt) {
    LabelScheme S;
    auto [dag, comp] = condense_scc(G);
    S.comp = comp;
    S.n_prime = dag.n;
    Poset P = digraph_to_poset(dag);

    TreeDecomposition td;
    if (T.has_value()) {
        // contract the given decomposition along the components
        td.m = T->m;
        td.n = dag.n;
        td.edges = T->edges;
        td.bags.assign(td.m + 1, {});
        for (int t = 1; t <= td.m; ++t) {
            for (int v : T->bags[t]) td.bags[t].push_back(comp[v]);
            std::sort(td.bags[t].begin(), td.bags[t].end());
            td.bags[t].erase(std::unique(td.bags[t].begin(), td.bags[t].end()), td.bags[t].end());
        }
    } else {
        td = heuristic_decompose(cover_graph(P));
    }
    S.realizer = build_realizer(P, td, opt);

    S.bits_per_position = bits_needed(dag.n);
    S.bits_per_label = static_cast<int>(S.realizer.perms.size()) * S.bits_per_position;
    S.labels.assign(G.n + 1, {});
    for (int v = 1; v <= G.n; ++v) {
        std::vector<int> positions;
        positions.reserve(S.realizer.perms.size());
        for (const auto& p : S.realizer.perms) positions.push_back(p.rank(comp[v]));
        S.labels[v] = encode_positions(positions, S.bits_per_position);
    }
    return S;
}

bool decode(const std::vector<uint8_t>& label1, const std::vector<uint8_t>& label2, const Realizer& realizer,
            int bits_per_position) {
    const size_t d = realizer.perms.size();
    if (label1.size() != d * bits_per_position || label2.size() != d * bits_per_position)
        throw LengthMismatch("labels do not match the scheme dimensions");
    OrderBits bits(d);
    for (size_t i = 0; i < d; ++i) {
        long long p1 = 0, p2 = 0;
        for (int b = 0; b < bits_per_position; ++b) {
            p1 = (p1 << 1) | label1[i * bits_per_position + b];
            p2 = (p2 << 1) | label2[i * bits_per_position + b];
        }
        bits[i] = p1 < p2;
    }
    return realizer.query_bits(bits);
}

std::string write_descriptor(const LabelScheme& S) {
    nlohmann::ordered_json j;
    j["version"] = 1;
    j["bits_per_position"] = S.bits_per_position;
    j["bits_per_label"] = S.bits_per_label;
    j["n_prime"] = S.n_prime;
    j["component"] = std::vector<int>(S.comp.begin() + 1, S.comp.end());
    j["realizer"] = nlohmann::ordered_json::parse(serialize(S.realizer));
    return j.dump(2) + "\n";
}

Descriptor read_descriptor(const std::string& bytes) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(bytes);
    } catch (const nlohmann::json::exception& e) {
        throw CorruptPayload(std::string("not valid JSON: ") + e.what());
    }
    try {
        Descriptor d;
        d.bits_per_position = j.at("bits_per_position").get<int>();
        d.bits_per_label = j.at("bits_per_label").get<int>();
        d.n_prime = j.at("n_prime").get<int>();
        auto comp0 = j.at("component").get<std::vector<int>>();
        d.comp.assign(comp0.size() + 1, 0);
        std::copy(comp0.begin(), comp0.end(), d.comp.begin() + 1);
        d.realizer = deserialize(j.at("realizer").dump());
        return d;
    } catch (const nlohmann::json::exception& e) {
        throw CorruptPayload(std::string("malformed descriptor: ") + e.what());
    }
}

} // namespace bdim
