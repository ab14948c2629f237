#include "bdim/treedec.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace bdim {

int TreeDecomposition::width() const {
    size_t mx = 0;
    for (int t = 1; t <= m; ++t) mx = std::max(mx, bags[t].size());
    return static_cast<int>(mx) - 1;
}

TreeDecomposition parse_td(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    long long bags = -1, maxbag = -1, n = -1;
    std::vector<std::vector<int>> bagv;
    std::vector<char> seen;
    std::vector<std::pair<int, int>> edges;
    int bcount = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (bags < 0) {
            std::string s, td;
            if (!(ls >> s >> td >> bags >> maxbag >> n) || s != "s" || td != "td" || bags < 0 || maxbag < 0 || n < 0)
                throw ParseError("line " + std::to_string(lineno) + ": expected `s td <#bags> <width+1> <n>`");
            bagv.assign(bags + 1, {});
            seen.assign(bags + 1, 0);
            continue;
        }
        if (line[0] == 'b') {
            char b;
            long long id;
            ls.clear();
            ls.str(line);
            if (!(ls >> b >> id) || id < 1 || id > bags)
                throw ParseError("line " + std::to_string(lineno) + ": bad bag line");
            if (seen[id]) throw ParseError("line " + std::to_string(lineno) + ": duplicate bag " + std::to_string(id));
            seen[id] = 1;
            ++bcount;
            long long v;
            while (ls >> v) {
                if (v < 1 || v > n)
                    throw ParseError("line " + std::to_string(lineno) + ": bag element " + std::to_string(v) +
                                     " outside 1.." + std::to_string(n));
                bagv[id].push_back(static_cast<int>(v));
            }
            std::sort(bagv[id].begin(), bagv[id].end());
            bagv[id].erase(std::unique(bagv[id].begin(), bagv[id].end()), bagv[id].end());
            continue;
        }
        long long a, b2;
        if (!(ls >> a >> b2)) throw ParseError("line " + std::to_string(lineno) + ": expected tree edge `<i> <j>`");
        if (a < 1 || a > bags || b2 < 1 || b2 > bags)
            throw ParseError("line " + std::to_string(lineno) + ": tree edge endpoint outside 1.." +
                             std::to_string(bags));
        edges.emplace_back(static_cast<int>(std::min(a, b2)), static_cast<int>(std::max(a, b2)));
    }
    if (bags < 0) throw ParseError("missing `s td` header");
    if (bcount != bags)
        throw InconsistentHeader("header announces " + std::to_string(bags) + " bags, found " + std::to_string(bcount));
    size_t mx = 0;
    for (const auto& b : bagv) mx = std::max(mx, b.size());
    if (static_cast<long long>(mx) > maxbag)
        throw InconsistentHeader("bag of size " + std::to_string(mx) + " exceeds declared maximum " +
                                 std::to_string(maxbag));
    TreeDecomposition T;
    T.m = static_cast<int>(bags);
    T.n = static_cast<int>(n);
    T.bags = std::move(bagv);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    T.edges = std::move(edges);
    return T;
}

std::string write_td(const TreeDecomposition& T) {
    std::ostringstream out;
    size_t mx = 0;
    for (int t = 1; t <= T.m; ++t) mx = std::max(mx, T.bags[t].size());
    out << "s td " << T.m << ' ' << mx << ' ' << T.n << '\n';
    for (int t = 1; t <= T.m; ++t) {
        out << "b " << t;
        for (int v : T.bags[t]) out << ' ' << v;
        out << '\n';
    }
    auto e = T.edges;
    std::sort(e.begin(), e.end());
    for (auto [a, b] : e) out << a << ' ' << b << '\n';
    return out.str();
}

namespace {

std::vector<std::vector<int>> tree_adjacency(const TreeDecomposition& T) {
    std::vector<std::vector<int>> adj(T.m + 1);
    for (auto [a, b] : T.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

} // namespace

TdReport validate(const Graph& G, const TreeDecomposition& T) {
    TdReport r;
    r.width = T.width();

    auto adj = tree_adjacency(T);
    // connected + acyclic
    if (T.m >= 1) {
        std::vector<int> vis(T.m + 1, 0);
        std::queue<int> q;
        q.push(1);
        vis[1] = 1;
        int cnt = 0;
        while (!q.empty()) {
            int t = q.front();
            q.pop();
            ++cnt;
            for (int u : adj[t])
                if (!vis[u]) {
                    vis[u] = 1;
                    q.push(u);
                }
        }
        r.tree_ok = (cnt == T.m) && (static_cast<int>(T.edges.size()) == T.m - 1);
    } else {
        r.tree_ok = false;
    }

    std::vector<std::vector<int>> holding(G.n + 1); // vertex -> tree nodes whose bag holds it
    for (int t = 1; t <= T.m; ++t)
        for (int v : T.bags[t])
            if (v >= 1 && v <= G.n) holding[v].push_back(t);

    for (int v = 1; v <= G.n; ++v)
        if (holding[v].empty()) r.uncovered_vertices.push_back(v);

    for (auto [u, v] : G.edges) {
        bool ok = false;
        const auto& hu = holding[u];
        for (int t : hu) {
            if (std::binary_search(T.bags[t].begin(), T.bags[t].end(), v)) {
                ok = true;
                break;
            }
        }
        if (!ok) r.uncovered_edges.emplace_back(u, v);
    }

    // property (3): occurrence sets connected in the tree
    std::vector<int> mark(T.m + 1, 0);
    int stamp = 0;
    for (int v = 1; v <= G.n; ++v) {
        if (holding[v].size() <= 1) continue;
        ++stamp;
        for (int t : holding[v]) mark[t] = stamp;
        std::queue<int> q;
        q.push(holding[v][0]);
        mark[holding[v][0]] = -stamp;
        int cnt = 0;
        while (!q.empty()) {
            int t = q.front();
            q.pop();
            ++cnt;
            for (int u : adj[t])
                if (mark[u] == stamp) {
                    mark[u] = -stamp;
                    q.push(u);
                }
        }
        if (cnt != static_cast<int>(holding[v].size())) r.disconnected_vertices.push_back(v);
    }
    return r;
}

std::string TdReport::describe() const {
    std::ostringstream out;
    if (!tree_ok) out << "tree: not a connected acyclic tree\n";
    if (!uncovered_vertices.empty()) {
        out << "property 1: vertices in no bag:";
        for (int v : uncovered_vertices) out << ' ' << v;
        out << '\n';
    }
    if (!uncovered_edges.empty()) {
        out << "property 2: edges in no bag:";
        for (auto [u, v] : uncovered_edges) out << " (" << u << "," << v << ")";
        out << '\n';
    }
    if (!disconnected_vertices.empty()) {
        out << "property 3: vertices with disconnected bag sets:";
        for (int v : disconnected_vertices) out << ' ' << v;
        out << '\n';
    }
    if (valid()) out << "valid, width " << width << '\n';
    return out.str();
}

TreeDecomposition heuristic_decompose(const Graph& G) {
    if (G.n < 1) throw InvalidArgument("heuristic_decompose needs a nonempty graph");
    const int n = G.n;
    std::vector<std::set<int>> adj(n + 1);
    for (auto [u, v] : G.edges) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    std::vector<char> gone(n + 1, 0);
    std::vector<int> elim_index(n + 1, 0);
    TreeDecomposition T;
    T.m = n;
    T.n = n;
    T.bags.assign(n + 1, {});
    std::vector<int> order;
    order.reserve(n);

    for (int step = 1; step <= n; ++step) {
        int best = -1;
        long long best_fill = -1;
        for (int v = 1; v <= n; ++v) {
            if (gone[v]) continue;
            long long fill = 0;
            for (auto it = adj[v].begin(); it != adj[v].end(); ++it)
                for (auto jt = std::next(it); jt != adj[v].end(); ++jt)
                    if (!adj[*it].count(*jt)) ++fill;
            if (best == -1 || fill < best_fill) {
                best = v;
                best_fill = fill;
            }
        }
        std::vector<int> bag(adj[best].begin(), adj[best].end());
        bag.push_back(best);
        std::sort(bag.begin(), bag.end());
        T.bags[step] = std::move(bag);
        order.push_back(best);
        elim_index[best] = step;
        for (int a : adj[best])
            for (int b : adj[best])
                if (a < b && !adj[a].count(b)) {
                    adj[a].insert(b);
                    adj[b].insert(a);
                }
        for (int a : adj[best]) adj[a].erase(best);
        gone[best] = 1;
        adj[best].clear();
    }

    // connect each bag to the bag of its earliest-eliminated remaining neighbor
    std::vector<std::set<int>> adj2(n + 1);
    for (auto [u, v] : G.edges) {
        adj2[u].insert(v);
        adj2[v].insert(u);
    }
    // replay eliminations to know neighborhoods at elimination time
    for (int step = 1; step <= n; ++step) {
        int v = order[step - 1];
        int next = 0;
        for (int u : adj2[v])
            if (next == 0 || elim_index[u] < elim_index[next]) next = u;
        if (next != 0) {
            T.edges.emplace_back(std::min(step, elim_index[next]), std::max(step, elim_index[next]));
        } else if (step < n) {
            T.edges.emplace_back(step, step + 1); // isolated remainder, keep the tree connected
        }
        for (int a : adj2[v])
            for (int b : adj2[v])
                if (a < b && !adj2[a].count(b)) {
                    adj2[a].insert(b);
                    adj2[b].insert(a);
                }
        for (int a : adj2[v]) adj2[a].erase(v);
        adj2[v].clear();
    }
    std::sort(T.edges.begin(), T.edges.end());
    T.edges.erase(std::unique(T.edges.begin(), T.edges.end()), T.edges.end());
    return T;
}

std::vector<int> RootedTree::preorder() const {
    std::vector<int> out;
    out.reserve(size());
    std::vector<int> stack{root};
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        out.push_back(t);
        for (auto it = children[t].rbegin(); it != children[t].rend(); ++it) stack.push_back(*it);
    }
    return out;
}

int RootedTree::meet(int u, int v) const {
    while (u != v) {
        if (depth[u] >= depth[v])
            u = parent[u];
        else
            v = parent[v];
    }
    return u;
}

bool RootedTree::is_ancestor_or_self(int a, int b) const {
    while (depth[b] > depth[a]) b = parent[b];
    return a == b;
}

std::vector<int> RootedTree::path(int u, int v) const {
    int m = meet(u, v);
    std::vector<int> up;
    for (int t = u; t != m; t = parent[t]) up.push_back(t);
    up.push_back(m);
    std::vector<int> down;
    for (int t = v; t != m; t = parent[t]) down.push_back(t);
    up.insert(up.end(), down.rbegin(), down.rend());
    return up;
}

Graph cover_graph(const Poset& P) { return Graph(P.n, P.cover_edges()); }

std::vector<int> NormalizedDecomposition::rooted_at(int t) const {
    std::vector<int> out;
    for (int z = 1; z < static_cast<int>(root_of.size()); ++z)
        if (root_of[z] == t) out.push_back(z);
    return out;
}

NormalizedDecomposition normalize(const Poset& P, const TreeDecomposition& T) {
    TdReport rep = validate(cover_graph(P), T);
    if (!rep.valid()) throw InvalidDecomposition("decomposition does not validate:\n" + rep.describe());

    const int m = T.m;
    auto adj = tree_adjacency(T);

    // root the original tree at node 1
    std::vector<int> par(m + 1, 0), dep(m + 1, 0), bfs;
    {
        std::vector<char> vis(m + 1, 0);
        std::queue<int> q;
        q.push(1);
        vis[1] = 1;
        par[1] = 0;
        while (!q.empty()) {
            int t = q.front();
            q.pop();
            bfs.push_back(t);
            for (int u : adj[t])
                if (!vis[u]) {
                    vis[u] = 1;
                    par[u] = t;
                    dep[u] = dep[t] + 1;
                    q.push(u);
                }
        }
    }

    // lowest node of each element's bag subtree
    std::vector<int> low(P.n + 1, 0);
    for (int t = 1; t <= m; ++t)
        for (int v : T.bags[t])
            if (low[v] == 0 || dep[t] < dep[low[v]]) low[v] = t;

    std::vector<std::vector<int>> rooted(m + 1);
    for (int z = 1; z <= P.n; ++z) rooted[low[z]].push_back(z); // sorted by id already

    // split each node into a chain, one rooted element per chain link
    NormalizedDecomposition N;
    std::vector<int> chain_bottom(m + 1, 0), chain_top(m + 1, 0);
    std::vector<std::vector<int>> nbags(1); // index 0 unused
    std::vector<int> npar(1, 0);
    int next_id = 0;
    for (int t : bfs) {
        const auto& zs = rooted[t];
        int links = std::max<size_t>(1, zs.size());
        for (int j = 1; j <= links; ++j) {
            ++next_id;
            std::vector<int> bag;
            bag.reserve(T.bags[t].size());
            for (int v : T.bags[t]) {
                // drop the elements whose chain link comes later
                auto it = std::lower_bound(zs.begin(), zs.end(), v);
                if (it != zs.end() && *it == v) {
                    int idx = static_cast<int>(it - zs.begin()) + 1;
                    if (idx > j) continue;
                }
                bag.push_back(v);
            }
            nbags.push_back(std::move(bag));
            if (j == 1) {
                chain_bottom[t] = next_id;
                npar.push_back(t == 1 ? 0 : chain_top[par[t]]);
            } else {
                npar.push_back(next_id - 1);
            }
        }
        chain_top[t] = next_id;
    }

    const int nm = next_id;
    N.td.m = nm;
    N.td.n = T.n;
    N.td.bags = std::move(nbags);
    for (int t = 2; t <= nm; ++t) N.td.edges.emplace_back(std::min(npar[t], t), std::max(npar[t], t));
    std::sort(N.td.edges.begin(), N.td.edges.end());

    N.tree.root = 1;
    N.tree.parent = npar;
    N.tree.children.assign(nm + 1, {});
    N.tree.depth.assign(nm + 1, 0);
    for (int t = 2; t <= nm; ++t) N.tree.children[npar[t]].push_back(t);
    // depths: parents have smaller ids only within a chain, so compute by BFS
    {
        std::queue<int> q;
        q.push(1);
        while (!q.empty()) {
            int t = q.front();
            q.pop();
            for (int c : N.tree.children[t]) {
                N.tree.depth[c] = N.tree.depth[t] + 1;
                q.push(c);
            }
        }
    }

    // deterministic child order: by smallest element id in the child's subtree bags, ties by node id
    {
        std::vector<int> min_elem(nm + 1, std::numeric_limits<int>::max());
        // process by decreasing depth
        std::vector<int> nodes(nm);
        std::iota(nodes.begin(), nodes.end(), 1);
        std::sort(nodes.begin(), nodes.end(),
                  [&](int a, int b) { return N.tree.depth[a] > N.tree.depth[b]; });
        for (int t : nodes) {
            for (int v : N.td.bags[t]) min_elem[t] = std::min(min_elem[t], v);
            if (N.tree.parent[t] != 0)
                min_elem[N.tree.parent[t]] = std::min(min_elem[N.tree.parent[t]], min_elem[t]);
        }
        for (int t = 1; t <= nm; ++t)
            std::sort(N.tree.children[t].begin(), N.tree.children[t].end(), [&](int a, int b) {
                if (min_elem[a] != min_elem[b]) return min_elem[a] < min_elem[b];
                return a < b;
            });
    }

    // recompute roots on the new tree and check injectivity
    N.root_of.assign(P.n + 1, 0);
    for (int t = 1; t <= nm; ++t)
        for (int v : N.td.bags[t])
            if (N.root_of[v] == 0 || N.tree.depth[t] < N.tree.depth[N.root_of[v]]) N.root_of[v] = t;
    {
        std::vector<char> used(nm + 1, 0);
        for (int z = 1; z <= P.n; ++z) {
            if (N.root_of[z] == 0) throw InvalidDecomposition("element " + std::to_string(z) + " lost its bag");
            if (used[N.root_of[z]])
                throw InvalidDecomposition("two elements share root node " + std::to_string(N.root_of[z]));
            used[N.root_of[z]] = 1;
        }
    }

    N.preorder_rank.assign(nm + 1, 0);
    auto pre = N.tree.preorder();
    for (int i = 0; i < static_cast<int>(pre.size()); ++i) N.preorder_rank[pre[i]] = i;

    N.width = N.td.width();
    if (N.width != rep.width)
        throw InvalidDecomposition("normalization changed the width"); // cannot happen: chain tops keep full bags

    TdReport rep2 = validate(cover_graph(P), N.td);
    if (!rep2.valid()) throw InvalidDecomposition("normalized decomposition fails validation:\n" + rep2.describe());
    return N;
}

} // namespace bdim
