#include "bdim/sigdag.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace bdim {

std::string veckey_str(const VecKey& k) {
    std::string s;
    s.reserve(k.size());
    for (Rel r : k) {
        switch (r) {
            case Rel::LT: s += '<'; break;
            case Rel::GT: s += '>'; break;
            case Rel::INCOMP: s += '|'; break;
            case Rel::EQ: s += '='; break;
            case Rel::STAR: s += '*'; break;
        }
    }
    return s;
}

ElementColoring greedy_color(const Poset& P, const NormalizedDecomposition& N) {
    ElementColoring c;
    c.color.assign(P.n + 1, 0);
    std::vector<int> order(P.n);
    std::iota(order.begin(), order.end(), 1);
    // preorder rank is a linear extension of "root_of below root_of"
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return N.preorder_rank[N.root_of[a]] < N.preorder_rank[N.root_of[b]]; });
    for (int z : order) {
        const auto& bag = N.bag(N.root_of[z]);
        std::vector<char> used(bag.size() + 2, 0);
        for (int w : bag)
            if (c.color[w] > 0 && c.color[w] <= static_cast<int>(bag.size()) + 1) used[c.color[w]] = 1;
        int col = 1;
        while (used[col]) ++col;
        c.color[z] = col;
        c.num_colors = std::max(c.num_colors, col);
    }
    if (c.num_colors > N.width + 1)
        throw LemmaViolation("greedy coloring exceeded width+1 colors"); // cannot happen on a valid decomposition
    return c;
}

RepTable build_reps(const Poset& P, const NormalizedDecomposition& N, const ElementColoring& c) {
    (void)P;
    RepTable R;
    R.width1 = N.width + 1;
    R.rep.assign(static_cast<size_t>(N.td.m) * R.width1, 0);
    for (int t = 1; t <= N.td.m; ++t)
        for (int z : N.bag(t)) {
            int i = c.color[z];
            int& slot = R.rep[static_cast<size_t>(t - 1) * R.width1 + (i - 1)];
            if (slot != 0 && slot != z)
                throw LemmaViolation("two elements of one color in a bag"); // greedy guarantees distinctness
            slot = z;
        }
    return R;
}

VecKey comparison_vec(const Poset& P, const NormalizedDecomposition& N, const RepTable& reps,
                      const ElementColoring& c, int z, int t) {
    if (!N.tree.is_ancestor_or_self(N.root_of[z], t))
        throw PreconditionViolated("vec(z,t) needs root_of(z) on the root path of t");
    (void)c;
    VecKey k(reps.width1);
    for (int i = 1; i <= reps.width1; ++i) {
        int rep = reps.at(t, i);
        if (rep == 0)
            k[i - 1] = Rel::STAR;
        else if (rep == z)
            k[i - 1] = Rel::EQ;
        else if (P.less(z, rep))
            k[i - 1] = Rel::LT;
        else if (P.less(rep, z))
            k[i - 1] = Rel::GT;
        else
            k[i - 1] = Rel::INCOMP;
    }
    return k;
}

int SignatureDag::vertex_at(int node, const VecKey& k) const {
    const auto& lst = at_node[node];
    int lo = 0, hi = static_cast<int>(lst.size());
    while (lo < hi) {
        int mid = (lo + hi) / 2;
        if (verts[lst[mid]].key < k)
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < static_cast<int>(lst.size()) && verts[lst[lo]].key == k) return lst[lo];
    return -1;
}

int SignatureDag::colored_vertex(int node, int color) const {
    const auto& ci = color_index[node];
    auto it = std::lower_bound(ci.begin(), ci.end(), std::make_pair(color, -1));
    if (it != ci.end() && it->first == color) return it->second;
    return -1;
}

int SignatureDag::out_vertex(int vertex, int child_node) const {
    return out_to_child[child_node][pos_in_node[vertex]];
}

SignatureDag build_dag(const Poset& P, const NormalizedDecomposition& N, const ElementColoring& c) {
    SignatureDag D;
    D.width1 = N.width + 1;
    D.act_bound = 1;
    for (int i = 0; i < D.width1; ++i) {
        if (D.act_bound > (1ll << 62) / 5) {
            D.act_bound = 1ll << 62;
            break;
        }
        D.act_bound *= 5;
    }
    D.node_parent = N.tree.parent;
    D.node_children = N.tree.children;

    RepTable reps = build_reps(P, N, c);
    const int m = N.td.m;

    // collect the distinct comparison vectors per node
    std::vector<std::map<VecKey, int>> keyid(m + 1);
    for (int z = 1; z <= P.n; ++z) {
        std::vector<int> stack{N.root_of[z]};
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            keyid[t].emplace(comparison_vec(P, N, reps, c, z, t), 0);
            for (int u : N.tree.children[t]) stack.push_back(u);
        }
    }

    D.at_node.assign(m + 1, {});
    for (int t = 1; t <= m; ++t) {
        for (auto& [key, id] : keyid[t]) {
            id = static_cast<int>(D.verts.size());
            DagVertex v;
            v.node = t;
            v.key = key;
            D.verts.push_back(std::move(v));
            D.at_node[t].push_back(id);
        }
        if (static_cast<long long>(D.at_node[t].size()) > D.act_bound)
            throw LemmaViolation("more than 5^{k+1} distinct vectors at one node");
    }
    D.pos_in_node.assign(D.verts.size(), 0);
    for (int t = 1; t <= m; ++t)
        for (int i = 0; i < static_cast<int>(D.at_node[t].size()); ++i) D.pos_in_node[D.at_node[t][i]] = i;

    D.out_to_child.assign(m + 1, {});
    for (int t = 2; t <= m; ++t) D.out_to_child[t].assign(D.at_node[N.tree.parent[t]].size(), -1);

    // witnesses and edges, with the unique-successor check
    for (int z = 1; z <= P.n; ++z) {
        std::vector<std::pair<int, int>> stack{{N.root_of[z], -1}}; // (node, vertex at its parent)
        while (!stack.empty()) {
            auto [t, pv] = stack.back();
            stack.pop_back();
            VecKey key = comparison_vec(P, N, reps, c, z, t);
            int vid = keyid[t].find(key)->second;
            D.verts[vid].witnesses.push_back(z);
            if (pv >= 0) {
                int& slot = D.out_to_child[t][D.pos_in_node[pv]];
                if (slot == -1)
                    slot = vid;
                else if (slot != vid)
                    throw LemmaViolation("vertex with two out-neighbors in one child node");
            }
            for (int u : N.tree.children[t]) stack.emplace_back(u, vid);
        }
    }
    for (int t = 2; t <= m; ++t)
        for (int s : D.out_to_child[t])
            if (s == -1) throw LemmaViolation("vertex with no out-neighbor in a child node");

    for (auto& v : D.verts) {
        std::sort(v.witnesses.begin(), v.witnesses.end());
        v.witnesses.erase(std::unique(v.witnesses.begin(), v.witnesses.end()), v.witnesses.end());
    }
    return D;
}

void color_dag(SignatureDag& D, const NormalizedDecomposition& N) {
    const int m = N.td.m;
    std::vector<char> has_in(D.verts.size(), 0);
    for (int t = 2; t <= m; ++t)
        for (int vid : D.out_to_child[t]) has_in[vid] = 1;
    for (size_t v = 0; v < D.verts.size(); ++v) D.verts[v].source = !has_in[v];

    for (int t : N.tree.preorder()) {
        const auto& lst = D.at_node[t];
        std::vector<int> color(lst.size(), 0);
        if (t != N.tree.root) {
            for (int pvid : D.at_node[N.tree.parent[t]]) {
                int target = D.out_to_child[t][D.pos_in_node[pvid]];
                int& slot = color[D.pos_in_node[target]];
                int pc = D.verts[pvid].color;
                if (slot == 0 || pc < slot) slot = pc;
            }
        }
        // least unused colors for the fresh vertices, in key order
        std::set<int> used(color.begin(), color.end());
        int next = 1;
        for (size_t i = 0; i < lst.size(); ++i) {
            if (color[i] == 0) {
                while (used.count(next)) ++next;
                color[i] = next;
                used.insert(next);
            }
            D.verts[lst[i]].color = color[i];
        }
        std::vector<int> sorted(color);
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw LemmaViolation("repeated c_D color within one node");
        if (!sorted.empty() && static_cast<long long>(sorted.back()) > D.act_bound)
            throw LemmaViolation("c_D color exceeds 5^{k+1}");
    }

    D.color_index.assign(m + 1, {});
    for (int t = 1; t <= m; ++t) {
        for (int vid : D.at_node[t]) D.color_index[t].emplace_back(D.verts[vid].color, vid);
        std::sort(D.color_index[t].begin(), D.color_index[t].end());
    }
}

int SigTable::intern(const std::vector<int>& s) {
    auto it = index.find(s);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(seqs.size());
    seqs.push_back(s);
    index.emplace(s, id);
    return id;
}

int SigTable::extend_front(int color, int sig) {
    auto key = std::make_pair(color, sig);
    auto it = front_memo.find(key);
    if (it != front_memo.end()) return it->second;
    std::vector<int> s;
    if (seqs[sig].empty() || seqs[sig].front() != color) {
        s.reserve(seqs[sig].size() + 1);
        s.push_back(color);
        s.insert(s.end(), seqs[sig].begin(), seqs[sig].end());
    } else {
        s = seqs[sig];
    }
    int id = intern(s);
    front_memo.emplace(key, id);
    return id;
}

int SigTable::extend_back(int sig, int color) {
    auto key = std::make_pair(sig, color);
    auto it = back_memo.find(key);
    if (it != back_memo.end()) return it->second;
    std::vector<int> s = seqs[sig];
    if (s.empty() || s.back() != color) s.push_back(color);
    int id = intern(s);
    back_memo.emplace(key, id);
    return id;
}

std::vector<int> signature_of_path(const SignatureDag& D, const std::vector<int>& path) {
    if (path.empty()) throw NotAPath("empty vertex list");
    std::vector<int> sig;
    for (size_t i = 0; i < path.size(); ++i) {
        int v = path[i];
        if (i + 1 < path.size()) {
            int b = path[i + 1];
            int cn = D.verts[b].node;
            bool edge_ok = cn >= 1 && D.node_parent[cn] == D.verts[v].node && D.out_vertex(v, cn) == b;
            if (!edge_ok) throw NotAPath("consecutive vertices not joined by an edge");
        }
        int c = D.verts[v].color;
        if (sig.empty() || sig.back() != c) sig.push_back(c);
    }
    for (size_t i = 0; i + 1 < sig.size(); ++i)
        if (sig[i] <= sig[i + 1]) throw NotAPath("colors along the path are not strictly decreasing after dedup");
    return sig;
}

std::vector<int> tree_of(const SignatureDag& D, int d, int gamma) {
    if (D.verts[d].color != gamma) throw ColorMismatch("tree_of root must carry the requested color");
    std::vector<int> out{d};
    for (size_t i = 0; i < out.size(); ++i) {
        int v = out[i];
        for (int child : D.node_children[D.verts[v].node]) {
            int w = D.out_vertex(v, child);
            if (D.verts[w].color == gamma) out.push_back(w);
        }
    }
    return out;
}

std::vector<int> project_to_tree(const SignatureDag& D, const std::vector<int>& verts) {
    std::vector<int> nodes;
    nodes.reserve(verts.size());
    for (int v : verts) nodes.push_back(D.verts[v].node);
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    return nodes;
}

RealizedInfo enumerate_realized(const SignatureDag& D, const NormalizedDecomposition& N) {
    RealizedInfo R;
    const int m = N.td.m;

    std::vector<char> is_root_node(m + 1, 0);
    std::vector<int> roots;
    for (int z = 1; z < static_cast<int>(N.root_of.size()); ++z) {
        is_root_node[N.root_of[z]] = 1;
        roots.push_back(N.root_of[z]);
    }
    std::sort(roots.begin(), roots.end());

    // triples: depth-first down from every vertex, recording root_of endpoints
    for (int start = 0; start < static_cast<int>(D.verts.size()); ++start) {
        std::vector<std::pair<int, int>> stack; // (vertex, sig so far)
        stack.emplace_back(start, R.sigs.intern({D.verts[start].color}));
        while (!stack.empty()) {
            auto [v, s] = stack.back();
            stack.pop_back();
            int t = D.verts[v].node;
            if (is_root_node[t]) R.triples.push_back({start, s, t});
            for (int c : N.tree.children[t]) {
                int w = D.out_vertex(v, c);
                stack.emplace_back(w, R.sigs.extend_back(s, D.verts[w].color));
            }
        }
    }
    std::sort(R.triples.begin(), R.triples.end());

    // walk signatures from every vertex of every ancestor level down to each root node
    for (int r : roots) {
        if (R.walk_sig.count({r, r})) continue;
        std::vector<int> path; // r up to the tree root
        for (int t = r;; t = N.tree.parent[t]) {
            path.push_back(t);
            if (t == N.tree.root) break;
        }
        {
            std::vector<int> sig(D.at_node[r].size());
            for (size_t i = 0; i < sig.size(); ++i) sig[i] = R.sigs.intern({D.verts[D.at_node[r][i]].color});
            R.walk_sig[{r, r}] = std::move(sig);
        }
        for (size_t pi = 1; pi < path.size(); ++pi) {
            int u = path[pi], below = path[pi - 1];
            const auto& next_sig = R.walk_sig[{r, below}];
            std::vector<int> sig(D.at_node[u].size());
            for (size_t i = 0; i < sig.size(); ++i) {
                int v = D.at_node[u][i];
                int w = D.out_vertex(v, below);
                sig[i] = R.sigs.extend_front(D.verts[v].color, next_sig[D.pos_in_node[w]]);
            }
            R.walk_sig[{r, u}] = std::move(sig);
        }
    }

    // pairs (Gamma, Delta) sharing their start vertex at the meet of two root nodes
    std::set<std::pair<int, int>> pairset;
    std::set<int> case2set;
    const int n = static_cast<int>(N.root_of.size()) - 1;
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y) {
            if (x == y) continue;
            int rx = N.root_of[x], ry = N.root_of[y];
            int mm = N.tree.meet(rx, ry);
            const auto& tx = R.walk_sig.at({rx, mm});
            const auto& ty = R.walk_sig.at({ry, mm});
            for (size_t i = 0; i < D.at_node[mm].size(); ++i) {
                pairset.emplace(tx[i], ty[i]);
                if (rx != mm) case2set.insert(tx[i]);
            }
        }
    R.pairs.assign(pairset.begin(), pairset.end());
    R.case2.assign(case2set.begin(), case2set.end());
    return R;
}

std::string dump_dag(const SignatureDag& D, const NormalizedDecomposition& N) {
    std::ostringstream out;
    for (int v = 0; v < static_cast<int>(D.verts.size()); ++v)
        out << "d " << v << ' ' << D.verts[v].node << ' ' << veckey_str(D.verts[v].key) << ' ' << D.verts[v].color
            << '\n';
    for (int t = 2; t <= N.td.m; ++t)
        for (int pv : D.at_node[N.tree.parent[t]]) out << "e " << pv << ' ' << D.out_vertex(pv, t) << '\n';
    return out.str();
}

} // namespace bdim
