#include "bdim/families.hpp"

#include <algorithm>
#include <queue>

namespace bdim {

FamilyContext::FamilyContext(const SignatureDag& D, const NormalizedDecomposition& N, FamilyOptions opt)
    : D_(D), N_(N), opt_(opt) {}

bool FamilyContext::is_gamma_break(int t, int gamma) const { return D_.colored_vertex(t, gamma) == -1; }

bool FamilyContext::is_gamma_restart(int t, int gamma) const {
    int v = D_.colored_vertex(t, gamma);
    return v != -1 && D_.verts[v].source;
}

bool FamilyContext::merges_into(int child_node, int gamma_hi, int gamma_lo) const {
    if (gamma_lo >= gamma_hi) throw BadColorOrder("merges_into needs gamma_lo < gamma_hi");
    int parent = D_.node_parent[child_node];
    int d = D_.colored_vertex(parent, gamma_hi);
    if (d == -1) return false;
    return D_.verts[D_.out_vertex(d, child_node)].color == gamma_lo;
}

TreeFamily FamilyContext::seal(std::vector<FamilyMember> members) const {
    TreeFamily F;
    F.members = std::move(members);
    F.member_of.assign(N_.td.m + 1, -1);
    for (int i = 0; i < static_cast<int>(F.members.size()); ++i)
        for (int t : F.members[i].nodes) {
            if (F.member_of[t] != -1)
                throw OddCycle("family members are not pairwise disjoint at node " + std::to_string(t));
            F.member_of[t] = i;
        }
    return F;
}

const TreeFamily& FamilyContext::base_family(int gamma) {
    auto it = base_.find(gamma);
    if (it != base_.end()) return it->second;
    std::vector<FamilyMember> members;
    for (int d = 0; d < static_cast<int>(D_.verts.size()); ++d) {
        if (!D_.verts[d].source || D_.verts[d].color != gamma) continue;
        FamilyMember mem;
        mem.root = D_.verts[d].node;
        mem.nodes = project_to_tree(D_, tree_of(D_, d, gamma));
        members.push_back(std::move(mem));
    }
    return base_.emplace(gamma, seal(std::move(members))).first->second;
}

FamilyContext::PlusFamily FamilyContext::extend_plus(const TreeFamily& F, int gamma_last, int gamma_new) const {
    if (gamma_new >= gamma_last) throw BadColorOrder("extension color must be below the last signature color");
    PlusFamily plus;
    for (int qi = 0; qi < static_cast<int>(F.members.size()); ++qi) {
        const FamilyMember& Q = F.members[qi];
        // reach(t): the break/restart condition holds somewhere on [root, t]
        std::map<int, char> reach;
        std::vector<int> order; // Q nodes, root first (increasing depth works within a subtree)
        order = Q.nodes;
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return N_.tree.depth[a] < N_.tree.depth[b]; });
        for (int t : order) {
            char r = t == Q.root ? 0 : reach[N_.tree.parent[t]];
            if (is_gamma_break(t, gamma_new)) r = 1;
            if (opt_.guard_restarts && t != Q.root && is_gamma_restart(t, gamma_new)) r = 1;
            reach[t] = r;
        }
        std::vector<int> nodes;
        for (int t : order) {
            bool leaf = true;
            for (int c : N_.tree.children[t])
                if (Q.contains(c)) leaf = false;
            if (!opt_.extend_all_boundary && !leaf) continue;
            for (int c : N_.tree.children[t]) {
                if (Q.contains(c)) continue;
                bool cond_a = reach[t] != 0;
                if (opt_.guard_restarts && !cond_a && is_gamma_restart(c, gamma_new)) cond_a = true;
                if (!cond_a) continue;
                if (!merges_into(c, gamma_last, gamma_new)) continue;
                // [root, c] plus the projected gamma-tree hanging at c
                for (int u = c;; u = N_.tree.parent[u]) {
                    nodes.push_back(u);
                    if (u == Q.root) break;
                }
                int d = D_.colored_vertex(c, gamma_new);
                auto pr = project_to_tree(D_, tree_of(D_, d, gamma_new));
                nodes.insert(nodes.end(), pr.begin(), pr.end());
            }
        }
        if (nodes.empty()) continue;
        std::sort(nodes.begin(), nodes.end());
        nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
        FamilyMember mem;
        mem.root = Q.root;
        mem.nodes = std::move(nodes);
        plus.members.push_back(std::move(mem));
        plus.parent_member.push_back(qi);
    }
    return plus;
}

FamilyContext::SplitResult FamilyContext::split_two(const PlusFamily& plus) const {
    const int k = static_cast<int>(plus.members.size());
    // full intersection graph
    std::vector<std::vector<int>> holders(N_.td.m + 1);
    for (int i = 0; i < k; ++i)
        for (int t : plus.members[i].nodes) holders[t].push_back(i);
    std::vector<std::vector<int>> adj(k);
    for (const auto& h : holders)
        for (size_t a = 0; a < h.size(); ++a)
            for (size_t b = a + 1; b < h.size(); ++b) {
                adj[h[a]].push_back(h[b]);
                adj[h[b]].push_back(h[a]);
            }
    for (auto& a : adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    std::vector<int> side(k, 0);
    for (int s = 0; s < k; ++s) {
        if (side[s] != 0) continue;
        side[s] = 1; // the smallest-index member of each component lands in part 1
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u : adj[v]) {
                if (side[u] == 0) {
                    side[u] = 3 - side[v];
                    q.push(u);
                } else if (side[u] == side[v]) {
                    throw OddCycle("intersection graph of the intermediate family is not bipartite");
                }
            }
        }
    }
    std::vector<FamilyMember> m1, m2;
    for (int i = 0; i < k; ++i) (side[i] == 1 ? m1 : m2).push_back(plus.members[i]);
    SplitResult r{seal(std::move(m1)), seal(std::move(m2)), std::move(side)};
    return r;
}

namespace {

void check_key(const std::vector<int>& gamma, const std::string& alpha) {
    if (gamma.empty() || alpha.size() + 1 != gamma.size())
        throw MalformedKey("need |alpha| == |Gamma| - 1 and Gamma nonempty");
    for (size_t i = 0; i + 1 < gamma.size(); ++i)
        if (gamma[i] <= gamma[i + 1]) throw MalformedKey("Gamma must be strictly decreasing");
    for (char c : alpha)
        if (c != '0' && c != '1' && c != '2') throw MalformedKey("alpha digits must be 0, 1 or 2");
}

} // namespace

const FamilyContext::Extension& FamilyContext::extension(const std::vector<int>& gamma, const std::string& alpha,
                                                         int gamma_new) {
    auto key = std::make_pair(std::make_pair(gamma, alpha), gamma_new);
    auto it = ext_.find(key);
    if (it != ext_.end()) return it->second;
    const TreeFamily& F = family(gamma, alpha);
    PlusFamily plus = extend_plus(F, gamma.back(), gamma_new);
    SplitResult split = split_two(plus);
    Extension e;
    e.part1 = std::move(split.part1);
    e.part2 = std::move(split.part2);
    e.offspring_part.assign(F.members.size(), 0);
    for (size_t i = 0; i < plus.members.size(); ++i) e.offspring_part[plus.parent_member[i]] = split.side[i];
    return ext_.emplace(std::move(key), std::move(e)).first->second;
}

const TreeFamily& FamilyContext::family(const std::vector<int>& gamma, const std::string& alpha) {
    check_key(gamma, alpha);
    if (gamma.size() == 1) return base_family(gamma[0]);
    if (alpha.back() == '0') return base_family(gamma.back());
    auto key = std::make_pair(gamma, alpha);
    auto it = fam_.find(key);
    if (it != fam_.end()) return it->second;
    std::vector<int> prefix(gamma.begin(), gamma.end() - 1);
    std::string palpha = alpha.substr(0, alpha.size() - 1);
    const Extension& e = extension(prefix, palpha, gamma.back());
    const TreeFamily& part = alpha.back() == '1' ? e.part1 : e.part2;
    return fam_.emplace(std::move(key), part).first->second;
}

const std::vector<int>& FamilyContext::offspring_parts(const std::vector<int>& gamma, const std::string& alpha,
                                                       int gamma_new) {
    check_key(gamma, alpha);
    return extension(gamma, alpha, gamma_new).offspring_part;
}

std::vector<std::pair<std::pair<std::vector<int>, std::string>, const TreeFamily*>> FamilyContext::all_built() const {
    std::vector<std::pair<std::pair<std::vector<int>, std::string>, const TreeFamily*>> out;
    for (const auto& [g, f] : base_) out.push_back({{{g}, ""}, &f});
    for (const auto& [k, f] : fam_) out.push_back({k, &f});
    return out;
}

} // namespace bdim
