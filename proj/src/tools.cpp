#include "bdim/tools.hpp"

#include <algorithm>

namespace bdim {

std::array<Permutation, 3> set_membership_build(const std::vector<int>& V, const std::vector<int>& C) {
    std::vector<int> vs = V;
    std::sort(vs.begin(), vs.end());
    std::vector<int> cs = C;
    std::sort(cs.begin(), cs.end());
    if (!std::includes(vs.begin(), vs.end(), cs.begin(), cs.end())) throw NotASubset("C must be a subset of V");
    std::vector<int> rest;
    std::set_difference(vs.begin(), vs.end(), cs.begin(), cs.end(), std::back_inserter(rest));
    Permutation piC((std::vector<int>(cs)));
    Permutation piR((std::vector<int>(rest)));
    return {concat(piC, piR), concat(reverse(piC), piR), concat(piC, reverse(piR))};
}

std::pair<bool, bool> set_membership_decode(bool b1, bool b2, bool b3) {
    if (b1 == b2 && b2 == b3) return {b1, !b1};    // different sides
    if (b1 == b3 && b1 != b2) return {true, true}; // both in C
    if (b1 == b2 && b1 != b3) return {false, false};
    throw ImpossiblePattern("order bits b2 == b3 != b1 cannot arise from the membership permutations");
}

std::pair<Permutation, Permutation> dfs_orders(const RootedTree& T) {
    Permutation l{std::vector<int>(T.preorder())};
    Permutation r{std::vector<int>(mirrored(T).preorder())};
    return {std::move(l), std::move(r)};
}

RelPos rel_pos(bool bitL, bool bitR) {
    if (bitL && bitR) return RelPos::XBelowY;
    if (!bitL && !bitR) return RelPos::YBelowX;
    if (bitL) return RelPos::XLeftOfY;
    return RelPos::YLeftOfX;
}

RootedTree mirrored(const RootedTree& T) {
    RootedTree M = T;
    for (auto& ch : M.children) std::reverse(ch.begin(), ch.end());
    return M;
}

namespace {

struct Algo1 {
    const RootedTree& T;
    const EdgeColoring& colors;
    std::vector<int> pi;
    std::vector<int> order; // preorder rank for the topological tie-break

    // Nodes of T_v reachable without crossing a colored edge, plus the nodes
    // just behind a first colored edge, bucketed by that edge's color.
    void classify(int v, std::vector<int>& C, std::vector<int>& R, std::vector<int>& G) const {
        C.push_back(v);
        for (size_t i = 0; i < C.size(); ++i) {
            int u = C[i];
            for (int w : T.children[u]) {
                switch (colors.at(w)) {
                    case EdgeColor::Uncolored: C.push_back(w); break;
                    case EdgeColor::Red: R.push_back(w); break;
                    case EdgeColor::Green: G.push_back(w); break;
                }
            }
        }
    }

    void process(int v) {
        std::vector<int> C, R, G;
        classify(v, C, R, G);
        for (int u : R) process(u);
        std::sort(C.begin(), C.end(), [&](int a, int b) {
            if (T.depth[a] != T.depth[b]) return T.depth[a] < T.depth[b];
            return order[a] < order[b];
        });
        pi.insert(pi.end(), C.begin(), C.end());
        for (int u : G) process(u);
    }
};

struct Algo2 {
    const RootedTree& T;
    const EdgeColoring& colors;
    std::vector<int> pi;
    std::vector<int> stack;

    void process(int v) {
        pi.push_back(v);
        for (int w : T.children[v]) {
            switch (colors.at(w)) {
                case EdgeColor::Uncolored:
                    process(w);
                    break;
                case EdgeColor::Red:
                    stack.push_back(w);
                    break;
                case EdgeColor::Green:
                    stack.push_back(v); // marks the beginning of the local stack of v
                    process(w);
                    while (stack.back() != v) {
                        int u = stack.back();
                        stack.pop_back();
                        process(u);
                    }
                    stack.pop_back(); // the marker
                    break;
            }
        }
    }
};

} // namespace

Permutation algo1_perm(const RootedTree& T, const EdgeColoring& colors) {
    Algo1 a{T, colors, {}, {}};
    a.order.assign(T.size() + 1, 0);
    auto pre = T.preorder();
    for (int i = 0; i < static_cast<int>(pre.size()); ++i) a.order[pre[i]] = i;
    a.pi.reserve(T.size());
    a.process(T.root);
    return Permutation(std::move(a.pi));
}

Permutation algo2_perm(const RootedTree& T, const EdgeColoring& colors) {
    Algo2 a{T, colors, {}, {}};
    a.pi.reserve(T.size());
    a.process(T.root);
    while (!a.stack.empty()) {
        int u = a.stack.back();
        a.stack.pop_back();
        a.process(u);
    }
    return Permutation(std::move(a.pi));
}

ColorDetector color_detect_build(const RootedTree& T, const EdgeColoring& colors) {
    auto [l, r] = dfs_orders(T);
    ColorDetector d;
    d.perms[0] = std::move(l);
    d.perms[1] = std::move(r);
    d.perms[2] = algo1_perm(T, colors);
    d.perms[3] = algo2_perm(T, colors);
    d.perms[4] = algo2_perm(mirrored(T), colors);
    return d;
}

bool color_detect_eval(const std::array<bool, 5>& bits, Side side) {
    switch (rel_pos(bits[0], bits[1])) {
        case RelPos::YBelowX:
            return side == Side::X ? bits[2] : false;
        case RelPos::XBelowY:
            return side == Side::Y ? !bits[2] : false;
        case RelPos::XLeftOfY:
            return side == Side::X ? !bits[3] : bits[4];
        case RelPos::YLeftOfX:
            return side == Side::X ? !bits[4] : bits[3];
    }
    return false;
}

} // namespace bdim
