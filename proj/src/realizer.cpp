#include "bdim/realizer.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "json.hpp"

namespace bdim {

OrderBits Realizer::bits_for(int x, int y) const {
    if (x < 1 || x > n || y < 1 || y > n) throw IdOutOfRange("query ids must lie in 1.." + std::to_string(n));
    OrderBits bits(perms.size());
    for (size_t i = 0; i < perms.size(); ++i) bits[i] = x != y && perms[i].before(x, y);
    return bits;
}

bool Realizer::query(int x, int y) const { return query_bits(bits_for(x, y)); }

bool Realizer::query_bits(const OrderBits& bits) const {
    if (bits.size() != perms.size()) throw BitLengthMismatch("expected " + std::to_string(perms.size()) + " bits");
    return prog.eval(bits);
}

int count_permutations(const Realizer& R) { return static_cast<int>(R.perms.size()); }

BigInt paper_bound(int k) {
    if (k < 0) throw InvalidArgument("width must be nonnegative");
    long long e = 1;
    for (int i = 0; i <= k; ++i) {
        e *= 5;
        if (e > 10'000'000) throw InvalidArgument("paper bound exponent 5^(k+1) too large to evaluate");
    }
    BigInt two = boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(e));
    return 6 * two * two + 4 * two - 6; // 4^e == (2^e)^2
}

Permutation induce_perm(const Permutation& tree_perm, const NormalizedDecomposition& N) {
    std::vector<int> elem_at(N.td.m + 1, 0);
    for (int z = 1; z < static_cast<int>(N.root_of.size()); ++z) elem_at[N.root_of[z]] = z;
    std::vector<int> seq;
    seq.reserve(N.root_of.size() - 1);
    for (int t : tree_perm.seq())
        if (elem_at[t] != 0) seq.push_back(elem_at[t]);
    return Permutation(std::move(seq));
}

namespace {

// Deduplicating pool of element permutations; the bit index of a permutation
// is its position here.
struct PermPool {
    std::vector<Permutation> perms;
    std::map<std::vector<int>, int> index;

    int add(const Permutation& p) {
        auto it = index.find(p.seq());
        if (it != index.end()) return it->second;
        int id = static_cast<int>(perms.size());
        perms.push_back(p);
        index.emplace(p.seq(), id);
        return id;
    }
};

struct PermSink {
    virtual int add(const Permutation& tree_perm) = 0;
    virtual ~PermSink() = default;
    int idxL = -1, idxR = -1;
};

struct Detection {
    int b[5];
};

// Emits the three fresh permutations of one color-detection instance.
Detection emit_detection(const RootedTree& tree, const EdgeColoring& colors, PermSink& sink, int& fresh) {
    Detection d;
    d.b[0] = sink.idxL;
    d.b[1] = sink.idxR;
    d.b[2] = sink.add(algo1_perm(tree, colors));
    d.b[3] = sink.add(algo2_perm(tree, colors));
    d.b[4] = sink.add(algo2_perm(mirrored(tree), colors));
    fresh += 3;
    return d;
}

// Builder for the per-signature subprogram; emits side-X and side-Y node
// trees sharing one set of detections.
struct BGammaBuilder {
    const NormalizedDecomposition& N;
    FamilyContext& ctx;
    PermSink& sink;
    BranchingProgram& prog;
    std::vector<int> gamma;
    int detections = 0;
    int fresh = 0;

    int const0() { return prog.add({ProgramNode::Kind::Const, 0, {}, {}}); }

    std::vector<int> det_bits(const Detection& d) { return {d.b[0], d.b[1], d.b[2], d.b[3], d.b[4]}; }

    // all child edges of member nodes red, everything else green
    EdgeColoring membership_coloring(const TreeFamily& F) {
        EdgeColoring col(N.td.m);
        for (int c = 2; c <= N.td.m; ++c)
            col.set(c, F.member_of[N.tree.parent[c]] != -1 ? EdgeColor::Red : EdgeColor::Green);
        return col;
    }

    std::pair<int, int> build(size_t i, const std::string& alpha, const TreeFamily& F) {
        if (F.empty()) {
            int z = const0();
            return {z, z};
        }
        if (i + 1 == gamma.size()) {
            // the walk must end here: x∧y and the endpoint share a member
            EdgeColoring col(N.td.m);
            for (int c = 2; c <= N.td.m; ++c) {
                int p = N.tree.parent[c];
                bool inside = F.member_of[c] != -1 && F.member_of[c] == F.member_of[p];
                if (!inside) col.set(c, EdgeColor::Red);
            }
            Detection d = emit_detection(N.tree, col, sink, fresh);
            ++detections;
            int nx = prog.add({ProgramNode::Kind::BgLeaf, 0, det_bits(d), {}});
            int ny = prog.add({ProgramNode::Kind::BgLeaf, 1, det_bits(d), {}});
            return {nx, ny};
        }

        int g_cur = gamma[i], g_next = gamma[i + 1];
        std::vector<int> prefix(gamma.begin(), gamma.begin() + i + 1);
        const auto& off_parts = ctx.offspring_parts(prefix, alpha, g_next);
        const TreeFamily& F0 = ctx.base_family(g_next);
        std::vector<int> full(gamma.begin(), gamma.begin() + i + 2);
        const TreeFamily& F1 = ctx.family(full, alpha + "1");
        const TreeFamily& F2 = ctx.family(full, alpha + "2");

        std::pair<int, int> ch0{-1, -1}, ch1{-1, -1}, ch2{-1, -1};
        if (!F0.empty()) ch0 = build(i + 1, alpha + "0", F0);
        if (!F1.empty()) ch1 = build(i + 1, alpha + "1", F1);
        if (!F2.empty()) ch2 = build(i + 1, alpha + "2", F2);
        if (ch0.first == -1 && ch1.first == -1 && ch2.first == -1) {
            int z = const0();
            return {z, z};
        }

        // step 1: does the walk continue with g_next? red on boundary merge edges
        EdgeColoring colA(N.td.m);
        for (int c = 2; c <= N.td.m; ++c) {
            int p = N.tree.parent[c];
            int q = F.member_of[p];
            if (q == -1 || F.member_of[c] == q) continue;
            colA.set(c, ctx.merges_into(c, g_cur, g_next) ? EdgeColor::Red : EdgeColor::Green);
        }
        Detection dA = emit_detection(N.tree, colA, sink, fresh);
        ++detections;

        // step 2a: break (or restart) detection between the fresh-family and
        // extended-family routes
        EdgeColoring colB(N.td.m);
        for (int c = 2; c <= N.td.m; ++c) {
            int p = N.tree.parent[c];
            int q = F.member_of[p];
            if (q != -1 && F.member_of[c] != q) colB.set(c, EdgeColor::Green);
        }
        for (int t = 1; t <= N.td.m; ++t) {
            if (ctx.is_gamma_break(t, g_next))
                for (int c : N.tree.children[t]) colB.set(c, EdgeColor::Red);
            if (ctx.options().guard_restarts && t != N.tree.root && ctx.is_gamma_restart(t, g_next))
                colB.set(t, EdgeColor::Red);
        }
        Detection dB = emit_detection(N.tree, colB, sink, fresh);
        ++detections;

        std::vector<int> bits = det_bits(dA);
        auto append = [&bits](const Detection& d) {
            for (int i = 0; i < 5; ++i) bits.push_back(d.b[i]);
        };
        append(dB);

        // step 2b: which split part holds the offspring of x∧y's member
        if (ch1.first != -1) {
            TreeFamily sub1;
            sub1.member_of.assign(N.td.m + 1, -1);
            for (int qi = 0; qi < static_cast<int>(F.members.size()); ++qi)
                if (off_parts[qi] == 1)
                    for (int t : F.members[qi].nodes) sub1.member_of[t] = qi;
            append(emit_detection(N.tree, membership_coloring(sub1), sink, fresh));
            ++detections;
        }
        if (ch2.first != -1) {
            TreeFamily sub2;
            sub2.member_of.assign(N.td.m + 1, -1);
            for (int qi = 0; qi < static_cast<int>(F.members.size()); ++qi)
                if (off_parts[qi] == 2)
                    for (int t : F.members[qi].nodes) sub2.member_of[t] = qi;
            append(emit_detection(N.tree, membership_coloring(sub2), sink, fresh));
            ++detections;
        }

        int nx = prog.add({ProgramNode::Kind::BgStep, 0, bits, {ch0.first, ch1.first, ch2.first}});
        int ny = prog.add({ProgramNode::Kind::BgStep, 1, bits, {ch0.second, ch1.second, ch2.second}});
        return {nx, ny};
    }

    // returns (side-x root, side-y root)
    std::pair<int, int> emit() {
        const TreeFamily& F1 = ctx.family({gamma[0]}, "");
        if (F1.empty()) {
            int z = const0();
            return {z, z};
        }
        Detection d0 = emit_detection(N.tree, membership_coloring(F1), sink, fresh);
        ++detections;
        auto body = build(0, "", F1);
        int nx = prog.add({ProgramNode::Kind::BgRoot, 0, det_bits(d0), {body.first}});
        int ny = prog.add({ProgramNode::Kind::BgRoot, 1, det_bits(d0), {body.second}});
        return {nx, ny};
    }
};

long long gamma_budget(size_t len) {
    long long b = 3;
    for (size_t i = 0; i < len; ++i) b *= 3;
    return b - 1;
}

} // namespace

BGammaProgram build_b_gamma(const NormalizedDecomposition& N, FamilyContext& ctx, const std::vector<int>& gamma) {
    struct TreeSink : PermSink {
        std::vector<Permutation> perms;
        std::map<std::vector<int>, int> index;
        int add(const Permutation& p) override {
            auto it = index.find(p.seq());
            if (it != index.end()) return it->second;
            perms.push_back(p);
            index.emplace(p.seq(), static_cast<int>(perms.size()) - 1);
            return static_cast<int>(perms.size()) - 1;
        }
    };
    BGammaProgram out;
    TreeSink sink;
    auto [piL, piR] = dfs_orders(N.tree);
    sink.idxL = sink.add(piL);
    sink.idxR = sink.add(piR);
    BGammaBuilder b{N, ctx, sink, out.prog, gamma};
    auto [nx, ny] = b.emit();
    out.root_x = nx;
    out.root_y = ny;
    out.tree_perms = std::move(sink.perms);
    out.detections = b.detections;
    out.fresh_perms = b.fresh;
    return out;
}

bool BGammaProgram::query(int tx, int ty, Side side) const {
    OrderBits bits(tree_perms.size());
    for (size_t i = 0; i < tree_perms.size(); ++i) bits[i] = tx != ty && tree_perms[i].before(tx, ty);
    return prog.eval_node(side == Side::X ? root_x : root_y, bits);
}

Realizer build_realizer(const Poset& P, const TreeDecomposition& T, BuildOptions opt) {
    NormalizedDecomposition N = normalize(P, T);
    ElementColoring c = greedy_color(P, N);
    SignatureDag D = build_dag(P, N, c);
    color_dag(D, N);
    RealizedInfo R = enumerate_realized(D, N);
    FamilyContext ctx(D, N, opt.family);

    Realizer out;
    out.n = P.n;
    out.k = N.width;
    out.meta.tree_nodes = N.td.m;
    out.meta.dag_vertices = static_cast<int>(D.verts.size());
    out.meta.realized_pairs = static_cast<int>(R.pairs.size());
    out.meta.paper_bound_dec = paper_bound(out.k).str();

    PermPool pool;
    struct InduceSink : PermSink {
        PermPool& pool;
        const NormalizedDecomposition& N;
        InduceSink(PermPool& p, const NormalizedDecomposition& n) : pool(p), N(n) {}
        int add(const Permutation& tree_perm) override { return pool.add(induce_perm(tree_perm, N)); }
    } sink(pool, N);

    // equality pair, then the shared search orders
    Permutation base = identity_perm(P.n);
    int eq_f = pool.add(base);
    int eq_r = pool.add(reverse(base));
    auto [piL, piR] = dfs_orders(N.tree);
    sink.idxL = sink.add(piL);
    sink.idxR = sink.add(piR);

    BranchingProgram& prog = out.prog;
    int eq_node = prog.add({ProgramNode::Kind::Eq, 0, {eq_f, eq_r}, {}});

    // membership permutations per terminal color, shared across signatures
    std::map<int, Detection> smemb_gt, smemb_lt; // only b[0..2] used
    auto smemb = [&](int color, bool greater) -> Detection& {
        auto& cache = greater ? smemb_gt : smemb_lt;
        auto it = cache.find(color);
        if (it != cache.end()) return it->second;
        std::vector<int> V(P.n), C;
        std::iota(V.begin(), V.end(), 1);
        for (int z = 1; z <= P.n; ++z) {
            int d = D.colored_vertex(N.root_of[z], color);
            if (d == -1) continue;
            Rel r = D.verts[d].key[c.color[z] - 1];
            bool ok = greater ? (r == Rel::GT || r == Rel::EQ) : (r == Rel::LT || r == Rel::EQ);
            if (ok) C.push_back(z);
        }
        auto ps = set_membership_build(V, C);
        Detection d{};
        for (int i = 0; i < 3; ++i) d.b[i] = pool.add(ps[i]);
        return cache.emplace(color, d).first->second;
    };

    // subprograms for the signatures reachable in the strict-ancestor case
    std::map<int, std::pair<int, int>> bgamma; // sig id -> (side-x node, side-y node)
    for (int sig : R.case2) {
        BGammaBuilder b{N, ctx, sink, prog, R.sigs.seq(sig)};
        bgamma[sig] = b.emit();
        GammaMeta gm;
        gm.colors = R.sigs.seq(sig);
        gm.detections = b.detections;
        gm.fresh_perms = b.fresh;
        gm.budget = gamma_budget(gm.colors.size());
        out.meta.per_gamma.push_back(std::move(gm));
    }

    // one N_{>,Gamma} node per signature, shared over all pairs; same for N_{<,Delta}
    std::map<int, int> gt_nodes, lt_nodes;
    auto gt_node = [&](int sig) {
        auto it = gt_nodes.find(sig);
        if (it != gt_nodes.end()) return it->second;
        const auto& colors = R.sigs.seq(sig);
        const Detection& sm = smemb(colors.back(), true);
        int member = prog.add({ProgramNode::Kind::SetMember, 0, {sm.b[0], sm.b[1], sm.b[2]}, {}});
        int case1 = prog.add({ProgramNode::Kind::Const, colors.size() == 1 ? 1 : 0, {}, {}});
        auto bg = bgamma.find(sig);
        int walk = bg == bgamma.end() ? -1 : bg->second.first;
        int sw = prog.add({ProgramNode::Kind::RelSwitch, 0, {sink.idxL, sink.idxR}, {case1, walk, walk, walk}});
        int node = prog.add({ProgramNode::Kind::And, 0, {}, {member, sw}});
        gt_nodes.emplace(sig, node);
        return node;
    };
    auto lt_node = [&](int sig) {
        auto it = lt_nodes.find(sig);
        if (it != lt_nodes.end()) return it->second;
        const auto& colors = R.sigs.seq(sig);
        const Detection& sm = smemb(colors.back(), false);
        int member = prog.add({ProgramNode::Kind::SetMember, 1, {sm.b[0], sm.b[1], sm.b[2]}, {}});
        int case1 = prog.add({ProgramNode::Kind::Const, colors.size() == 1 ? 1 : 0, {}, {}});
        auto bg = bgamma.find(sig);
        int walk = bg == bgamma.end() ? -1 : bg->second.second;
        int sw = prog.add({ProgramNode::Kind::RelSwitch, 0, {sink.idxL, sink.idxR}, {walk, case1, walk, walk}});
        int node = prog.add({ProgramNode::Kind::And, 0, {}, {member, sw}});
        lt_nodes.emplace(sig, node);
        return node;
    };

    std::vector<int> root_children{eq_node};
    for (auto [gsig, dsig] : R.pairs) {
        int child = prog.add({ProgramNode::Kind::And, 0, {}, {gt_node(gsig), lt_node(dsig)}});
        root_children.push_back(child);
    }
    prog.root = prog.add({ProgramNode::Kind::Or, 0, {}, std::move(root_children)});

    std::set<int> sigs;
    for (auto [g, d] : R.pairs) {
        sigs.insert(g);
        sigs.insert(d);
    }
    out.meta.realized_signatures = static_cast<int>(sigs.size());
    out.perms = std::move(pool.perms);
    return out;
}

// --- serialization -----------------------------------------------------------

namespace {

const char* kind_name(ProgramNode::Kind k) {
    switch (k) {
        case ProgramNode::Kind::Const: return "const";
        case ProgramNode::Kind::Bit: return "bit";
        case ProgramNode::Kind::Not: return "not";
        case ProgramNode::Kind::And: return "and";
        case ProgramNode::Kind::Or: return "or";
        case ProgramNode::Kind::Xor: return "xor";
        case ProgramNode::Kind::Eq: return "eq";
        case ProgramNode::Kind::SetMember: return "setmem";
        case ProgramNode::Kind::RelSwitch: return "relsw";
        case ProgramNode::Kind::ColorDet: return "cdet";
        case ProgramNode::Kind::BgRoot: return "bgroot";
        case ProgramNode::Kind::BgStep: return "bgstep";
        case ProgramNode::Kind::BgLeaf: return "bgleaf";
    }
    return "?";
}

ProgramNode::Kind kind_from(const std::string& s) {
    static const std::map<std::string, ProgramNode::Kind> m = {
        {"const", ProgramNode::Kind::Const},   {"bit", ProgramNode::Kind::Bit},
        {"not", ProgramNode::Kind::Not},       {"and", ProgramNode::Kind::And},
        {"or", ProgramNode::Kind::Or},         {"xor", ProgramNode::Kind::Xor},
        {"eq", ProgramNode::Kind::Eq},         {"setmem", ProgramNode::Kind::SetMember},
        {"relsw", ProgramNode::Kind::RelSwitch}, {"cdet", ProgramNode::Kind::ColorDet},
        {"bgroot", ProgramNode::Kind::BgRoot}, {"bgstep", ProgramNode::Kind::BgStep},
        {"bgleaf", ProgramNode::Kind::BgLeaf},
    };
    auto it = m.find(s);
    if (it == m.end()) throw CorruptPayload("unknown node kind `" + s + "`");
    return it->second;
}

} // namespace

std::string serialize(const Realizer& R) {
    nlohmann::ordered_json j;
    j["version"] = 1;
    j["n"] = R.n;
    j["k"] = R.k;
    j["permutations"] = nlohmann::json::array();
    for (const auto& p : R.perms) j["permutations"].push_back(p.seq());
    nlohmann::ordered_json prog;
    prog["root"] = R.prog.root;
    prog["nodes"] = nlohmann::json::array();
    for (const auto& n : R.prog.nodes) {
        nlohmann::ordered_json jn;
        jn["k"] = kind_name(n.kind);
        jn["v"] = n.value;
        jn["bits"] = n.bits;
        jn["ch"] = n.children;
        prog["nodes"].push_back(std::move(jn));
    }
    j["program"] = std::move(prog);
    nlohmann::ordered_json meta;
    meta["tree_nodes"] = R.meta.tree_nodes;
    meta["dag_vertices"] = R.meta.dag_vertices;
    meta["realized_signatures"] = R.meta.realized_signatures;
    meta["realized_pairs"] = R.meta.realized_pairs;
    meta["permutation_count"] = R.perms.size();
    meta["paper_bound"] = R.meta.paper_bound_dec;
    meta["per_gamma"] = nlohmann::json::array();
    for (const auto& g : R.meta.per_gamma) {
        nlohmann::ordered_json jg;
        jg["colors"] = g.colors;
        jg["detections"] = g.detections;
        jg["fresh_perms"] = g.fresh_perms;
        jg["budget"] = g.budget;
        meta["per_gamma"].push_back(std::move(jg));
    }
    j["metadata"] = std::move(meta);
    return j.dump(2) + "\n";
}

Realizer deserialize(const std::string& bytes) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(bytes);
    } catch (const nlohmann::json::exception& e) {
        throw CorruptPayload(std::string("not valid JSON: ") + e.what());
    }
    try {
        if (!j.contains("version")) throw CorruptPayload("missing version");
        if (j["version"].get<int>() != 1)
            throw VersionMismatch("unsupported version " + j["version"].dump());
        Realizer R;
        R.n = j.at("n").get<int>();
        R.k = j.at("k").get<int>();
        for (const auto& p : j.at("permutations")) {
            Permutation perm(p.get<std::vector<int>>());
            if (perm.size() != R.n) throw CorruptPayload("permutation of wrong size");
            for (int z = 1; z <= R.n; ++z)
                if (!perm.contains(z)) throw CorruptPayload("permutation is not onto 1..n");
            R.perms.push_back(std::move(perm));
        }
        const auto& prog = j.at("program");
        R.prog.root = prog.at("root").get<int>();
        for (const auto& jn : prog.at("nodes")) {
            ProgramNode n;
            n.kind = kind_from(jn.at("k").get<std::string>());
            n.value = jn.at("v").get<int>();
            n.bits = jn.at("bits").get<std::vector<int>>();
            n.children = jn.at("ch").get<std::vector<int>>();
            for (int b : n.bits)
                if (b < 0 || b >= static_cast<int>(R.perms.size())) throw CorruptPayload("bit index out of range");
            R.prog.nodes.push_back(std::move(n));
        }
        for (const auto& n : R.prog.nodes)
            for (int ch : n.children)
                if (ch < -1 || ch >= static_cast<int>(R.prog.nodes.size()))
                    throw CorruptPayload("child id out of range");
        if (R.prog.root < 0 || R.prog.root >= static_cast<int>(R.prog.nodes.size()))
            throw CorruptPayload("root id out of range");
        const auto& meta = j.at("metadata");
        R.meta.tree_nodes = meta.value("tree_nodes", 0);
        R.meta.dag_vertices = meta.value("dag_vertices", 0);
        R.meta.realized_signatures = meta.value("realized_signatures", 0);
        R.meta.realized_pairs = meta.value("realized_pairs", 0);
        R.meta.paper_bound_dec = meta.value("paper_bound", std::string());
        if (meta.contains("per_gamma"))
            for (const auto& jg : meta["per_gamma"]) {
                GammaMeta g;
                g.colors = jg.at("colors").get<std::vector<int>>();
                g.detections = jg.at("detections").get<int>();
                g.fresh_perms = jg.at("fresh_perms").get<int>();
                g.budget = jg.at("budget").get<long long>();
                R.meta.per_gamma.push_back(std::move(g));
            }
        return R;
    } catch (const nlohmann::json::exception& e) {
        throw CorruptPayload(std::string("malformed payload: ") + e.what());
    }
}

Realizer standard_example_realizer(int n) {
    if (n < 2) throw NTooSmall("standard example needs n >= 2");
    Realizer R;
    R.n = 2 * n;
    R.k = -1;
    std::vector<int> p1, p2, p3, p4;
    for (int i = 1; i <= n; ++i) p1.push_back(i);
    for (int i = 1; i <= n; ++i) p1.push_back(n + i);
    for (int i = 1; i <= n; ++i) p2.push_back(n + i);
    for (int i = 1; i <= n; ++i) p2.push_back(i);
    for (int i = 1; i <= n; ++i) {
        p3.push_back(i);
        p3.push_back(n + i);
    }
    for (int i = n; i >= 1; --i) {
        p4.push_back(i);
        p4.push_back(n + i);
    }
    R.perms = {Permutation(p1), Permutation(p2), Permutation(p3), Permutation(p4)};

    // x <= y  iff  all four bits are 0 (x == y), or x is an a, y is a b and
    // their indices differ: s1 & !s2 & (s3 ^ s4)
    BranchingProgram& prog = R.prog;
    int b1 = prog.add({ProgramNode::Kind::Bit, 0, {0}, {}});
    int b2 = prog.add({ProgramNode::Kind::Bit, 0, {1}, {}});
    int b3 = prog.add({ProgramNode::Kind::Bit, 0, {2}, {}});
    int b4 = prog.add({ProgramNode::Kind::Bit, 0, {3}, {}});
    int n1 = prog.add({ProgramNode::Kind::Not, 0, {}, {b1}});
    int n2 = prog.add({ProgramNode::Kind::Not, 0, {}, {b2}});
    int n3 = prog.add({ProgramNode::Kind::Not, 0, {}, {b3}});
    int n4 = prog.add({ProgramNode::Kind::Not, 0, {}, {b4}});
    int all0 = prog.add({ProgramNode::Kind::And, 0, {}, {n1, n2, n3, n4}});
    int x34 = prog.add({ProgramNode::Kind::Xor, 0, {}, {b3, b4}});
    int cross = prog.add({ProgramNode::Kind::And, 0, {}, {b1, n2, x34}});
    prog.root = prog.add({ProgramNode::Kind::Or, 0, {}, {all0, cross}});
    return R;
}

} // namespace bdim
