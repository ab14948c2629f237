#ifndef BDIM_REALIZER_HPP
#define BDIM_REALIZER_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "bdim/bp.hpp"
#include "bdim/families.hpp"
#include "bdim/perm.hpp"
#include "bdim/poset.hpp"
#include "bdim/sigdag.hpp"
#include "bdim/treedec.hpp"

namespace bdim {

using BigInt = boost::multiprecision::cpp_int;

struct GammaMeta {
    std::vector<int> colors;
    int detections = 0;
    int fresh_perms = 0;    // permutations requested by the subprogram, before dedup
    long long budget = 0;   // 3^{|Gamma|+1} - 1
};

struct RealizerMeta {
    int tree_nodes = 0;
    int dag_vertices = 0;
    int realized_signatures = 0;
    int realized_pairs = 0;
    std::string paper_bound_dec;
    std::vector<GammaMeta> per_gamma;
};

// Permutations of the poset plus a branching program answering x <= y from
// per-permutation order bits alone.
struct Realizer {
    int n = 0;
    int k = -1; // width of the decomposition used; -1 when none was involved
    std::vector<Permutation> perms;
    BranchingProgram prog;
    RealizerMeta meta;

    OrderBits bits_for(int x, int y) const;
    bool query(int x, int y) const;
    bool query_bits(const OrderBits& bits) const;
};

int count_permutations(const Realizer& R);

// 6*4^(5^(k+1)) + 4*2^(5^(k+1)) - 6
BigInt paper_bound(int k);

// Element permutation induced by a tree permutation restricted to root nodes.
Permutation induce_perm(const Permutation& tree_perm, const NormalizedDecomposition& N);

struct BuildOptions {
    FamilyOptions family;
};

// Full pipeline: validate + normalize the decomposition, color, build the
// signature DAG, enumerate realized signatures, assemble the program.
Realizer build_realizer(const Poset& P, const TreeDecomposition& T, BuildOptions opt = {});

// Standalone subprogram for one realized signature, over tree-node
// permutations; used to exercise the signature-walk contract directly.
struct BGammaProgram {
    std::vector<Permutation> tree_perms;
    BranchingProgram prog;
    int root_x = -1, root_y = -1;
    int detections = 0;
    int fresh_perms = 0;

    bool query(int tx, int ty, Side side) const;
};

BGammaProgram build_b_gamma(const NormalizedDecomposition& N, FamilyContext& ctx, const std::vector<int>& gamma);

// versioned JSON; byte-stable for a fixed input
std::string serialize(const Realizer& R);
Realizer deserialize(const std::string& bytes);

// Four permutations and a fixed formula realizing the standard example S_n.
Realizer standard_example_realizer(int n);

} // namespace bdim

#endif
