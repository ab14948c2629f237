#ifndef BDIM_FAMILIES_HPP
#define BDIM_FAMILIES_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bdim/sigdag.hpp"

namespace bdim {

struct FamilyMember {
    int root = 0;           // lowest tree node of the subtree
    std::vector<int> nodes; // sorted
    bool contains(int t) const { return std::binary_search(nodes.begin(), nodes.end(), t); }
};

// Pairwise vertex-disjoint subtrees of the decomposition tree.
struct TreeFamily {
    std::vector<FamilyMember> members;
    std::vector<int> member_of; // tree node -> member index, -1 outside

    bool empty() const { return members.empty(); }
};

struct FamilyOptions {
    // Extend a member through every boundary edge satisfying the break and
    // merge conditions, not only through edges below its leaves.
    bool extend_all_boundary = true;
    // Treat a node whose gamma-vertex is a source (a chain restart) like a
    // break when deciding between the fresh-family and extended-family routes.
    bool guard_restarts = true;
};

// Memoized construction of the families F over one colored DAG.
class FamilyContext {
  public:
    FamilyContext(const SignatureDag& D, const NormalizedDecomposition& N, FamilyOptions opt = {});

    const SignatureDag& dag() const { return D_; }
    const FamilyOptions& options() const { return opt_; }

    // no vertex of D_t carries the color
    bool is_gamma_break(int t, int gamma) const;
    // a color-restart: the unique gamma vertex of D_t exists and is a source
    bool is_gamma_restart(int t, int gamma) const;
    // gamma_hi merges into gamma_lo on the edge (parent(c), c)
    bool merges_into(int child_node, int gamma_hi, int gamma_lo) const;

    const TreeFamily& base_family(int gamma);

    struct PlusFamily {
        std::vector<FamilyMember> members;
        std::vector<int> parent_member; // index into the source family
    };
    PlusFamily extend_plus(const TreeFamily& F, int gamma_last, int gamma_new) const;

    struct SplitResult {
        TreeFamily part1, part2;
        std::vector<int> side; // per plus member: 1 or 2
    };
    // Two-colors the intersection graph of the intermediate family; OddCycle
    // signals a violated disjointness claim.
    SplitResult split_two(const PlusFamily& plus) const;

    // F_Gamma^alpha with |alpha| == |Gamma|-1; memoized.
    const TreeFamily& family(const std::vector<int>& gamma, const std::string& alpha);

    // For one step Gamma -> Gamma+gamma_new under alpha: which split part each
    // member's offspring landed in (0 = none, 1, 2).
    const std::vector<int>& offspring_parts(const std::vector<int>& gamma, const std::string& alpha, int gamma_new);

    // every family constructed so far, for sweeps
    std::vector<std::pair<std::pair<std::vector<int>, std::string>, const TreeFamily*>> all_built() const;

  private:
    struct Extension {
        TreeFamily part1, part2;
        std::vector<int> offspring_part;
    };
    const Extension& extension(const std::vector<int>& gamma, const std::string& alpha, int gamma_new);
    TreeFamily seal(std::vector<FamilyMember> members) const;

    const SignatureDag& D_;
    const NormalizedDecomposition& N_;
    FamilyOptions opt_;
    std::map<int, TreeFamily> base_;
    std::map<std::pair<std::vector<int>, std::string>, TreeFamily> fam_;
    std::map<std::pair<std::pair<std::vector<int>, std::string>, int>, Extension> ext_;
};

} // namespace bdim

#endif
