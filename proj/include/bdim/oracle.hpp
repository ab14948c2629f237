#ifndef BDIM_ORACLE_HPP
#define BDIM_ORACLE_HPP

#include <functional>
#include <string>
#include <vector>

#include "bdim/poset.hpp"
#include "bdim/sigdag.hpp"
#include "bdim/tools.hpp"
#include "bdim/treedec.hpp"

// Brute-force ground truth. These functions read raw poset / DAG / tree data
// and deliberately share no traversal code with the constructions they check.

namespace bdim {

struct VerifyMismatch {
    int x = 0, y = 0;
    bool expected = false, got = false;
};

struct VerifyReport {
    std::string instance;
    long long pairs_checked = 0;
    std::vector<VerifyMismatch> mismatches;
    double millis = 0;

    bool pass() const { return mismatches.empty(); }
    std::string to_json() const;
};

// Every ordered pair, x == y included, against the closure oracle.
VerifyReport verify_all_pairs(const Poset& P, const std::function<bool(int, int)>& query,
                              const std::string& instance);

// The two-walk characterization: x <= y iff some vertex of the meet level
// walks to both root levels with the right terminal coordinates.
bool bruteforce_two_seq(const Poset& P, const SignatureDag& D, const NormalizedDecomposition& N,
                        const ElementColoring& c, int x, int y);

// First colored edge on the path from the meet to the chosen endpoint is red.
bool path_scan_color_oracle(const RootedTree& T, const EdgeColoring& colors, int x, int y, Side side);

// Some walk from the meet level to the target level carries this signature.
bool bruteforce_signature_exists(const SignatureDag& D, int meet_node, int target_node,
                                 const std::vector<int>& gamma);

} // namespace bdim

#endif
