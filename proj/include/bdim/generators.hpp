#ifndef BDIM_GENERATORS_HPP
#define BDIM_GENERATORS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "bdim/poset.hpp"
#include "bdim/treedec.hpp"

namespace bdim {

struct GeneratorOutput {
    Poset poset;
    std::optional<TreeDecomposition> decomposition;
    std::map<std::string, int> witness; // e.g. "a3" -> id
};

// Standard example S_n: elements a_1..a_n (ids 1..n) and b_1..b_n (ids n+1..2n),
// a_i < b_j exactly when i != j.
GeneratorOutput gen_standard_example(int n);

// Kelly-style planar poset containing an induced S_n, with an analytic
// path decomposition of width 3 of its cover graph. The a_i / b_i witness
// elements hang off two lateral chains v_1 < ... < v_{n-1} (covering the
// i < j relations) and u_{n-1} < ... < u_1 (covering i > j). See README.
GeneratorOutput gen_kelly(int n);

// Random poset whose cover graph has treewidth <= k by construction: sample a
// random tree of bags (size <= k+1), orient random intra-bag edges by a random
// global linear order, close transitively. Pure function of (n, k, seed).
GeneratorOutput gen_random_bounded_tw(int n, int k, uint64_t seed);

} // namespace bdim

#endif
