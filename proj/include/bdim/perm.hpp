#ifndef BDIM_PERM_HPP
#define BDIM_PERM_HPP

#include <vector>

#include "bdim/errors.hpp"

namespace bdim {

// A permutation of a set of integer ids. Ids need not be contiguous:
// `seq` lists them in order, `rank(id)` gives the 0-based position.
class Permutation {
  public:
    Permutation() = default;
    explicit Permutation(std::vector<int> seq);

    int size() const { return static_cast<int>(seq_.size()); }
    const std::vector<int>& seq() const { return seq_; }

    bool contains(int id) const;
    int rank(int id) const;

    // True iff x is strictly before y. For x == y this is false.
    bool before(int x, int y) const { return rank(x) < rank(y); }

    bool operator==(const Permutation& o) const { return seq_ == o.seq_; }

  private:
    std::vector<int> seq_;
    std::vector<int> rank_; // indexed by id, -1 when absent
};

Permutation reverse(const Permutation& p);

// Restriction to X, order preserved. X given as any id set; ids not in p are rejected.
Permutation project(const Permutation& p, const std::vector<int>& X);

// Concatenation p then q; domains must be disjoint.
Permutation concat(const Permutation& p, const Permutation& q);

Permutation identity_perm(int n); // 1..n

} // namespace bdim

#endif
