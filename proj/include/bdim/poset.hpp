#ifndef BDIM_POSET_HPP
#define BDIM_POSET_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "bdim/errors.hpp"

namespace bdim {

// Dense reachability matrix over ids 1..n, one bit row per element.
class BitMatrix {
  public:
    BitMatrix() = default;
    explicit BitMatrix(int n) : n_(n), words_((n + 63) / 64), rows_(static_cast<size_t>(n) * words_, 0) {}

    int size() const { return n_; }
    bool get(int i, int j) const { return (row(i)[static_cast<size_t>(j - 1) / 64] >> ((j - 1) % 64)) & 1ull; }
    void set(int i, int j) { row(i)[static_cast<size_t>(j - 1) / 64] |= 1ull << ((j - 1) % 64); }

    uint64_t* row(int i) { return rows_.data() + static_cast<size_t>(i - 1) * words_; }
    const uint64_t* row(int i) const { return rows_.data() + static_cast<size_t>(i - 1) * words_; }
    int words() const { return words_; }

    bool operator==(const BitMatrix& o) const { return n_ == o.n_ && rows_ == o.rows_; }

  private:
    int n_ = 0;
    int words_ = 0;
    std::vector<uint64_t> rows_;
};

// Finite poset on elements 1..n. `covers` is the transitive reduction of the
// strict order stored in `closure`; both are derived from the input relations.
struct Poset {
    int n = 0;
    std::vector<std::pair<int, int>> covers; // (u,v): u covered by v, sorted
    BitMatrix closure;                       // strict: closure(x,y) == (x < y)

    bool less(int x, int y) const; // strict
    bool leq(int x, int y) const;  // reflexive
    bool incomparable(int x, int y) const { return x != y && !less(x, y) && !less(y, x); }

    // Undirected cover-graph edges as (min,max) pairs, sorted.
    std::vector<std::pair<int, int>> cover_edges() const;
};

// Builds the poset: transitive closure of `relations`, rejecting cycles,
// then the transitive reduction as the cover set.
Poset make_poset(int n, const std::vector<std::pair<int, int>>& relations);

bool leq(const Poset& P, int x, int y);

// Text format: `p poset <n> <m>` header, m cover lines `<u> <v>`, comments `c`.
Poset parse_poset(const std::string& text);
std::string write_poset(const Poset& P);
Poset read_poset_file(const std::string& path);
void write_poset_file(const Poset& P, const std::string& path);

} // namespace bdim

#endif
