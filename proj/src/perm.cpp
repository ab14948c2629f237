#include "bdim/perm.hpp"

#include <algorithm>
#include <string>

namespace bdim {

Permutation::Permutation(std::vector<int> seq) : seq_(std::move(seq)) {
    int maxid = 0;
    for (int v : seq_) {
        if (v <= 0) throw IdOutOfRange("permutation entries must be positive, got " + std::to_string(v));
        maxid = std::max(maxid, v);
    }
    rank_.assign(maxid + 1, -1);
    for (int i = 0; i < static_cast<int>(seq_.size()); ++i) {
        if (rank_[seq_[i]] != -1)
            throw InvalidArgument("duplicate id " + std::to_string(seq_[i]) + " in permutation");
        rank_[seq_[i]] = i;
    }
}

bool Permutation::contains(int id) const {
    return id > 0 && id < static_cast<int>(rank_.size()) && rank_[id] != -1;
}

int Permutation::rank(int id) const {
    if (!contains(id)) throw IdOutOfRange("id " + std::to_string(id) + " not in permutation");
    return rank_[id];
}

Permutation reverse(const Permutation& p) {
    std::vector<int> s(p.seq().rbegin(), p.seq().rend());
    return Permutation(std::move(s));
}

Permutation project(const Permutation& p, const std::vector<int>& X) {
    std::vector<char> keep(p.seq().empty() ? 1 : 0);
    int maxid = 0;
    for (int v : p.seq()) maxid = std::max(maxid, v);
    keep.assign(maxid + 1, 0);
    for (int v : X) {
        if (!p.contains(v)) throw IdOutOfRange("projection id " + std::to_string(v) + " not in permutation");
        keep[v] = 1;
    }
    std::vector<int> s;
    s.reserve(X.size());
    for (int v : p.seq())
        if (keep[v]) s.push_back(v);
    return Permutation(std::move(s));
}

Permutation concat(const Permutation& p, const Permutation& q) {
    for (int v : q.seq())
        if (p.contains(v)) throw DomainsOverlap("id " + std::to_string(v) + " in both operands");
    std::vector<int> s = p.seq();
    s.insert(s.end(), q.seq().begin(), q.seq().end());
    return Permutation(std::move(s));
}

Permutation identity_perm(int n) {
    std::vector<int> s(n);
    for (int i = 0; i < n; ++i) s[i] = i + 1;
    return Permutation(std::move(s));
}

} // namespace bdim
