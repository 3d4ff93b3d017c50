#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "schurkit/partition.hpp"
#include "schurkit/sympoly.hpp"

namespace schurkit {

// Littlewood-Richardson coefficients c^P_{lam,mu}: semistandard fillings of
// P/lam whose reverse reading word (rows top to bottom, each right to left)
// is Yamanouchi. Filling proceeds in reading-word order so the prefix
// condition prunes as we go.
inline std::map<Partition, long long> lr_expand_skew(const Partition& P, const Partition& lam) {
    for (size_t i = 0; i < lam.size(); ++i)
        if (i >= P.size() || lam[i] > P[i])
            throw std::invalid_argument("lr_expand_skew: inner shape not contained");
    int rows = int(P.size());
    int cells = 0;
    for (int i = 0; i < rows; ++i) cells += P[i] - (i < int(lam.size()) ? lam[i] : 0);
    std::map<Partition, long long> out;
    if (cells == 0) {
        out[{}] = 1;
        return out;
    }
    auto inner = [&](int i) { return i < int(lam.size()) ? lam[i] : 0; };
    std::vector<std::pair<int, int>> order;
    for (int i = 0; i < rows; ++i)
        for (int j = P[i] - 1; j >= inner(i); --j) order.emplace_back(i, j);
    std::vector<std::vector<int>> fill(rows);
    for (int i = 0; i < rows; ++i) fill[i].assign(P[i], 0);
    std::vector<int> count(cells + 1, 0);
    auto rec = [&](auto&& self, int idx) -> void {
        if (idx == cells) {
            Partition mu;
            for (int v = 1; v <= cells && count[v] > 0; ++v) mu.push_back(count[v]);
            out[mu] += 1;
            return;
        }
        auto [i, j] = order[idx];
        int hi = cells;
        if (j + 1 < P[i]) hi = std::min(hi, fill[i][j + 1]);
        int lo = 1;
        if (i > 0 && j >= inner(i - 1)) lo = fill[i - 1][j] + 1;
        for (int v = lo; v <= hi; ++v) {
            if (v > 1 && count[v] + 1 > count[v - 1]) continue;
            fill[i][j] = v;
            ++count[v];
            self(self, idx + 1);
            --count[v];
        }
    };
    rec(rec, 0);
    return out;
}

// Exactly one content with at most n columns survives, it is the rectangle
// complement, and its multiplicity is one.
inline bool lemma32_check(const Partition& lam, int n, int k) {
    Partition P(k, n);
    auto exp = lr_expand_skew(P, lam);
    Partition target = hat(lam, n, k);
    int qualifying = 0;
    bool ok = true;
    for (auto& [mu, c] : exp) {
        if (!mu.empty() && mu[0] > n) continue;
        ++qualifying;
        if (mu != target || c != 1) ok = false;
    }
    return ok && qualifying == 1;
}

// Character-level duality: inverting the variables of the costandard
// character and twisting by det^k lands on the complement's character.
inline bool sw_character_identity(const Partition& lam, int n, int k) {
    LaurentCharacter lhs = char_costandard(lam, n).invert_vars().det_twist(k);
    LaurentCharacter rhs = char_costandard(hat(lam, n, k), n);
    return lhs == rhs;
}

} // namespace schurkit
