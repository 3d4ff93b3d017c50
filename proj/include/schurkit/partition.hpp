#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace schurkit {

// Weakly decreasing list of positive parts, no trailing zeros.
using Partition = std::vector<int>;

inline int weight(const Partition& a) {
    int w = 0;
    for (int x : a) w += x;
    return w;
}

inline Partition trim(Partition a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

inline std::string part_str(const Partition& a) {
    std::string s = "(";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    return s + ")";
}

inline unsigned long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Partitions of d with largest part <= n, lexicographically descending.
inline std::vector<Partition> enum_lambda(int d, int n) {
    if (d < 0 || n < 1) throw std::invalid_argument("enum_lambda: bad arguments");
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = std::min(rem, maxpart); part >= 1; --part) {
            cur.push_back(part);
            self(self, rem - part, part);
            cur.pop_back();
        }
    };
    rec(rec, d, n);
    return out;
}

// Same but with at most k rows; the rectangle must be able to hold d.
inline std::vector<Partition> enum_lambda_rect(int d, int n, int k) {
    if (d > n * k) throw std::invalid_argument("enum_lambda_rect: weight exceeds rectangle");
    std::vector<Partition> out;
    for (auto& lam : enum_lambda(d, n))
        if (int(lam.size()) <= k) out.push_back(lam);
    return out;
}

inline Partition conjugate(const Partition& a) {
    Partition c;
    if (a.empty()) return c;
    c.resize(a[0], 0);
    for (int j = 0; j < a[0]; ++j)
        for (int x : a)
            if (x >= j + 1) ++c[j];
    return c;
}

// The paper orders Λ(d,n) by reversed dominance: λ ≤ μ iff λ classically
// dominates μ.
inline bool paper_leq(const Partition& a, const Partition& b) {
    if (weight(a) != weight(b)) throw std::invalid_argument("paper_leq: unequal weights");
    int sa = 0, sb = 0;
    size_t len = std::max(a.size(), b.size());
    for (size_t i = 0; i < len; ++i) {
        sa += i < a.size() ? a[i] : 0;
        sb += i < b.size() ? b[i] : 0;
        if (sa < sb) return false;
    }
    return true;
}

// p-core via beta numbers: first-column hook lengths, pushed down runner by
// runner on a p-runner abacus. Order independence comes for free.
inline Partition p_core(const Partition& a, int p) {
    int L = int(a.size());
    if (L == 0) return {};
    std::vector<int> beta(L);
    for (int i = 0; i < L; ++i) beta[i] = a[i] + (L - 1 - i);
    // beta is strictly decreasing. Count beads per runner.
    std::vector<std::vector<int>> runner(p);
    for (int b : beta) runner[b % p].push_back(b);
    std::vector<int> nb;
    for (int r = 0; r < p; ++r) {
        int cnt = int(runner[r].size());
        for (int j = 0; j < cnt; ++j) nb.push_back(r + p * j);
    }
    std::sort(nb.begin(), nb.end(), std::greater<int>());
    Partition core(nb.size());
    int m = int(nb.size());
    for (int i = 0; i < m; ++i) core[i] = nb[i] - (m - 1 - i);
    return trim(core);
}

inline constexpr int alpha_unconstrained = INT32_MAX;

// Largest r with λ′_i − λ′_{i+1} ≡ −1 (mod p^r) for all 1 ≤ i ≤ n−1, the
// conjugate being zero-padded to n entries. Vacuous for n=1: sentinel.
inline int alpha(const Partition& a, int p, int n) {
    if (!a.empty() && a[0] > n) throw std::invalid_argument("alpha: more than n columns");
    if (n == 1) return alpha_unconstrained;
    Partition c = conjugate(a);
    c.resize(n, 0);
    int r = 0;
    long long pr = p;
    for (;;) {
        bool ok = true;
        for (int i = 0; i + 1 < n; ++i) {
            long long diff = c[i] - c[i + 1];
            if ((diff + 1) % pr != 0) {
                ok = false;
                break;
            }
        }
        if (!ok) break;
        ++r;
        pr *= p;
    }
    return r;
}

// Equivalence classes of Λ(d,n) under (p-core, alpha), classes and members
// in enumeration order.
inline std::vector<std::vector<Partition>> blocks(int d, int n, int p) {
    auto all = enum_lambda(d, n);
    std::vector<std::vector<Partition>> out;
    std::vector<std::pair<Partition, int>> keys;
    for (auto& lam : all) {
        std::pair<Partition, int> key{p_core(lam, p), alpha(lam, p, n)};
        bool placed = false;
        for (size_t i = 0; i < keys.size(); ++i)
            if (keys[i] == key) {
                out[i].push_back(lam);
                placed = true;
                break;
            }
        if (!placed) {
            keys.push_back(key);
            out.push_back({lam});
        }
    }
    return out;
}

// Index i when λ = (i+1, 1^{p−i−1}) of weight p.
inline std::optional<int> is_p_hook(const Partition& a, int p) {
    if (weight(a) != p || a.empty()) return std::nullopt;
    for (size_t i = 1; i < a.size(); ++i)
        if (a[i] != 1) return std::nullopt;
    return a[0] - 1;
}

// Complement in the n×k rectangle: (n−λ_k, …, n−λ_1).
inline Partition hat(const Partition& a, int n, int k) {
    if (int(a.size()) > k || (!a.empty() && a[0] > n))
        throw std::invalid_argument("hat: partition exceeds rectangle");
    Partition pad = a;
    pad.resize(k, 0);
    Partition out(k);
    for (int i = 0; i < k; ++i) out[i] = n - pad[k - 1 - i];
    return trim(out);
}

inline int kl_length(const Partition& a, int p, int n) {
    if (!a.empty() && a[0] > n) throw std::invalid_argument("kl_length: more than n columns");
    auto h = is_p_hook(a, p);
    return h ? *h : 0;
}

// Standard tableaux of hook shape (i+1, 1^{p−i−1}).
inline long long hook_specht_dim(int p, int i) {
    if (i < 0 || i > p - 1) throw std::out_of_range("hook_specht_dim: index out of range");
    return static_cast<long long>(binomial(p - 1, i));
}

} // namespace schurkit
