#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "schurkit/partition.hpp"

namespace schurkit {

// Integer polynomial in n_vars variables, exponentwise map representation.
// Negative exponents are allowed so the same type carries Laurent characters.
struct SymPolynomial {
    int n_vars = 0;
    std::map<std::vector<int>, long long> terms;

    SymPolynomial() = default;
    explicit SymPolynomial(int nv) : n_vars(nv) {}

    void add_term(const std::vector<int>& exp, long long c) {
        if (c == 0) return;
        auto it = terms.find(exp);
        if (it == terms.end()) {
            terms.emplace(exp, c);
        } else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }

    bool is_zero() const { return terms.empty(); }

    bool operator==(const SymPolynomial& o) const {
        return n_vars == o.n_vars && terms == o.terms;
    }

    SymPolynomial operator+(const SymPolynomial& o) const {
        if (n_vars != o.n_vars) throw std::invalid_argument("poly add: variable mismatch");
        SymPolynomial r = *this;
        for (auto& [e, c] : o.terms) r.add_term(e, c);
        return r;
    }

    SymPolynomial operator*(const SymPolynomial& o) const {
        if (n_vars != o.n_vars) throw std::invalid_argument("poly mul: variable mismatch");
        SymPolynomial r(n_vars);
        for (auto& [e1, c1] : terms)
            for (auto& [e2, c2] : o.terms) {
                std::vector<int> e(n_vars);
                for (int i = 0; i < n_vars; ++i) e[i] = e1[i] + e2[i];
                r.add_term(e, c1 * c2);
            }
        return r;
    }

    SymPolynomial scaled(long long s) const {
        SymPolynomial r(n_vars);
        for (auto& [e, c] : terms) r.add_term(e, c * s);
        return r;
    }

    long long eval_ones() const {
        long long s = 0;
        for (auto& [e, c] : terms) s += c;
        return s;
    }

    // x_i -> x_i^{-1} for every variable.
    SymPolynomial invert_vars() const {
        SymPolynomial r(n_vars);
        for (auto& [e, c] : terms) {
            std::vector<int> ne(n_vars);
            for (int i = 0; i < n_vars; ++i) ne[i] = -e[i];
            r.add_term(ne, c);
        }
        return r;
    }

    // Multiply by (x_1 ... x_n)^k.
    SymPolynomial det_twist(int k) const {
        SymPolynomial r(n_vars);
        for (auto& [e, c] : terms) {
            std::vector<int> ne = e;
            for (int i = 0; i < n_vars; ++i) ne[i] += k;
            r.add_term(ne, c);
        }
        return r;
    }

    SymPolynomial swap_vars(int a, int b) const {
        SymPolynomial r(n_vars);
        for (auto& [e, c] : terms) {
            std::vector<int> ne = e;
            std::swap(ne[a], ne[b]);
            r.add_term(ne, c);
        }
        return r;
    }

    static SymPolynomial one(int nv) {
        SymPolynomial r(nv);
        r.add_term(std::vector<int>(nv, 0), 1);
        return r;
    }
};

using LaurentCharacter = SymPolynomial;

// Sum over semistandard tableaux of shape lam, entries in 1..n_vars.
inline SymPolynomial schur_poly(const Partition& lam, int n_vars) {
    SymPolynomial out(n_vars);
    if (int(lam.size()) > n_vars) return out;
    if (lam.empty()) return SymPolynomial::one(n_vars);
    int rows = int(lam.size());
    std::vector<std::vector<int>> fill(rows);
    for (int i = 0; i < rows; ++i) fill[i].assign(lam[i], 0);
    std::vector<int> exp(n_vars, 0);
    auto rec = [&](auto&& self, int i, int j) -> void {
        if (i == rows) {
            out.add_term(exp, 1);
            return;
        }
        int ni = i, nj = j + 1;
        if (nj == lam[i]) {
            ni = i + 1;
            nj = 0;
        }
        int lo = 1;
        if (j > 0) lo = std::max(lo, fill[i][j - 1]);
        if (i > 0 && j < lam[i - 1]) lo = std::max(lo, fill[i - 1][j] + 1);
        for (int v = lo; v <= n_vars; ++v) {
            fill[i][j] = v;
            ++exp[v - 1];
            self(self, ni, nj);
            --exp[v - 1];
        }
    };
    rec(rec, 0, 0);
    return out;
}

// The costandard module labelled lam has character s_{lam'}.
inline SymPolynomial char_costandard(const Partition& lam, int n_vars) {
    return schur_poly(conjugate(lam), n_vars);
}

} // namespace schurkit
