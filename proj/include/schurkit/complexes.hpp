#pragma once

#include <optional>

#include "schurkit/functor_modules.hpp"

namespace schurkit {

// Direct sum of several modules keeping, per summand, the index embedding
// into the sum (needed to place block matrices).
struct DirectSumMany {
    AModule mod;
    std::vector<std::vector<int>> maps; // per part: old index -> new index
};

inline DirectSumMany direct_sum_many(const SchurAlgebra& A,
                                     const std::vector<const AModule*>& parts) {
    DirectSumMany out;
    AModule& M = out.mod;
    M.A = &A;
    M.kind = "other";
    std::map<std::vector<int>, std::vector<std::pair<int, int>>> pieces; // wt -> (part, blk)
    for (size_t t = 0; t < parts.size(); ++t) {
        if (parts[t]->A != &A) throw std::invalid_argument("direct_sum_many: algebra mismatch");
        for (size_t w = 0; w < parts[t]->weights.size(); ++w)
            pieces[parts[t]->weights[w]].push_back({int(t), int(w)});
        out.maps.push_back(std::vector<int>(parts[t]->dim, -1));
    }
    int idx = 0;
    M.wt_begin.push_back(0);
    for (auto& [chi, lst] : pieces) {
        M.weights.push_back(chi);
        for (auto [t, w] : lst) {
            const AModule& P = *parts[t];
            for (int i = P.wt_begin[w]; i < P.wt_begin[w + 1]; ++i) out.maps[t][i] = idx++;
        }
        M.wt_begin.push_back(idx);
    }
    M.dim = idx;
    ActionBuilder ab(A.dim, M.dim, A.p);
    for (size_t t = 0; t < parts.size(); ++t) {
        const ActionTable& at = parts[t]->act;
        for (int b = 0; b < A.dim; ++b)
            for (size_t k = at.off[b]; k < at.off[b + 1]; ++k)
                ab.add(b, out.maps[t][at.row_[k]], out.maps[t][at.col_[k]], at.val_[k]);
    }
    M.act = ab.finish();
    return out;
}

// K_{i,n}: costandard hooks S_i -> S_{i+1} -> ... -> S_{n-1} under the
// restricted de Rham differential.
inline CochainComplex build_K(const SchurAlgebra& A, int i) {
    const HookContext& C = hook_context(A);
    int n = A.n;
    if (i < 0 || i > n - 1) throw std::invalid_argument("build_K: index out of range");
    CochainComplex X;
    X.base = 0;
    for (int j = i; j <= n - 1; ++j) X.terms.push_back(C.S[j].mod);
    for (int j = i; j <= n - 2; ++j) X.maps.push_back(C.dS[j]);
    verify_complex(X);
    return X;
}

// M_{i,n}: the truncated de Rham complex Omega^{i+1} -> ... -> Omega^n.
inline CochainComplex build_M(const SchurAlgebra& A, int i) {
    const HookContext& C = hook_context(A);
    int n = A.n;
    if (i < 0 || i > n - 1) throw std::invalid_argument("build_M: index out of range");
    CochainComplex X;
    X.base = 0;
    for (int j = i + 1; j <= n; ++j) X.terms.push_back(C.omega[j].mod);
    for (int j = i + 1; j <= n - 1; ++j) X.maps.push_back(C.dmat[j]);
    verify_complex(X);
    return X;
}

// M'_{i,n} over a bigger algebra (m >= d): same truncated complex but ending
// with beta: Omega^{n-1} -> S_{n-1}, the Koszul projection followed by the
// de Rham differential.
inline CochainComplex build_Mprime(const SchurAlgebra& Am, int i, int n) {
    const HookContext& C = hook_context(Am);
    if (n < 2 || n > C.qmax) throw std::invalid_argument("build_Mprime: bad column bound");
    if (i < 0 || i > n - 2) throw std::invalid_argument("build_Mprime: index out of range");
    CochainComplex X;
    X.base = 0;
    for (int j = i + 1; j <= n - 1; ++j) X.terms.push_back(C.omega[j].mod);
    X.terms.push_back(C.S[n - 1].mod);
    for (int j = i + 1; j <= n - 2; ++j) X.maps.push_back(C.dmat[j]);
    FpMat dk = C.dmat[n - 2] * C.kmat[n - 1]; // Omega^{n-1} -> Omega^{n-1}
    FpMat beta = C.S[n - 1].coords * dk;
    if (!(C.S[n - 1].embed * beta == dk))
        throw std::logic_error("build_Mprime: beta does not land in the kernel");
    X.maps.push_back(std::move(beta));
    verify_complex(X);
    return X;
}

// R_{i,n}: totalization of the truncated bicomplex R^{r,s} = Omega^{i+s-r}
// over 0 <= r <= n-1, 0 <= s <= n-i-1, r-s <= i, with horizontal Koszul and
// vertical de Rham differentials.
inline CochainComplex build_R(const SchurAlgebra& A, int i) {
    const HookContext& C = hook_context(A);
    int n = A.n;
    if (i < 0 || i > n - 1) throw std::invalid_argument("build_R: index out of range");
    auto in_region = [&](int r, int s) {
        return r >= 0 && r <= n - 1 && s >= 0 && s <= n - i - 1 && r - s <= i;
    };
    int qtop = 2 * n - i - 2;
    // Cells by total degree.
    std::vector<std::vector<std::pair<int, int>>> cells(qtop + 1);
    for (int r = 0; r <= n - 1; ++r)
        for (int s = 0; s <= n - i - 1; ++s)
            if (in_region(r, s)) cells[r + s].push_back({r, s});

    CochainComplex X;
    X.base = 0;
    std::vector<DirectSumMany> sums;
    for (int q = 0; q <= qtop; ++q) {
        std::vector<const AModule*> parts;
        for (auto [r, s] : cells[q]) parts.push_back(&C.omega[i + s - r].mod);
        sums.push_back(direct_sum_many(A, parts));
        X.terms.push_back(sums.back().mod);
    }
    for (int q = 0; q < qtop; ++q) {
        FpMat D(X.terms[q + 1].dim, X.terms[q].dim, A.p);
        for (size_t c = 0; c < cells[q].size(); ++c) {
            auto [r, s] = cells[q][c];
            int sup = i + s - r;
            auto place = [&](const FpMat& blk, int rt, int st) {
                int ct = -1;
                for (size_t u = 0; u < cells[q + 1].size(); ++u)
                    if (cells[q + 1][u] == std::make_pair(rt, st)) ct = int(u);
                const auto& cmap = sums[q + 1].maps[ct];
                const auto& smap = sums[q].maps[c];
                for (int a = 0; a < blk.rows(); ++a)
                    for (int b = 0; b < blk.cols(); ++b)
                        if (blk.at(a, b)) D.at(cmap[a], smap[b]) = blk.at(a, b);
            };
            if (in_region(r + 1, s)) place(C.kmat[sup], r + 1, s);
            if (in_region(r, s + 1)) place(C.dmat[sup], r, s + 1);
        }
        X.maps.push_back(std::move(D));
    }
    verify_complex(X);
    return X;
}

// Search the hom space for an invertible element; exhaustive when the space
// is small enough to enumerate, random otherwise (sampled set when sampled
// is reported true).
inline std::optional<FpMat> find_invertible_hom(const AModule& M, const AModule& N,
                                                bool* sampled = nullptr) {
    if (sampled) *sampled = false;
    if (M.dim != N.dim) return std::nullopt;
    auto homs = hom_space(M, N);
    if (homs.empty()) return std::nullopt;
    int h = int(homs.size()), p = M.A->p;
    double total = 1;
    for (int t = 0; t < h; ++t) total *= p;
    if (total <= 16384) {
        std::vector<int> coef(h, 0);
        for (;;) {
            int pos = 0;
            while (pos < h && coef[pos] == p - 1) coef[pos++] = 0;
            if (pos == h) break;
            ++coef[pos];
            FpMat g(N.dim, M.dim, p);
            for (int t = 0; t < h; ++t)
                if (coef[t]) g = g + homs[t].scale(uint8_t(coef[t]));
            if (g.rank() == M.dim) return g;
        }
        return std::nullopt;
    }
    if (sampled) *sampled = true;
    std::mt19937 rng(424243);
    std::uniform_int_distribution<int> pick(0, p - 1);
    for (int t = 0; t < 200; ++t) {
        FpMat g(N.dim, M.dim, p);
        for (int u = 0; u < h; ++u) {
            int c = pick(rng);
            if (c) g = g + homs[u].scale(uint8_t(c));
        }
        if (g.rank() == M.dim) return g;
    }
    return std::nullopt;
}

// L_{i,n}: duals of omegas under the dual Koszul maps, spliced through
// alpha = kappa . (dual Omega^n ~ Omega^n) . dual-kappa into the Koszul part.
inline CochainComplex build_L(const SchurAlgebra& A, int i) {
    const HookContext& C = hook_context(A);
    int n = A.n;
    if (i < 0 || i > n - 1) throw std::invalid_argument("build_L: index out of range");
    CochainComplex X;
    X.base = 0;
    std::vector<AModule> duals;
    for (int j = i + 1; j <= n - 1; ++j) duals.push_back(kuhn_dual(C.omega[j].mod));
    for (auto& d : duals) X.terms.push_back(d);
    for (int j = n - 1; j >= 0; --j) X.terms.push_back(C.omega[j].mod);

    for (int j = i + 1; j <= n - 2; ++j) X.maps.push_back(C.kmat[j + 1].transpose());
    if (i <= n - 2) {
        AModule dual_top = kuhn_dual(C.omega[n].mod);
        auto iso = find_invertible_hom(dual_top, C.omega[n].mod);
        if (!iso)
            throw std::logic_error("build_L: top omega is not self-dual");
        FpMat alpha = C.kmat[n] * (*iso) * C.kmat[n].transpose();
        X.maps.push_back(std::move(alpha));
    }
    for (int j = n - 1; j >= 1; --j) X.maps.push_back(C.kmat[j]);
    verify_complex(X);
    return X;
}

} // namespace schurkit
