// The recollement connecting modules over S(m,d) and S(n,d) for n < m via
// the truncation idempotent e: restriction j^* M = eM, its left adjoint
// j_! N = A_m e ⊗_{eA_m e} N, and its right adjoint j_* N = Hom_{eA_m e}(eA_m, N),
// together with the derived functor of j_* computed from injective
// resolutions (duals of projective resolutions of the Kuhn dual).
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "schurkit/amodule.hpp"
#include "schurkit/resolution.hpp"
#include "schurkit/schur_algebra.hpp"

namespace schurkit {

inline bool weight_supported(const std::vector<int>& chi, int n) {
    for (size_t t = size_t(n); t < chi.size(); ++t)
        if (chi[t]) return false;
    return true;
}

inline std::vector<int> weight_restrict(const std::vector<int>& chi, int n) {
    return std::vector<int>(chi.begin(), chi.begin() + n);
}

inline std::vector<int> weight_extend(const std::vector<int>& chi, int m) {
    std::vector<int> out = chi;
    out.resize(m, 0);
    return out;
}

// Shared data of one truncation pair (m-column algebra, n-column algebra).
struct Recollement {
    const SchurAlgebra* big = nullptr;    // S(m,d)
    const SchurAlgebra* small = nullptr;  // S(n,d)
    std::vector<int> Ae;        // big basis indices with column weight supported
    std::vector<int> eA;        // big basis indices with row weight supported
    std::vector<int> to_small;  // big index -> small index (eAe), else -1
    std::vector<int> to_big;    // small index -> big index
};

inline Recollement make_recollement(const SchurAlgebra& big, const SchurAlgebra& small) {
    if (big.d != small.d || big.p != small.p || small.n >= big.n)
        throw std::invalid_argument("make_recollement: algebras are not a truncation pair");
    Recollement R;
    R.big = &big;
    R.small = &small;
    int n = small.n;
    R.to_small.assign(big.dim, -1);
    for (int b : truncated_subalgebra_basis(big, n)) {
        R.to_small[b] = relabel_into_small(big, b, small);
        if (R.to_small[b] < 0) throw std::logic_error("make_recollement: relabel failed");
    }
    R.to_big.assign(small.dim, -1);
    for (int b = 0; b < big.dim; ++b)
        if (R.to_small[b] >= 0) R.to_big[R.to_small[b]] = b;
    for (int s = 0; s < small.dim; ++s)
        if (R.to_big[s] < 0) throw std::logic_error("make_recollement: truncation gap");
    for (int b = 0; b < big.dim; ++b) {
        if (weight_supported(big.colwt[b], n)) R.Ae.push_back(b);
        if (weight_supported(big.rowwt[b], n)) R.eA.push_back(b);
    }
    return R;
}

// ---------------------------------------------------------------------------
// j^*: restriction along the idempotent (keep the supported weight blocks)
// ---------------------------------------------------------------------------

inline AModule jstar(const Recollement& R, const AModule& M) {
    const SchurAlgebra& big = *R.big;
    const SchurAlgebra& small = *R.small;
    if (M.A != &big) throw std::invalid_argument("jstar: module is not over the big algebra");
    int n = small.n;
    AModule out;
    out.A = &small;
    out.kind = M.kind;
    out.label = M.label;
    std::vector<int> sel;            // kept global indices, block order preserved
    std::vector<int> inv(M.dim, -1); // big module index -> new index
    for (int w = 0; w < int(M.weights.size()); ++w) {
        if (!weight_supported(M.weights[w], n)) continue;
        out.weights.push_back(weight_restrict(M.weights[w], n));
        out.wt_begin.push_back(int(sel.size()));
        for (int i = M.wt_begin[w]; i < M.wt_begin[w + 1]; ++i) {
            inv[i] = int(sel.size());
            sel.push_back(i);
        }
    }
    out.wt_begin.push_back(int(sel.size()));
    out.dim = int(sel.size());
    ActionBuilder bld(small.dim, out.dim, small.p);
    for (int s = 0; s < small.dim; ++s) {
        int b = R.to_big[s];
        for (size_t k = M.act.off[b]; k < M.act.off[b + 1]; ++k) {
            int r = inv[M.act.row_[k]], c = inv[M.act.col_[k]];
            if (r >= 0 && c >= 0) bld.add(s, r, c, M.act.val_[k]);
        }
    }
    out.act = bld.finish();
    return out;
}

// ---------------------------------------------------------------------------
// j_!: the left adjoint  A_m e ⊗_{eA_m e} N
// ---------------------------------------------------------------------------

inline AModule jshriek(const Recollement& R, const AModule& N) {
    const SchurAlgebra& big = *R.big;
    const SchurAlgebra& small = *R.small;
    if (N.A != &small) throw std::invalid_argument("jshriek: module is not over the small algebra");
    int n = small.n;
    // Basis pairs (xi, v): xi in A_m e, v a basis vector of N in the block of
    // colwt(xi).  Pairs with mismatched blocks die against the relations, so
    // they are pruned up front.  Pairs are grouped by rowwt(xi).
    struct Pair {
        int wid, xi, v;  // v: global N index
    };
    std::vector<Pair> pairs;
    for (int xi : R.Ae) {
        int w = N.weight_block(weight_restrict(big.colwt[xi], n));
        if (w < 0) continue;
        int wid = big.idempotent_of_weight(big.rowwt[xi]);
        for (int v = N.wt_begin[w]; v < N.wt_begin[w + 1]; ++v)
            pairs.push_back({wid, xi, v});
    }
    std::stable_sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
        if (a.wid != b.wid) return a.wid < b.wid;
        if (a.xi != b.xi) return a.xi < b.xi;
        return a.v < b.v;
    });
    int dim = int(pairs.size());
    std::map<std::pair<int, int>, int> pos;  // (xi, v) -> index
    AModule T;
    T.A = &big;
    T.dim = dim;
    int last_wid = -1;
    for (int i = 0; i < dim; ++i) {
        if (pairs[i].wid != last_wid) {
            last_wid = pairs[i].wid;
            T.weights.push_back(big.rowwt[pairs[i].wid]);
            T.wt_begin.push_back(i);
        }
        pos[{pairs[i].xi, pairs[i].v}] = i;
    }
    T.wt_begin.push_back(dim);
    ActionBuilder bld(big.dim, dim, big.p);
    for (int b = 0; b < big.dim; ++b)
        for (int i = 0; i < dim; ++i) {
            const AlgElt& prod = big.sc(b, pairs[i].xi);
            for (const auto& [eta, cv] : prod) {
                auto it = pos.find({eta, pairs[i].v});
                if (it == pos.end()) throw std::logic_error("jshriek: image pair missing");
                bld.add(b, it->second, i, cv);
            }
        }
    T.act = bld.finish();
    // Relations (xi·a) ⊗ v = xi ⊗ (a·v) for a in eA_m e with matching weights.
    std::vector<std::vector<uint8_t>> rels;
    for (int xi : R.Ae) {
        for (int a = 0; a < big.dim; ++a) {
            if (R.to_small[a] < 0) continue;
            if (big.rowwt[a] != big.colwt[xi]) continue;
            int as = R.to_small[a];
            int w = N.weight_block(weight_restrict(big.colwt[a], n));
            if (w < 0) continue;
            const AlgElt& prod = big.sc(xi, a);
            for (int v = N.wt_begin[w]; v < N.wt_begin[w + 1]; ++v) {
                std::vector<uint8_t> rel(dim, 0);
                for (const auto& [eta, cv] : prod) {
                    auto it = pos.find({eta, v});
                    if (it == pos.end()) throw std::logic_error("jshriek: relation pair missing");
                    rel[it->second] = uint8_t((rel[it->second] + cv) % big.p);
                }
                std::vector<uint8_t> ev(N.dim, 0);
                ev[v] = 1;
                std::vector<uint8_t> av = N.apply(as, ev);
                for (int u = 0; u < N.dim; ++u) {
                    if (!av[u]) continue;
                    auto it = pos.find({xi, u});
                    if (it == pos.end()) throw std::logic_error("jshriek: relation pair missing");
                    rel[it->second] = uint8_t((rel[it->second] + big.p - av[u] % big.p) % big.p);
                }
                bool nz = false;
                for (uint8_t x : rel) nz = nz || x;
                if (nz) rels.push_back(std::move(rel));
            }
        }
    }
    FpMat relmat(dim, int(rels.size()), big.p);
    for (int c = 0; c < int(rels.size()); ++c) relmat.set_col(c, rels[c]);
    AModule out = quotient_module(T, relmat, N.kind).mod;
    out.label = N.label;
    return out;
}

// ---------------------------------------------------------------------------
// j_*: the right adjoint  Hom_{eA_m e}(eA_m, N)
// ---------------------------------------------------------------------------

// j_* N with its solution data kept, so maps N -> N' can be pushed forward.
struct JStarModule {
    AModule mod;  // over the big algebra
    // One entry per weight block of mod: the xi's spanning e A_m e_chi, flat
    // offsets of the unknowns f(xi), and the nullspace basis (flat x dim).
    struct Block {
        std::vector<int> xi;
        std::vector<int> xoff;  // size xi.size()+1
        FpMat basis;
    };
    std::vector<Block> blocks;
};

inline JStarModule jlowerstar(const Recollement& R, const AModule& N) {
    const SchurAlgebra& big = *R.big;
    const SchurAlgebra& small = *R.small;
    if (N.A != &small)
        throw std::invalid_argument("jlowerstar: module is not over the small algebra");
    int n = small.n;
    // Group eA_m by column weight: the candidate support of a weight-chi map.
    std::map<std::vector<int>, std::vector<int>> xi_of;
    for (int xi : R.eA) xi_of[big.colwt[xi]].push_back(xi);
    JStarModule J;
    J.mod.A = &big;
    J.mod.kind = N.kind;
    J.mod.label = N.label;
    // First pass: solve each block.
    struct Solved {
        std::vector<int> chi;
        JStarModule::Block blk;
    };
    std::vector<Solved> solved;
    for (size_t k = 0; k < big.idempotents.size(); ++k) {
        const std::vector<int>& chi = big.idem_weight(int(k));
        auto it = xi_of.find(chi);
        if (it == xi_of.end()) continue;
        JStarModule::Block B;
        B.xi = it->second;
        B.xoff.assign(B.xi.size() + 1, 0);
        std::vector<int> nblk(B.xi.size(), -1);
        int flat = 0;
        for (size_t i = 0; i < B.xi.size(); ++i) {
            B.xoff[i] = flat;
            nblk[i] = N.weight_block(weight_restrict(big.rowwt[B.xi[i]], n));
            if (nblk[i] >= 0) flat += N.wt_begin[nblk[i] + 1] - N.wt_begin[nblk[i]];
        }
        B.xoff[B.xi.size()] = flat;
        if (flat == 0) continue;
        std::map<int, size_t> xi_pos;
        for (size_t i = 0; i < B.xi.size(); ++i) xi_pos[B.xi[i]] = i;
        // Constraints f(a·xi) = a·f(xi) for a in eA_m e with colwt(a) = rowwt(xi).
        std::vector<std::vector<uint8_t>> rows;
        for (size_t i = 0; i < B.xi.size(); ++i) {
            int xi = B.xi[i];
            for (int a = 0; a < big.dim; ++a) {
                if (R.to_small[a] < 0) continue;
                if (big.colwt[a] != big.rowwt[xi]) continue;
                int as = R.to_small[a];
                int outblk = N.weight_block(weight_restrict(big.rowwt[a], n));
                if (outblk < 0) continue;
                int olo = N.wt_begin[outblk], ohi = N.wt_begin[outblk + 1];
                const AlgElt& prod = big.sc(a, xi);
                // One constraint row per coordinate of N in the output block.
                std::vector<std::vector<uint8_t>> cons(ohi - olo,
                                                       std::vector<uint8_t>(flat, 0));
                for (const auto& [eta, cv] : prod) {
                    auto ep = xi_pos.find(eta);
                    if (ep == xi_pos.end())
                        throw std::logic_error("jlowerstar: product left the support");
                    size_t j = ep->second;
                    // f(eta) lives in the same output block as f(a·xi).
                    for (int r = 0; r < ohi - olo; ++r)
                        cons[r][B.xoff[j] + r] =
                            uint8_t((cons[r][B.xoff[j] + r] + cv) % big.p);
                }
                // Minus a acting on f(xi).
                if (nblk[i] >= 0) {
                    int ilo = N.wt_begin[nblk[i]];
                    for (size_t t = N.act.off[as]; t < N.act.off[as + 1]; ++t) {
                        int r = N.act.row_[t], c = N.act.col_[t];
                        if (r < olo || r >= ohi) continue;
                        cons[r - olo][B.xoff[i] + (c - ilo)] = uint8_t(
                            (cons[r - olo][B.xoff[i] + (c - ilo)] + big.p -
                             N.act.val_[t] % big.p) %
                            big.p);
                    }
                }
                for (auto& row : cons) {
                    bool nz = false;
                    for (uint8_t x : row) nz = nz || x;
                    if (nz) rows.push_back(std::move(row));
                }
            }
        }
        FpMat C(int(rows.size()), flat, big.p);
        for (int r = 0; r < int(rows.size()); ++r)
            for (int c = 0; c < flat; ++c) C.at(r, c) = rows[r][c];
        B.basis = C.nullspace_basis();
        if (B.basis.cols() == 0) continue;
        solved.push_back({chi, std::move(B)});
    }
    // Assemble the module.
    int dim = 0;
    for (const auto& s : solved) {
        J.mod.weights.push_back(s.chi);
        J.mod.wt_begin.push_back(dim);
        dim += s.blk.basis.cols();
        J.blocks.push_back(s.blk);
    }
    J.mod.wt_begin.push_back(dim);
    J.mod.dim = dim;
    // Action: big b maps block colwt(b) -> block rowwt(b) by (bf)(xi) = f(xi·b).
    ActionBuilder bld(big.dim, dim, big.p);
    for (int b = 0; b < big.dim; ++b) {
        int src = J.mod.weight_block(big.colwt[b]);
        int tgt = J.mod.weight_block(big.rowwt[b]);
        if (src < 0 || tgt < 0) continue;
        const JStarModule::Block& S = J.blocks[src];
        const JStarModule::Block& T = J.blocks[tgt];
        std::map<int, size_t> src_pos;
        for (size_t i = 0; i < S.xi.size(); ++i) src_pos[S.xi[i]] = i;
        FpMat g_all(T.xoff.back(), S.basis.cols(), big.p);
        for (size_t i = 0; i < T.xi.size(); ++i) {
            int xi = T.xi[i];
            int len = T.xoff[i + 1] - T.xoff[i];
            if (len == 0) continue;
            const AlgElt& prod = big.sc(xi, b);
            for (const auto& [eta, cv] : prod) {
                auto ep = src_pos.find(eta);
                if (ep == src_pos.end())
                    throw std::logic_error("jlowerstar: action left the support");
                size_t j = ep->second;
                // f(eta) occupies src flat coords [S.xoff[j], S.xoff[j+1]).
                for (int col = 0; col < S.basis.cols(); ++col)
                    for (int r = 0; r < len; ++r)
                        g_all.at(T.xoff[i] + r, col) = uint8_t(
                            (g_all.at(T.xoff[i] + r, col) +
                             cv * S.basis.at(S.xoff[j] + r, col)) %
                            big.p);
            }
        }
        auto coords = T.basis.solve_mat(g_all);
        if (!coords) throw std::logic_error("jlowerstar: image not equivariant");
        for (int col = 0; col < coords->cols(); ++col)
            for (int r = 0; r < coords->rows(); ++r)
                if (coords->at(r, col))
                    bld.add(b, J.mod.wt_begin[tgt] + r, J.mod.wt_begin[src] + col,
                            coords->at(r, col));
    }
    J.mod.act = bld.finish();
    return J;
}

// Push an equivariant map phi: N -> N2 through j_*.
inline FpMat jlowerstar_map(const Recollement& R, const JStarModule& src,
                            const AModule& N, const JStarModule& tgt,
                            const AModule& N2, const FpMat& phi) {
    const SchurAlgebra& big = *R.big;
    int n = R.small->n;
    FpMat out(tgt.mod.dim, src.mod.dim, big.p);
    for (int w = 0; w < int(src.mod.weights.size()); ++w) {
        const JStarModule::Block& S = src.blocks[w];
        int tw = tgt.mod.weight_block(src.mod.weights[w]);
        // Compose each basis map with phi, then coordinatize in the target.
        for (int col = 0; col < S.basis.cols(); ++col) {
            // Build phi∘f as flat coords over the same xi list.
            if (tw < 0) {
                // Target has no such block: phi∘f must vanish.
                for (size_t i = 0; i < S.xi.size(); ++i) {
                    int nb = N.weight_block(weight_restrict(big.rowwt[S.xi[i]], n));
                    if (nb < 0) continue;
                    int lo = N.wt_begin[nb];
                    std::vector<uint8_t> fv(N.dim, 0);
                    for (int r = 0; r < N.wt_begin[nb + 1] - lo; ++r)
                        fv[lo + r] = S.basis.at(S.xoff[i] + r, col);
                    std::vector<uint8_t> gv = detail_res::mat_vec(phi, fv);
                    for (uint8_t x : gv)
                        if (x) throw std::logic_error("jlowerstar_map: dropped block is hit");
                }
                continue;
            }
            const JStarModule::Block& T = tgt.blocks[tw];
            if (T.xi != S.xi) throw std::logic_error("jlowerstar_map: support mismatch");
            std::vector<uint8_t> g(T.xoff.back(), 0);
            for (size_t i = 0; i < S.xi.size(); ++i) {
                int nb = N.weight_block(weight_restrict(big.rowwt[S.xi[i]], n));
                if (nb < 0) continue;
                int lo = N.wt_begin[nb];
                std::vector<uint8_t> fv(N.dim, 0);
                for (int r = 0; r < N.wt_begin[nb + 1] - lo; ++r)
                    fv[lo + r] = S.basis.at(S.xoff[i] + r, col);
                std::vector<uint8_t> gv = detail_res::mat_vec(phi, fv);
                int nb2 = N2.weight_block(weight_restrict(big.rowwt[S.xi[i]], n));
                for (int u = 0; u < N2.dim; ++u) {
                    if (!gv[u]) continue;
                    if (nb2 < 0 || u < N2.wt_begin[nb2] || u >= N2.wt_begin[nb2 + 1])
                        throw std::logic_error("jlowerstar_map: image outside block");
                    g[T.xoff[i] + (u - N2.wt_begin[nb2])] = gv[u];
                }
            }
            auto coords = T.basis.solve(g);
            if (!coords) throw std::logic_error("jlowerstar_map: image not equivariant");
            for (int r = 0; r < int(coords->size()); ++r)
                out.at(tgt.mod.wt_begin[tw] + r, src.mod.wt_begin[w] + col) = (*coords)[r];
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// The derived functor of j_* and the projection formula check
// ---------------------------------------------------------------------------

// Injective resolution of N (as duals of a projective resolution of the Kuhn
// dual), pushed through j_*, with the cohomology modules of the result.
inline std::vector<AModule> r_jlowerstar_cohomology(const Recollement& R, const AModule& N,
                                                    int qmax,
                                                    long long budget = kDefaultBudget) {
    AModule D = kuhn_dual(N);
    auto res = projective_resolution(D, qmax + 1, budget);
    int top = std::min(qmax + 1, res->length());
    std::vector<AModule> inj;
    for (int q = 0; q <= top; ++q) inj.push_back(kuhn_dual(res->terms[q].mod));
    std::vector<JStarModule> J;
    for (const AModule& I : inj) J.push_back(jlowerstar(R, I));
    CochainComplex C;
    C.base = 0;
    for (auto& js : J) C.terms.push_back(js.mod);
    for (int q = 0; q + 1 <= top; ++q) {
        FpMat phi = res->maps[q + 1].transpose();
        C.maps.push_back(jlowerstar_map(R, J[q], inj[q], J[q + 1], inj[q + 1], phi));
    }
    verify_complex(C);
    std::vector<AModule> H = complex_cohomology(C);
    H.resize(std::min<size_t>(H.size(), qmax + 1));
    return H;
}

// Both sides of the adjunction identity
//   Ext^q(j^*P, F)  ≅  H^q(Hom(P, Rj_* F))   for P projective over the big
// algebra, instantiated with P = the full tensor power.
inline std::vector<int> adjunction_ext_side(const Recollement& R, const AModule& F, int qmax,
                                            long long budget = kDefaultBudget) {
    AModule T = tensor_power_module(*R.big).mod;
    AModule jT = jstar(R, T);
    return ext_dims(jT, F, qmax, budget).dims;
}

inline std::vector<int> adjunction_hom_side(const Recollement& R, const AModule& F, int qmax,
                                            long long budget = kDefaultBudget) {
    const SchurAlgebra& big = *R.big;
    AModule T = tensor_power_module(big).mod;
    AModule D = kuhn_dual(F);
    auto res = projective_resolution(D, qmax + 1, budget);
    int top = std::min(qmax + 1, res->length());
    std::vector<AModule> inj;
    for (int q = 0; q <= top; ++q) inj.push_back(kuhn_dual(res->terms[q].mod));
    std::vector<JStarModule> J;
    for (const AModule& I : inj) J.push_back(jlowerstar(R, I));
    // Hom spaces and induced maps, coordinatized against their own bases.
    std::vector<std::vector<FpMat>> homs;
    for (auto& js : J) homs.push_back(hom_space(T, js.mod));
    std::vector<int> rk(qmax + 2, 0);
    for (int q = 0; q + 1 <= top; ++q) {
        FpMat phi = res->maps[q + 1].transpose();
        FpMat jphi = jlowerstar_map(R, J[q], inj[q], J[q + 1], inj[q + 1], phi);
        if (homs[q].empty() || homs[q + 1].empty()) continue;
        // Column c: coordinates of jphi * homs[q][c] against homs[q+1].
        int flat = J[q + 1].mod.dim * T.dim;
        FpMat basis(flat, int(homs[q + 1].size()), big.p);
        for (int j = 0; j < int(homs[q + 1].size()); ++j)
            for (int r = 0; r < homs[q + 1][j].rows(); ++r)
                for (int c = 0; c < homs[q + 1][j].cols(); ++c)
                    basis.at(r * T.dim + c, j) = homs[q + 1][j].at(r, c);
        FpMat images(flat, int(homs[q].size()), big.p);
        for (int j = 0; j < int(homs[q].size()); ++j) {
            FpMat comp = jphi * homs[q][j];
            for (int r = 0; r < comp.rows(); ++r)
                for (int c = 0; c < comp.cols(); ++c)
                    images.at(r * T.dim + c, j) = comp.at(r, c);
        }
        auto coords = basis.solve_mat(images);
        if (!coords) throw std::logic_error("adjunction_hom_side: composite escaped Hom");
        rk[q] = coords->rank();
    }
    std::vector<int> dims(qmax + 1, 0);
    for (int q = 0; q <= qmax; ++q) {
        if (q > top) continue;
        int h = q <= top ? int(homs[q].size()) : 0;
        int prev = q == 0 ? 0 : rk[q - 1];
        dims[q] = h - rk[q] - prev;
        if (dims[q] < 0) throw std::logic_error("adjunction_hom_side: negative dimension");
    }
    return dims;
}

// Cohomology dimensions of the derived Schur functor: Ext^*(I^{⊗d}, F)
// computed over the small algebra itself.
inline std::vector<int> rs_dims(const AModule& F, int qmax,
                                long long budget = kDefaultBudget) {
    AModule T = tensor_power_module(*F.A).mod;
    return ext_dims(T, F, qmax, budget).dims;
}

}  // namespace schurkit
