#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "schurkit/fpmatrix.hpp"
#include "schurkit/partition.hpp"
#include "schurkit/schur_algebra.hpp"
#include "schurkit/sympoly.hpp"

namespace schurkit {

// Per algebra-basis-element sparse action, stored as one flat triple list
// with offsets so a module over a large algebra stays compact.
struct ActionTable {
    int alg_dim = 0, mod_dim = 0, p = 2;
    std::vector<size_t> off;
    std::vector<int32_t> row_, col_;
    std::vector<uint8_t> val_;

    void apply_acc(int b, const uint8_t* x, uint32_t* acc) const {
        for (size_t k = off[b]; k < off[b + 1]; ++k)
            acc[row_[k]] += uint32_t(val_[k]) * x[col_[k]];
    }

    std::vector<uint8_t> apply(int b, const std::vector<uint8_t>& x) const {
        std::vector<uint32_t> acc(mod_dim, 0);
        apply_acc(b, x.data(), acc.data());
        std::vector<uint8_t> y(mod_dim);
        for (int i = 0; i < mod_dim; ++i) y[i] = uint8_t(acc[i] % p);
        return y;
    }

    FpMat dense(int b) const {
        FpMat m(mod_dim, mod_dim, p);
        for (size_t k = off[b]; k < off[b + 1]; ++k)
            m.at(row_[k], col_[k]) = uint8_t((m.at(row_[k], col_[k]) + val_[k]) % p);
        return m;
    }

    // this(b) * X for dense X.
    FpMat apply_mat(int b, const FpMat& X) const {
        FpMat out(mod_dim, X.cols(), p);
        std::vector<std::vector<uint32_t>> acc(mod_dim, std::vector<uint32_t>(X.cols(), 0));
        for (size_t k = off[b]; k < off[b + 1]; ++k) {
            const uint8_t* xr = X.row(col_[k]);
            auto& ar = acc[row_[k]];
            for (int j = 0; j < X.cols(); ++j) ar[j] += uint32_t(val_[k]) * xr[j];
        }
        for (int i = 0; i < mod_dim; ++i)
            for (int j = 0; j < X.cols(); ++j) out.at(i, j) = uint8_t(acc[i][j] % p);
        return out;
    }

    // X * this(b) for dense X.
    FpMat mat_apply(const FpMat& X, int b) const {
        FpMat out(X.rows(), mod_dim, p);
        std::vector<std::vector<uint32_t>> acc(X.rows(), std::vector<uint32_t>(mod_dim, 0));
        for (size_t k = off[b]; k < off[b + 1]; ++k)
            for (int i = 0; i < X.rows(); ++i)
                acc[i][col_[k]] += uint32_t(X.at(i, row_[k])) * val_[k];
        for (int i = 0; i < X.rows(); ++i)
            for (int j = 0; j < mod_dim; ++j) out.at(i, j) = uint8_t(acc[i][j] % p);
        return out;
    }

    size_t nnz() const { return val_.size(); }
};

class ActionBuilder {
  public:
    ActionBuilder(int alg_dim, int mod_dim, int p) : t_() {
        t_.alg_dim = alg_dim;
        t_.mod_dim = mod_dim;
        t_.p = p;
        per_.resize(alg_dim);
    }
    void add(int b, int r, int c, int v) {
        int rv = v % t_.p;
        if (rv < 0) rv += t_.p;
        if (rv) per_[b].push_back({r, c, uint8_t(rv)});
    }
    ActionTable finish() {
        t_.off.assign(t_.alg_dim + 1, 0);
        size_t total = 0;
        for (int b = 0; b < t_.alg_dim; ++b) {
            t_.off[b] = total;
            total += per_[b].size();
        }
        t_.off[t_.alg_dim] = total;
        t_.row_.resize(total);
        t_.col_.resize(total);
        t_.val_.resize(total);
        size_t k = 0;
        for (int b = 0; b < t_.alg_dim; ++b)
            for (auto& [r, c, v] : per_[b]) {
                t_.row_[k] = r;
                t_.col_[k] = c;
                t_.val_[k] = v;
                ++k;
            }
        return std::move(t_);
    }

  private:
    ActionTable t_;
    std::vector<std::vector<std::tuple<int32_t, int32_t, uint8_t>>> per_;
};

// An S(n,d)-module with a weight-graded basis: basis vectors are grouped by
// composition so each weight idempotent acts as a coordinate projection.
struct AModule {
    const SchurAlgebra* A = nullptr;
    int dim = 0;
    std::vector<std::vector<int>> weights; // distinct compositions, block order
    std::vector<int> wt_begin;             // block offsets, size weights.size()+1
    ActionTable act;
    std::string kind = "other";
    Partition label;

    int weight_block(const std::vector<int>& chi) const {
        for (size_t w = 0; w < weights.size(); ++w)
            if (weights[w] == chi) return int(w);
        return -1;
    }
    int block_dim(int w) const { return wt_begin[w + 1] - wt_begin[w]; }
    int wt_id_of(int basis_index) const {
        for (size_t w = 0; w < weights.size(); ++w)
            if (basis_index >= wt_begin[w] && basis_index < wt_begin[w + 1]) return int(w);
        return -1;
    }

    std::vector<uint8_t> apply(int b, const std::vector<uint8_t>& x) const {
        return act.apply(b, x);
    }

    SymPolynomial weight_character() const {
        SymPolynomial out(A->n);
        for (size_t w = 0; w < weights.size(); ++w) {
            std::vector<int> e(weights[w].begin(), weights[w].end());
            out.add_term(e, block_dim(int(w)));
        }
        return out;
    }
};

// A map of modules; construction verifies equivariance against every algebra
// basis element exactly when both sides are small, sampled above that.
struct ModuleMap {
    const AModule* src = nullptr;
    const AModule* tgt = nullptr;
    FpMat mat; // tgt.dim x src.dim
};

inline void verify_equivariance(const AModule& M, const AModule& N, const FpMat& f) {
    if (f.rows() != N.dim || f.cols() != M.dim)
        throw std::invalid_argument("module map: shape mismatch");
    const SchurAlgebra& A = *M.A;
    bool exhaustive = M.dim <= 200 && N.dim <= 200;
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> pick(0, A.dim - 1);
    int count = exhaustive ? A.dim : 200;
    for (int t = 0; t < count; ++t) {
        int b = exhaustive ? t : pick(rng);
        FpMat lhs = N.act.apply_mat(b, f);  // act_N(b) * f
        FpMat rhs = M.act.mat_apply(f, b);  // f * act_M(b)
        if (!(lhs == rhs)) throw std::logic_error("module map: not equivariant");
    }
}

inline ModuleMap make_module_map(const AModule& src, const AModule& tgt, FpMat mat) {
    verify_equivariance(src, tgt, mat);
    return ModuleMap{&src, &tgt, std::move(mat)};
}

// ----- constructions ------------------------------------------------------

// V^{tensor d} with the defining operator action. Basis tuples are grouped
// by content; tuple_index maps the algebra's tuple encoding to module index.
struct TensorModule {
    AModule mod;
    std::vector<int> tuple_index;  // encoded tuple -> module basis index
    std::vector<int> index_tuple;  // module basis index -> encoded tuple
};

inline TensorModule tensor_power_module(const SchurAlgebra& A) {
    TensorModule T;
    AModule& M = T.mod;
    M.A = &A;
    M.dim = A.vdim;
    M.kind = "tensor";
    std::map<std::vector<int>, std::vector<int>> groups;
    for (int e = 0; e < A.vdim; ++e) {
        std::vector<int> tup = A.decode(e), chi(A.n, 0);
        for (int t : tup) ++chi[t];
        groups[chi].push_back(e);
    }
    T.tuple_index.assign(A.vdim, -1);
    T.index_tuple.clear();
    M.wt_begin.push_back(0);
    for (auto& [chi, encs] : groups) {
        M.weights.push_back(chi);
        for (int e : encs) {
            T.tuple_index[e] = int(T.index_tuple.size());
            T.index_tuple.push_back(e);
        }
        M.wt_begin.push_back(int(T.index_tuple.size()));
    }
    ActionBuilder ab(A.dim, M.dim, A.p);
    for (int b = 0; b < A.dim; ++b)
        for (int c = 0; c < A.vdim; ++c)
            for (auto [r, v] : A.op[b].col[c]) ab.add(b, T.tuple_index[r], T.tuple_index[c], v);
    M.act = ab.finish();
    return T;
}

// Submodule spanned by the given vectors (columns in parent coordinates),
// with basis split per weight block. Closure under the action is verified
// exactly while building the action table.
struct SubModule {
    AModule mod;
    FpMat embed;  // parent_dim x dim
    FpMat coords; // dim x parent_dim, coords * embed = identity
};

inline SubModule submodule(const AModule& P, const FpMat& span_cols, std::string kind = "other",
                           Partition label = {}) {
    const SchurAlgebra& A = *P.A;
    SubModule S;
    AModule& M = S.mod;
    M.A = &A;
    M.kind = std::move(kind);
    M.label = std::move(label);

    // Split the span per weight block and reduce each block independently.
    std::vector<FpMat> block_rows;   // per parent weight block: rref basis rows
    std::vector<std::vector<int>> block_piv;
    M.wt_begin.push_back(0);
    int total = 0;
    for (size_t w = 0; w < P.weights.size(); ++w) {
        int lo = P.wt_begin[w], hi = P.wt_begin[w + 1];
        FpMat rows(span_cols.cols(), hi - lo, A.p);
        for (int j = 0; j < span_cols.cols(); ++j)
            for (int r = lo; r < hi; ++r) rows.at(j, r - lo) = span_cols.at(r, j);
        auto piv = rows.rref_in_place();
        int rk = int(piv.size());
        if (rk == 0) continue;
        FpMat basis = FpMat(rk, hi - lo, A.p);
        for (int i = 0; i < rk; ++i)
            for (int j = 0; j < hi - lo; ++j) basis.at(i, j) = rows.at(i, j);
        block_rows.push_back(basis);
        block_piv.push_back(piv);
        M.weights.push_back(P.weights[w]);
        total += rk;
        M.wt_begin.push_back(total);
    }
    M.dim = total;

    // embed: basis vectors as columns; coords: pick pivot coordinates.
    S.embed = FpMat(P.dim, M.dim, A.p);
    S.coords = FpMat(M.dim, P.dim, A.p);
    {
        int idx = 0;
        int bi = 0;
        for (size_t w = 0; w < M.weights.size(); ++w, ++bi) {
            int plo = P.wt_begin[P.weight_block(M.weights[w])];
            const FpMat& basis = block_rows[bi];
            for (int i = 0; i < basis.rows(); ++i, ++idx) {
                for (int j = 0; j < basis.cols(); ++j) S.embed.at(plo + j, idx) = basis.at(i, j);
                S.coords.at(idx, plo + block_piv[bi][i]) = 1;
            }
        }
    }

    // Weight-homogeneity check: the span must equal the sum of its blocks.
    {
        RrefSpan whole(P.dim, A.p);
        for (int j = 0; j < span_cols.cols(); ++j) whole.insert(span_cols.col(j));
        if (whole.rank() != M.dim)
            throw std::logic_error("submodule: span is not weight graded");
    }

    // Action: apply the parent action to each basis vector, take pivot
    // coordinates, and verify the result reproduces the image exactly.
    ActionBuilder ab(A.dim, M.dim, A.p);
    for (int b = 0; b < A.dim; ++b) {
        FpMat img = P.act.apply_mat(b, S.embed);       // parent_dim x dim
        FpMat crd = S.coords * img;                    // dim x dim
        if (!(S.embed * crd == img))
            throw std::logic_error("submodule: span not closed under the action");
        for (int i = 0; i < M.dim; ++i)
            for (int j = 0; j < M.dim; ++j)
                if (crd.at(i, j)) ab.add(b, i, j, crd.at(i, j));
    }
    M.act = ab.finish();
    return S;
}

// Quotient of P by the submodule spanned by sub_cols. The canonical section
// sends a quotient basis vector to the parent unit vector at a non-pivot
// coordinate of the reduced span.
struct QuotientModule {
    AModule mod;
    FpMat project; // dim x parent_dim
    FpMat section; // parent_dim x dim, project * section = identity
};

inline QuotientModule quotient_module(const AModule& P, const FpMat& sub_cols,
                                      std::string kind = "other", Partition label = {}) {
    const SchurAlgebra& A = *P.A;
    QuotientModule Q;
    AModule& M = Q.mod;
    M.A = &A;
    M.kind = std::move(kind);
    M.label = std::move(label);

    // Reduce the subspace per parent weight block.
    Q.project = FpMat(0, 0, A.p);
    std::vector<int> q_index_parent; // quotient basis index -> parent coordinate
    FpMat proj(P.dim, P.dim, A.p);   // full-size projection, rows trimmed later
    int total = 0;
    M.wt_begin.push_back(0);
    Fp f(A.p);
    for (size_t w = 0; w < P.weights.size(); ++w) {
        int lo = P.wt_begin[w], hi = P.wt_begin[w + 1];
        FpMat rows(sub_cols.cols(), hi - lo, A.p);
        for (int j = 0; j < sub_cols.cols(); ++j)
            for (int r = lo; r < hi; ++r) rows.at(j, r - lo) = sub_cols.at(r, j);
        auto piv = rows.rref_in_place();
        std::vector<char> is_piv(hi - lo, 0);
        for (int c : piv) is_piv[c] = 1;
        int before = total;
        for (int c = 0; c < hi - lo; ++c) {
            if (is_piv[c]) continue;
            // projection row: unit at (lo+c) minus the pivot-row corrections.
            proj.at(total, lo + c) = 1;
            for (size_t r = 0; r < piv.size(); ++r)
                proj.at(total, lo + piv[r]) = f.neg(rows.at(int(r), c));
            q_index_parent.push_back(lo + c);
            ++total;
        }
        if (total > before) {
            M.weights.push_back(P.weights[w]);
            M.wt_begin.push_back(total);
        }
    }
    M.dim = total;
    Q.project = FpMat(M.dim, P.dim, A.p);
    for (int i = 0; i < M.dim; ++i)
        for (int j = 0; j < P.dim; ++j) Q.project.at(i, j) = proj.at(i, j);
    Q.section = FpMat(P.dim, M.dim, A.p);
    for (int i = 0; i < M.dim; ++i) Q.section.at(q_index_parent[i], i) = 1;

    // Verify the subspace is killed (weight gradedness comes for free: the
    // projection was built blockwise).
    if (!(Q.project * sub_cols).is_zero())
        throw std::logic_error("quotient_module: projection does not kill the subspace");

    // Action by lift - apply - project; well-definedness needs the subspace
    // closed under the action, which is checked per algebra element below.
    ActionBuilder ab(A.dim, M.dim, A.p);
    for (int b = 0; b < A.dim; ++b) {
        FpMat img = P.act.apply_mat(b, Q.section); // parent_dim x dim
        FpMat crd = Q.project * img;
        if (!(Q.project * P.act.apply_mat(b, sub_cols)).is_zero())
            throw std::logic_error("quotient_module: subspace not closed under the action");
        for (int i = 0; i < M.dim; ++i)
            for (int j = 0; j < M.dim; ++j)
                if (crd.at(i, j)) ab.add(b, i, j, crd.at(i, j));
    }
    M.act = ab.finish();
    return Q;
}

inline AModule direct_sum_module(const AModule& X, const AModule& Y) {
    const SchurAlgebra& A = *X.A;
    AModule M;
    M.A = &A;
    M.dim = X.dim + Y.dim;
    M.kind = "other";
    // Merge weight blocks; X blocks first within each weight.
    std::map<std::vector<int>, std::vector<std::pair<int, int>>> pieces; // wt -> (which, block)
    for (size_t w = 0; w < X.weights.size(); ++w) pieces[X.weights[w]].push_back({0, int(w)});
    for (size_t w = 0; w < Y.weights.size(); ++w) pieces[Y.weights[w]].push_back({1, int(w)});
    std::vector<int> xmap(X.dim), ymap(Y.dim);
    int idx = 0;
    M.wt_begin.push_back(0);
    for (auto& [chi, lst] : pieces) {
        M.weights.push_back(chi);
        for (auto [which, w] : lst) {
            const AModule& S = which == 0 ? X : Y;
            auto& mp = which == 0 ? xmap : ymap;
            for (int i = S.wt_begin[w]; i < S.wt_begin[w + 1]; ++i) mp[i] = idx++;
        }
        M.wt_begin.push_back(idx);
    }
    ActionBuilder ab(A.dim, M.dim, A.p);
    for (int b = 0; b < A.dim; ++b) {
        for (size_t k = X.act.off[b]; k < X.act.off[b + 1]; ++k)
            ab.add(b, xmap[X.act.row_[k]], xmap[X.act.col_[k]], X.act.val_[k]);
        for (size_t k = Y.act.off[b]; k < Y.act.off[b + 1]; ++k)
            ab.add(b, ymap[Y.act.row_[k]], ymap[Y.act.col_[k]], Y.act.val_[k]);
    }
    M.act = ab.finish();
    return M;
}

// Dual space with action a -> action(transpose a)^T. Weight blocks carry over.
inline AModule kuhn_dual(const AModule& X) {
    const SchurAlgebra& A = *X.A;
    AModule M;
    M.A = &A;
    M.dim = X.dim;
    M.weights = X.weights;
    M.wt_begin = X.wt_begin;
    M.kind = X.kind == "costandard" ? "standard" : (X.kind == "standard" ? "costandard" : X.kind);
    M.label = X.label;
    ActionBuilder ab(A.dim, M.dim, A.p);
    for (int b = 0; b < A.dim; ++b) {
        int tb = A.transpose_elt(b);
        for (size_t k = X.act.off[tb]; k < X.act.off[tb + 1]; ++k)
            ab.add(b, X.act.col_[k], X.act.row_[k], X.act.val_[k]);
    }
    M.act = ab.finish();
    return M;
}

// The algebra acting on itself from the left; weight grading by row weight.
inline AModule regular_module(const SchurAlgebra& A) {
    AModule M;
    M.A = &A;
    M.dim = A.dim;
    M.kind = "regular";
    std::map<std::vector<int>, std::vector<int>> groups;
    for (int e = 0; e < A.dim; ++e) groups[A.rowwt[e]].push_back(e);
    std::vector<int> to_mod(A.dim);
    int idx = 0;
    M.wt_begin.push_back(0);
    for (auto& [chi, lst] : groups) {
        M.weights.push_back(chi);
        for (int e : lst) to_mod[e] = idx++;
        M.wt_begin.push_back(idx);
    }
    A.ensure_all_sc();
    ActionBuilder ab(A.dim, M.dim, A.p);
    for (int b = 0; b < A.dim; ++b)
        for (int e = 0; e < A.dim; ++e)
            for (auto [t, c] : A.sc(b, e)) ab.add(b, to_mod[t], to_mod[e], c);
    M.act = ab.finish();
    return M;
}

inline AModule dual_regular_module(const SchurAlgebra& A) {
    AModule R = regular_module(A);
    AModule D = kuhn_dual(R);
    D.kind = "dual-regular";
    return D;
}

// ----- hom spaces ---------------------------------------------------------

// Exact basis of Hom_A(M, N). Weight idempotents force block-diagonal shape;
// the divided-power generators cut the candidate space down cheaply; a final
// pass over every algebra basis element makes the answer exact regardless of
// whether the generators generate.
inline std::vector<FpMat> hom_space(const AModule& M, const AModule& N) {
    const SchurAlgebra& A = *M.A;
    if (N.A != &A) throw std::invalid_argument("hom_space: different algebras");
    Fp f(A.p);

    // Unknown layout: for each weight chi present in both modules, a block
    // f_chi of shape N_chi x M_chi.
    struct Blk {
        std::vector<int> chi;
        int moff, mdim, noff, ndim, uoff;
    };
    std::vector<Blk> blks;
    int U = 0;
    for (size_t w = 0; w < M.weights.size(); ++w) {
        int nw = N.weight_block(M.weights[w]);
        if (nw < 0) continue;
        Blk b;
        b.chi = M.weights[w];
        b.moff = M.wt_begin[w];
        b.mdim = M.wt_begin[w + 1] - M.wt_begin[w];
        b.noff = N.wt_begin[nw];
        b.ndim = N.wt_begin[nw + 1] - N.wt_begin[nw];
        b.uoff = U;
        U += b.mdim * b.ndim;
        blks.push_back(b);
    }
    if (U == 0) return {};
    auto blk_of = [&](const std::vector<int>& chi) -> const Blk* {
        for (auto& b : blks)
            if (b.chi == chi) return &b;
        return nullptr;
    };

    auto unflatten = [&](const std::vector<uint8_t>& u) {
        FpMat g(N.dim, M.dim, A.p);
        for (auto& b : blks)
            for (int i = 0; i < b.ndim; ++i)
                for (int j = 0; j < b.mdim; ++j)
                    g.at(b.noff + i, b.moff + j) = u[b.uoff + i * b.mdim + j];
        return g;
    };

    RrefSpan span(U, A.p);
    auto add_constraints_for = [&](int g) {
        const Blk* src = blk_of(A.colwt[g]);
        const Blk* tgt = blk_of(A.rowwt[g]);
        // Rows live in Hom(M_src, N_tgt): N(g) f_src - f_tgt M(g) = 0.
        // Either unknown block may be absent; an absent block contributes 0.
        if (!src && !tgt) return;
        // Dense blocks of the action.
        FpMat Mg(0, 0, A.p), Ng(0, 0, A.p);
        int mg_rows = 0, mg_cols = 0, ng_rows = 0, ng_cols = 0;
        {
            int mw_src = M.weight_block(A.colwt[g]);
            int mw_tgt = M.weight_block(A.rowwt[g]);
            if (mw_src >= 0 && mw_tgt >= 0) {
                mg_rows = M.wt_begin[mw_tgt + 1] - M.wt_begin[mw_tgt];
                mg_cols = M.wt_begin[mw_src + 1] - M.wt_begin[mw_src];
                Mg = FpMat(mg_rows, mg_cols, A.p);
                int ro = M.wt_begin[mw_tgt], co = M.wt_begin[mw_src];
                for (size_t k = M.act.off[g]; k < M.act.off[g + 1]; ++k)
                    Mg.at(M.act.row_[k] - ro, M.act.col_[k] - co) =
                        uint8_t((Mg.at(M.act.row_[k] - ro, M.act.col_[k] - co) + M.act.val_[k]) %
                                A.p);
            }
            int nw_src = N.weight_block(A.colwt[g]);
            int nw_tgt = N.weight_block(A.rowwt[g]);
            if (nw_src >= 0 && nw_tgt >= 0) {
                ng_rows = N.wt_begin[nw_tgt + 1] - N.wt_begin[nw_tgt];
                ng_cols = N.wt_begin[nw_src + 1] - N.wt_begin[nw_src];
                Ng = FpMat(ng_rows, ng_cols, A.p);
                int ro = N.wt_begin[nw_tgt], co = N.wt_begin[nw_src];
                for (size_t k = N.act.off[g]; k < N.act.off[g + 1]; ++k)
                    Ng.at(N.act.row_[k] - ro, N.act.col_[k] - co) =
                        uint8_t((Ng.at(N.act.row_[k] - ro, N.act.col_[k] - co) + N.act.val_[k]) %
                                A.p);
            }
        }
        // Build one constraint row per (target basis i, source basis j).
        int ni = tgt ? tgt->ndim : ng_rows;
        int mj = src ? src->mdim : mg_cols;
        for (int i = 0; i < ni; ++i)
            for (int j = 0; j < mj; ++j) {
                std::vector<uint8_t> row(U, 0);
                bool nonzero = false;
                if (src && ng_rows) {
                    // +N(g)[i,k] at f_src[k,j]
                    for (int k = 0; k < src->ndim; ++k) {
                        uint8_t v = Ng.at(i, k);
                        if (!v) continue;
                        row[src->uoff + k * src->mdim + j] =
                            f.add(row[src->uoff + k * src->mdim + j], v);
                        nonzero = true;
                    }
                }
                if (tgt && mg_rows) {
                    // -M(g)[k,j] at f_tgt[i,k]
                    for (int k = 0; k < tgt->mdim; ++k) {
                        uint8_t v = Mg.at(k, j);
                        if (!v) continue;
                        row[tgt->uoff + i * tgt->mdim + k] =
                            f.sub(row[tgt->uoff + i * tgt->mdim + k], v);
                        nonzero = true;
                    }
                }
                if (nonzero) span.insert(row);
            }
    };

    for (int g : hyperalgebra_generators(A)) {
        add_constraints_for(g);
        if (span.rank() == U) return {};
    }

    // Candidate space from the generator constraints.
    FpMat cons = span.basis_rows();
    FpMat cand = cons.rows() ? cons.nullspace_basis() : FpMat::identity(U, A.p);
    if (cand.cols() == 0) return {};

    // Exact refinement: impose every algebra basis element on the candidates.
    for (;;) {
        std::vector<FpMat> fs;
        for (int j = 0; j < cand.cols(); ++j) fs.push_back(unflatten(cand.col(j)));
        FpMat bad(0, cand.cols(), A.p);
        bool clean = true;
        for (int b = 0; b < A.dim && clean; ++b) {
            std::vector<FpMat> residue;
            bool any = false;
            for (auto& g : fs) {
                FpMat r = N.act.apply_mat(b, g) - M.act.mat_apply(g, b);
                if (!r.is_zero()) any = true;
                residue.push_back(std::move(r));
            }
            if (!any) continue;
            clean = false;
            // Solve sum_l x_l residue_l = 0 within the candidate space.
            FpMat sys(N.dim * M.dim, cand.cols(), A.p);
            for (int l = 0; l < cand.cols(); ++l)
                for (int i = 0; i < N.dim; ++i)
                    for (int j = 0; j < M.dim; ++j)
                        sys.at(i * M.dim + j, l) = residue[l].at(i, j);
            FpMat keep = sys.nullspace_basis();
            cand = cand * keep;
            if (cand.cols() == 0) return {};
        }
        if (clean) break;
    }

    std::vector<FpMat> out;
    for (int j = 0; j < cand.cols(); ++j) out.push_back(unflatten(cand.col(j)));
    return out;
}

inline SubModule kernel_submodule(const AModule& M, const AModule& N, const FpMat& f,
                                  std::string kind = "other", Partition label = {}) {
    FpMat ns = f.nullspace_basis();
    return submodule(M, ns, std::move(kind), std::move(label));
}

inline SubModule image_submodule(const AModule& M, const AModule& N, const FpMat& f,
                                 std::string kind = "other", Partition label = {}) {
    (void)M;
    FpMat im = f.image_basis();
    return submodule(N, im, std::move(kind), std::move(label));
}

// Isomorphism test: equal weight characters are necessary; then search the
// hom space for an invertible element, exhaustively when the space is small
// enough to enumerate, otherwise by random sampling.
inline bool iso_test(const AModule& M, const AModule& N, bool* certified = nullptr) {
    if (certified) *certified = true;
    if (M.dim != N.dim) return false;
    if (!(M.weight_character() == N.weight_character())) return false;
    auto homs = hom_space(M, N);
    if (homs.empty()) return M.dim == 0;
    int h = int(homs.size());
    double total = 1;
    for (int i = 0; i < h; ++i) total *= M.A->p;
    if (total <= 16384) {
        std::vector<int> coef(h, 0);
        for (;;) {
            int pos = 0;
            while (pos < h && coef[pos] == M.A->p - 1) coef[pos++] = 0;
            if (pos == h) break;
            ++coef[pos];
            FpMat g(N.dim, M.dim, M.A->p);
            for (int i = 0; i < h; ++i)
                if (coef[i]) g = g + homs[i].scale(uint8_t(coef[i]));
            if (g.rank() == M.dim) return true;
        }
        return false;
    }
    if (certified) *certified = false;
    std::mt19937 rng(99173);
    std::uniform_int_distribution<int> pick(0, M.A->p - 1);
    for (int t = 0; t < 200; ++t) {
        FpMat g(N.dim, M.dim, M.A->p);
        for (int i = 0; i < h; ++i) {
            int c = pick(rng);
            if (c) g = g + homs[i].scale(uint8_t(c));
        }
        if (g.rank() == M.dim) return true;
    }
    return false;
}

// ----- complexes ----------------------------------------------------------

struct CochainComplex {
    int base = 0;
    std::vector<AModule> terms;
    std::vector<FpMat> maps; // maps[q]: terms[q] -> terms[q+1]
};

inline void verify_complex(const CochainComplex& C) {
    for (size_t q = 0; q < C.maps.size(); ++q) {
        verify_equivariance(C.terms[q], C.terms[q + 1], C.maps[q]);
        if (q + 1 < C.maps.size())
            if (!(C.maps[q + 1] * C.maps[q]).is_zero())
                throw std::logic_error("complex: consecutive maps do not compose to zero");
    }
}

// Subquotient cohomology with inherited action at every position.
inline std::vector<AModule> complex_cohomology(const CochainComplex& C) {
    std::vector<AModule> out;
    for (size_t q = 0; q < C.terms.size(); ++q) {
        const AModule& T = C.terms[q];
        FpMat ker = q < C.maps.size() ? C.maps[q].nullspace_basis() : FpMat::identity(T.dim, T.A->p);
        SubModule K = submodule(T, ker);
        if (q == 0) {
            out.push_back(K.mod);
            continue;
        }
        const FpMat& d_prev = C.maps[q - 1];
        FpMat img = d_prev.image_basis();
        // Express the image inside the kernel's coordinates.
        FpMat img_in_k = K.coords * img;
        if (!(K.embed * img_in_k == img))
            throw std::logic_error("complex_cohomology: image not inside kernel");
        QuotientModule H = quotient_module(K.mod, img_in_k);
        out.push_back(H.mod);
    }
    return out;
}

} // namespace schurkit
