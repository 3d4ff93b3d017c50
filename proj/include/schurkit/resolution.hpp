// Projective resolutions over a Schur algebra and the Ext groups they compute.
//
// Every term of a resolution is a finite direct sum of weight-idempotent
// left ideals A·e_chi, which are projective because e_chi is idempotent.
// Generators of successive kernels are chosen greedily, one weight vector at
// a time, preferring candidates whose A-closure covers the largest part of
// the kernel.  All linear algebra (kernels, ranks, solves) is done one
// weight block at a time: the differentials are weight-preserving, so their
// matrices are block diagonal with respect to the weight grading, and the
// blockwise cost is far below a dense global elimination.
//
// Ext groups are read off the complex Hom(P_•, N).  Since
// Hom_A(A e_chi, N) ≅ e_chi·N, each Hom space is a direct sum of weight
// blocks of N, and the transposed differential is assembled directly from
// the action table of N — no global Hom-space solve is needed.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "schurkit/amodule.hpp"
#include "schurkit/fpmatrix.hpp"
#include "schurkit/partition.hpp"
#include "schurkit/schur_algebra.hpp"

namespace schurkit {

// Thrown when a computation would exceed the configured size budget.
// The CLI maps this to a dedicated exit code.
class ResourceGuardError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline constexpr long long kDefaultBudget = 400000000LL;  // matrix entries

// A table of Ext dimensions Ext^q(a, b) for q = 0..qmax.
struct ExtTable {
    std::string a, b;
    int qmax = 0;
    std::vector<int> dims;  // size qmax + 1

    bool operator==(const ExtTable& o) const { return dims == o.dims; }
    bool operator!=(const ExtTable& o) const { return !(*this == o); }
};

inline std::string module_name(const AModule& M) {
    if (!M.label.empty()) return M.kind + part_str(M.label);
    return M.kind;
}

// ---------------------------------------------------------------------------
// Graded kernels of weight-preserving maps
// ---------------------------------------------------------------------------

// Kernel of a weight-preserving map f: src -> tgt, presented blockwise:
// local[w] has block_dim(w) rows and its columns span the kernel restricted
// to weight block w of src.
struct GradedKernel {
    std::vector<FpMat> local;  // one entry per weight block of src
    int kernel_dim = 0;
    int rank = 0;  // rank of f
};

inline GradedKernel graded_kernel(const AModule& src, const AModule& tgt, const FpMat& f) {
    if (f.rows() != tgt.dim || f.cols() != src.dim)
        throw std::invalid_argument("graded_kernel: matrix shape mismatch");
    GradedKernel out;
    out.local.reserve(src.weights.size());
    for (int w = 0; w < int(src.weights.size()); ++w) {
        int lo = src.wt_begin[w], hi = src.wt_begin[w + 1];
        int tb = tgt.weight_block(src.weights[w]);
        if (tb < 0) {
            // No matching target block: the map kills the whole block.
            out.local.push_back(FpMat::identity(hi - lo, f.modulus()));
            out.kernel_dim += hi - lo;
            continue;
        }
        int mlo = tgt.wt_begin[tb], mhi = tgt.wt_begin[tb + 1];
        FpMat block(mhi - mlo, hi - lo, f.modulus());
        for (int r = mlo; r < mhi; ++r)
            for (int c = lo; c < hi; ++c) block.at(r - mlo, c - lo) = f.at(r, c);
        FpMat ker = block.nullspace_basis();
        out.rank += (hi - lo) - ker.cols();
        out.kernel_dim += ker.cols();
        out.local.push_back(std::move(ker));
    }
    return out;
}

namespace detail_res {

inline std::vector<uint8_t> mat_vec(const FpMat& m, const std::vector<uint8_t>& x) {
    if (int(x.size()) != m.cols()) throw std::invalid_argument("mat_vec: size mismatch");
    std::vector<uint32_t> acc(m.rows(), 0);
    for (int j = 0; j < m.cols(); ++j) {
        uint8_t xv = x[j];
        if (!xv) continue;
        for (int i = 0; i < m.rows(); ++i) acc[i] += uint32_t(m.at(i, j)) * xv;
    }
    std::vector<uint8_t> y(m.rows());
    for (int i = 0; i < m.rows(); ++i) y[i] = uint8_t(acc[i] % m.modulus());
    return y;
}

}  // namespace detail_res

// ---------------------------------------------------------------------------
// Direct sums of weight-idempotent left ideals
// ---------------------------------------------------------------------------

// P = ⊕_t A·e_{chi_t}.  The basis of summand t is the set of algebra basis
// elements with column weight chi_t; summand t's canonical generator is the
// weight idempotent e_{chi_t} itself.
struct ProjTerm {
    AModule mod;
    std::vector<std::vector<int>> gen_weight;     // chi_t per summand
    std::vector<int> gen_index;                   // module index of e_{chi_t} in summand t
    std::vector<std::vector<int>> pos;            // pos[t][b]: module index of (t, b), or -1
    std::vector<std::vector<int>> summand_basis;  // algebra indices forming summand t
};

inline ProjTerm projective_sum(const SchurAlgebra& A,
                               const std::vector<std::vector<int>>& gen_weights,
                               long long budget = kDefaultBudget) {
    ProjTerm out;
    out.gen_weight = gen_weights;
    int nt = int(gen_weights.size());
    out.pos.assign(nt, {});
    out.summand_basis.assign(nt, {});
    std::vector<int> e_of(nt, -1);  // algebra basis index of e_{chi_t}
    for (int t = 0; t < nt; ++t) {
        e_of[t] = A.idempotent_of_weight(gen_weights[t]);
        if (e_of[t] < 0) throw std::invalid_argument("projective_sum: unknown weight");
    }
    // Collect (row-weight key, summand, algebra element) and sort into blocks.
    struct Ent {
        int wid, t, b;
    };
    std::vector<Ent> ents;
    for (int t = 0; t < nt; ++t)
        for (int b = 0; b < A.dim; ++b)
            if (A.colwt[b] == gen_weights[t])
                ents.push_back({A.idempotent_of_weight(A.rowwt[b]), t, b});
    std::stable_sort(ents.begin(), ents.end(), [](const Ent& x, const Ent& y) {
        if (x.wid != y.wid) return x.wid < y.wid;
        if (x.t != y.t) return x.t < y.t;
        return x.b < y.b;
    });
    int dim = int(ents.size());
    if ((long long)dim * A.dim > budget || (long long)dim * dim > budget)
        throw ResourceGuardError("projective_sum: size budget exceeded (dim " +
                                 std::to_string(dim) + ")");
    std::vector<std::vector<int>> weights;
    std::vector<int> wt_begin;
    for (int t = 0; t < nt; ++t) out.pos[t].assign(A.dim, -1);
    int last_wid = -1;
    for (int i = 0; i < dim; ++i) {
        if (ents[i].wid != last_wid) {
            last_wid = ents[i].wid;
            weights.push_back(A.rowwt[ents[i].wid]);
            wt_begin.push_back(i);
        }
        out.pos[ents[i].t][ents[i].b] = i;
        out.summand_basis[ents[i].t].push_back(ents[i].b);
    }
    wt_begin.push_back(dim);
    out.gen_index.assign(nt, -1);
    for (int t = 0; t < nt; ++t) {
        out.gen_index[t] = out.pos[t][e_of[t]];
        if (out.gen_index[t] < 0) throw std::logic_error("projective_sum: generator missing");
    }
    // Action: a · (t, b) = sum over the structure constants of a·b.
    ActionBuilder bld(A.dim, dim, A.p);
    for (int a = 0; a < A.dim; ++a) {
        const std::vector<int>& compat = A.group_by_rowwt(A.colwt[a]);
        for (int b : compat) {
            bool used = false;
            for (int t = 0; t < nt && !used; ++t) used = out.pos[t][b] >= 0;
            if (!used) continue;
            const AlgElt& prod = A.sc(a, b);
            if (prod.empty()) continue;
            for (int t = 0; t < nt; ++t) {
                int col = out.pos[t][b];
                if (col < 0) continue;
                for (const auto& [e, v] : prod) bld.add(a, out.pos[t][e], col, v);
            }
        }
    }
    out.mod.A = &A;
    out.mod.dim = dim;
    out.mod.weights = std::move(weights);
    out.mod.wt_begin = std::move(wt_begin);
    out.mod.act = bld.finish();
    out.mod.kind = "projective";
    return out;
}

// The left ideal A·e_chi as a module (a single-summand projective).
inline AModule projective_ideal_module(const SchurAlgebra& A, const std::vector<int>& chi) {
    return projective_sum(A, {chi}).mod;
}

// ---------------------------------------------------------------------------
// Greedy generator selection
// ---------------------------------------------------------------------------

namespace detail_res {

struct GenPick {
    std::vector<std::vector<int>> gen_weights;
    std::vector<std::vector<uint8_t>> gen_vecs;  // global coordinates in P
};

// Spans of a submodule of P, stored one weight block at a time.
struct BlockSpans {
    std::vector<RrefSpan> blk;
    explicit BlockSpans(const AModule& P) {
        for (int w = 0; w < int(P.weights.size()); ++w)
            blk.emplace_back(P.wt_begin[w + 1] - P.wt_begin[w], P.act.p);
    }
    int rank() const {
        int r = 0;
        for (const auto& s : blk) r += s.rank();
        return r;
    }
};

// Images a·v for all algebra elements a, grouped by the weight block of P
// they land in.  v is given in global coordinates with support in one block
// of weight chi.
inline std::vector<std::pair<int, std::vector<uint8_t>>> closure_images(
    const AModule& P, const std::vector<int>& chi, const std::vector<uint8_t>& v) {
    const SchurAlgebra& A = *P.A;
    std::vector<std::pair<int, std::vector<uint8_t>>> out;
    for (int a = 0; a < A.dim; ++a) {
        if (A.colwt[a] != chi) continue;
        std::vector<uint8_t> img = P.apply(a, v);
        bool nz = false;
        for (uint8_t x : img) nz = nz || x != 0;
        if (!nz) continue;
        int w = P.weight_block(A.rowwt[a]);
        if (w < 0) throw std::logic_error("closure_images: image outside grading");
        out.emplace_back(w, std::move(img));
    }
    return out;
}

// Pick generators for the submodule of P spanned (as an A-module) by the
// given blockwise kernel bases.  Greedy: each round evaluates up to a fixed
// number of uncovered candidates and keeps the one whose closure covers the
// most of what is still missing.
inline GenPick cover_generators(const AModule& P, const GradedKernel& K) {
    constexpr int kMaxCandidatesPerRound = 48;
    GenPick out;
    if (K.kernel_dim == 0) return out;
    BlockSpans covered(P);
    int target = K.kernel_dim;
    while (covered.rank() < target) {
        int remaining = target - covered.rank();
        int best_gain = 0;
        std::vector<uint8_t> best_vec;
        int best_block = -1;
        std::map<int, RrefSpan> best_touched;
        int evaluated = 0;
        bool done = false;
        for (int w = 0; w < int(K.local.size()) && !done; ++w) {
            const FpMat& loc = K.local[w];
            for (int c = 0; c < loc.cols() && !done; ++c) {
                if (evaluated >= kMaxCandidatesPerRound) break;
                std::vector<uint8_t> lv(loc.rows());
                for (int r = 0; r < loc.rows(); ++r) lv[r] = loc.at(r, c);
                if (covered.blk[w].contains(lv)) continue;
                ++evaluated;
                std::vector<uint8_t> v(P.dim, 0);
                for (int r = 0; r < loc.rows(); ++r) v[P.wt_begin[w] + r] = lv[r];
                // Evaluate the closure gain against lazily copied blocks.
                std::map<int, RrefSpan> touched;
                int gain = 0;
                for (auto& [u, img] : closure_images(P, P.weights[w], v)) {
                    auto it = touched.find(u);
                    if (it == touched.end()) it = touched.emplace(u, covered.blk[u]).first;
                    std::vector<uint8_t> local(img.begin() + P.wt_begin[u],
                                               img.begin() + P.wt_begin[u + 1]);
                    if (it->second.insert(local)) ++gain;
                }
                if (gain > best_gain) {
                    best_gain = gain;
                    best_vec = std::move(v);
                    best_block = w;
                    best_touched = std::move(touched);
                    if (best_gain == remaining) done = true;
                }
            }
            if (evaluated >= kMaxCandidatesPerRound) break;
        }
        if (best_gain <= 0)
            throw std::logic_error("cover_generators: no candidate makes progress");
        for (auto& [u, span] : best_touched) covered.blk[u] = std::move(span);
        out.gen_weights.push_back(P.weights[best_block]);
        out.gen_vecs.push_back(std::move(best_vec));
    }
    return out;
}

}  // namespace detail_res

// ---------------------------------------------------------------------------
// Projective resolutions
// ---------------------------------------------------------------------------

// ... -> P_1 -> P_0 -> M -> 0 with every P_r a ProjTerm.
// maps[0] is the augmentation P_0 -> M; maps[r] (r >= 1) is P_r -> P_{r-1}.
// `complete` is set when the last computed kernel vanished, i.e. the
// resolution is finite and fully present.
struct ProjResolution {
    const SchurAlgebra* A = nullptr;
    AModule M;
    std::vector<ProjTerm> terms;
    std::vector<FpMat> maps;
    bool complete = false;

    int length() const { return int(terms.size()) - 1; }
};

namespace detail_res {

// Extend R in place until it has terms P_0..P_len (or is complete).
inline void extend_resolution(ProjResolution& R, int len, long long budget) {
    const SchurAlgebra& A = *R.A;
    while (!R.complete && R.length() < len) {
        GradedKernel K;
        const AModule* tail = nullptr;
        if (R.terms.empty()) {
            // Kernel of the (absent) map onto M is all of M: cover M itself.
            tail = &R.M;
            K.kernel_dim = R.M.dim;
            for (int w = 0; w < int(R.M.weights.size()); ++w)
                K.local.push_back(
                    FpMat::identity(R.M.wt_begin[w + 1] - R.M.wt_begin[w], A.p));
        } else {
            tail = &R.terms.back().mod;
            const AModule& prev =
                R.terms.size() >= 2 ? R.terms[R.terms.size() - 2].mod : R.M;
            K = graded_kernel(*tail, prev, R.maps.back());
        }
        if (K.kernel_dim == 0) {
            R.complete = true;
            return;
        }
        GenPick picks = cover_generators(*tail, K);
        ProjTerm P = projective_sum(A, picks.gen_weights, budget);
        if (!R.terms.empty() &&
            (long long)P.mod.dim * tail->dim > budget)
            throw ResourceGuardError("extend_resolution: size budget exceeded");
        // Differential column at basis element (t, b): b · v_t in the tail.
        FpMat d(tail->dim, P.mod.dim, A.p);
        for (int t = 0; t < int(picks.gen_vecs.size()); ++t)
            for (int b : P.summand_basis[t])
                d.set_col(P.pos[t][b], tail->apply(b, picks.gen_vecs[t]));
        // Exactness bookkeeping: the new map must cover the kernel exactly.
        GradedKernel chk = graded_kernel(P.mod, *tail, d);
        if (chk.rank != K.kernel_dim)
            throw std::logic_error("extend_resolution: rank bookkeeping failed");
        R.terms.push_back(std::move(P));
        R.maps.push_back(std::move(d));
    }
}

inline uint64_t fnv1a(uint64_t h, uint64_t x) {
    for (int i = 0; i < 8; ++i) {
        h ^= (x >> (8 * i)) & 0xff;
        h *= 1099511628211ULL;
    }
    return h;
}

// Content digest of a module, used as the resolution cache key.
inline uint64_t module_digest(const AModule& M) {
    uint64_t h = 1469598103934665603ULL;
    const SchurAlgebra& A = *M.A;
    // The algebra's identity is part of the key: a cached resolution keeps
    // A by pointer, so it must never outlive the algebra it was built over.
    h = fnv1a(h, uint64_t(reinterpret_cast<uintptr_t>(M.A)));
    h = fnv1a(h, uint64_t(A.n));
    h = fnv1a(h, uint64_t(A.d));
    h = fnv1a(h, uint64_t(A.p));
    h = fnv1a(h, uint64_t(M.dim));
    for (const auto& w : M.weights)
        for (int x : w) h = fnv1a(h, uint64_t(x) + 0x9e3779b9ULL);
    for (int x : M.wt_begin) h = fnv1a(h, uint64_t(x));
    for (size_t k = 0; k < M.act.val_.size(); ++k) {
        h = fnv1a(h, (uint64_t(M.act.row_[k]) << 32) | uint64_t(uint32_t(M.act.col_[k])));
        h = fnv1a(h, uint64_t(M.act.val_[k]));
    }
    for (size_t o : M.act.off) h = fnv1a(h, uint64_t(o));
    return h;
}

struct ResolutionCache {
    std::mutex mu;
    std::map<uint64_t, std::shared_ptr<ProjResolution>> entries;
};

inline ResolutionCache& resolution_cache() {
    static ResolutionCache c;
    return c;
}

}  // namespace detail_res

// Shared, cached resolution of M with at least len+1 terms (unless finite).
inline std::shared_ptr<ProjResolution> projective_resolution(
    const AModule& M, int len, long long budget = kDefaultBudget) {
    auto& cache = detail_res::resolution_cache();
    uint64_t key = detail_res::module_digest(M);
    std::lock_guard<std::mutex> lk(cache.mu);
    std::shared_ptr<ProjResolution>& slot = cache.entries[key];
    if (!slot) {
        slot = std::make_shared<ProjResolution>();
        slot->A = M.A;
        slot->M = M;
    }
    detail_res::extend_resolution(*slot, len, budget);
    return slot;
}

// Drop all cached resolutions (mainly to bound memory in long sweeps).
inline void clear_resolution_cache() {
    auto& cache = detail_res::resolution_cache();
    std::lock_guard<std::mutex> lk(cache.mu);
    cache.entries.clear();
}

// ---------------------------------------------------------------------------
// The Hom complex and Ext dimensions
// ---------------------------------------------------------------------------

namespace detail_res {

// Offsets of the summand components of Hom(P_q, N) = ⊕_t e_{chi_t} N.
// off[t] is the first coordinate of component t; off.back() is the total.
// nblk[t] is the weight block of N matching chi_t (or -1: empty component).
struct HomLayout {
    std::vector<int> off;
    std::vector<int> nblk;
    int total = 0;
};

inline HomLayout hom_layout(const ProjTerm& P, const AModule& N) {
    HomLayout L;
    int acc = 0;
    for (const auto& chi : P.gen_weight) {
        L.off.push_back(acc);
        int w = N.weight_block(chi);
        L.nblk.push_back(w);
        if (w >= 0) acc += N.wt_begin[w + 1] - N.wt_begin[w];
    }
    L.off.push_back(acc);
    L.total = acc;
    return L;
}

// The map Hom(P_q, N) -> Hom(P_{q+1}, N) induced by d_{q+1}.
inline FpMat hom_differential(const ProjResolution& R, const AModule& N, int q) {
    const ProjTerm& Pq = R.terms[q];
    const ProjTerm& Pn = R.terms[q + 1];
    const FpMat& d = R.maps[q + 1];
    HomLayout Lq = hom_layout(Pq, N);
    HomLayout Ln = hom_layout(Pn, N);
    FpMat D(Ln.total, Lq.total, N.act.p);
    for (int t = 0; t < int(Pn.gen_weight.size()); ++t) {
        if (Ln.nblk[t] < 0) continue;
        int tlo = N.wt_begin[Ln.nblk[t]];
        std::vector<uint8_t> w = d.col(Pn.gen_index[t]);  // d(g_t) in P_q coords
        for (int s = 0; s < int(Pq.gen_weight.size()); ++s) {
            if (Lq.nblk[s] < 0) continue;
            int slo = N.wt_begin[Lq.nblk[s]];
            int shi = N.wt_begin[Lq.nblk[s] + 1];
            for (int b : Pq.summand_basis[s]) {
                uint8_t coeff = w[Pq.pos[s][b]];
                if (!coeff) continue;
                // (Df)(g_t) includes coeff * (b acting on the s-component of f).
                for (size_t k = N.act.off[b]; k < N.act.off[b + 1]; ++k) {
                    int c = N.act.col_[k];
                    if (c < slo || c >= shi) continue;
                    int r = N.act.row_[k];
                    uint8_t& cell = D.at(Ln.off[t] + (r - tlo), Lq.off[s] + (c - slo));
                    cell = uint8_t((cell + coeff * N.act.val_[k]) % N.act.p);
                }
            }
        }
    }
    return D;
}

}  // namespace detail_res

// dim Ext^q(M, N) for q = 0..qmax.
inline ExtTable ext_dims(const AModule& M, const AModule& N, int qmax,
                         long long budget = kDefaultBudget) {
    ExtTable T;
    T.a = module_name(M);
    T.b = module_name(N);
    T.qmax = qmax;
    T.dims.assign(qmax + 1, 0);
    if (M.dim == 0 || N.dim == 0) return T;
    auto R = projective_resolution(M, qmax + 1, budget);
    int L = R->length();
    std::vector<int> h(qmax + 2, 0);
    std::vector<int> rk(qmax + 2, 0);  // rk[q] = rank of Hom(P_q,N) -> Hom(P_{q+1},N)
    for (int q = 0; q <= qmax + 1 && q <= L; ++q)
        h[q] = detail_res::hom_layout(R->terms[q], N).total;
    for (int q = 0; q <= qmax && q + 1 <= L; ++q) {
        FpMat D = detail_res::hom_differential(*R, N, q);
        rk[q] = D.rank();
    }
    for (int q = 0; q <= qmax; ++q) {
        if (q > L) continue;  // finite resolution exhausted: Ext vanishes
        int prev = q == 0 ? 0 : rk[q - 1];
        T.dims[q] = h[q] - rk[q] - prev;
        if (T.dims[q] < 0) throw std::logic_error("ext_dims: negative dimension");
    }
    return T;
}

// ---------------------------------------------------------------------------
// Yoneda products on Ext^*(M, M)
// ---------------------------------------------------------------------------

// A cocycle basis of Ext^q(M, N): vectors in Hom(P_q, N) coordinates that
// are killed by the Hom differential and complete a basis of the image of
// the previous differential to one of the kernel.
inline std::vector<std::vector<uint8_t>> ext_cocycle_basis(
    const AModule& M, const AModule& N, int q, long long budget = kDefaultBudget) {
    auto R = projective_resolution(M, q + 1, budget);
    if (q > R->length()) return {};
    detail_res::HomLayout L = detail_res::hom_layout(R->terms[q], N);
    FpMat ker(L.total, 0, N.act.p);
    if (q + 1 <= R->length()) {
        FpMat D = detail_res::hom_differential(*R, N, q);
        ker = D.nullspace_basis();
    } else {
        ker = FpMat::identity(L.total, N.act.p);
    }
    RrefSpan span(L.total, N.act.p);
    if (q >= 1) {
        FpMat Dprev = detail_res::hom_differential(*R, N, q - 1);
        for (int c = 0; c < Dprev.cols(); ++c) span.insert(Dprev.col(c));
    }
    std::vector<std::vector<uint8_t>> out;
    for (int c = 0; c < ker.cols(); ++c) {
        std::vector<uint8_t> v = ker.col(c);
        if (span.insert(v)) out.push_back(std::move(v));
    }
    return out;
}

namespace detail_res {

// Extend generator images to the full matrix of a map P -> T.
// imgs[t] is the image of the canonical generator of summand t.
inline FpMat extend_by_linearity(const ProjTerm& P, const AModule& T,
                                 const std::vector<std::vector<uint8_t>>& imgs) {
    FpMat out(T.dim, P.mod.dim, T.act.p);
    for (int t = 0; t < int(P.gen_weight.size()); ++t)
        for (int b : P.summand_basis[t])
            out.set_col(P.pos[t][b], T.apply(b, imgs[t]));
    return out;
}

// Solve f * x = rhs where f: src -> tgt is weight preserving and rhs lies in
// the weight block chi of tgt; x is returned in global src coordinates.
inline std::vector<uint8_t> solve_graded(const AModule& src, const AModule& tgt,
                                         const FpMat& f, const std::vector<int>& chi,
                                         const std::vector<uint8_t>& rhs) {
    std::vector<uint8_t> x(src.dim, 0);
    bool rhs_zero = true;
    for (uint8_t v : rhs) rhs_zero = rhs_zero && v == 0;
    if (rhs_zero) return x;
    int sw = src.weight_block(chi);
    int tw = tgt.weight_block(chi);
    if (sw < 0 || tw < 0) throw std::logic_error("solve_graded: missing weight block");
    int slo = src.wt_begin[sw], shi = src.wt_begin[sw + 1];
    int tlo = tgt.wt_begin[tw], thi = tgt.wt_begin[tw + 1];
    FpMat blk(thi - tlo, shi - slo, f.modulus());
    for (int r = tlo; r < thi; ++r)
        for (int c = slo; c < shi; ++c) blk.at(r - tlo, c - slo) = f.at(r, c);
    std::vector<uint8_t> lrhs(rhs.begin() + tlo, rhs.begin() + thi);
    auto sol = blk.solve(lrhs);
    if (!sol) throw std::logic_error("solve_graded: inconsistent system");
    for (int c = slo; c < shi; ++c) x[c] = (*sol)[c - slo];
    return x;
}

// Generator images of the map P_q -> N encoded by Hom-complex coordinates.
inline std::vector<std::vector<uint8_t>> unpack_hom(const ProjResolution& R,
                                                    const AModule& N, int q,
                                                    const std::vector<uint8_t>& vec) {
    const ProjTerm& P = R.terms[q];
    HomLayout L = hom_layout(P, N);
    if (int(vec.size()) != L.total) throw std::invalid_argument("unpack_hom: size");
    std::vector<std::vector<uint8_t>> imgs;
    for (int u = 0; u < int(P.gen_weight.size()); ++u) {
        std::vector<uint8_t> img(N.dim, 0);
        if (L.nblk[u] >= 0) {
            int lo = N.wt_begin[L.nblk[u]];
            int len = N.wt_begin[L.nblk[u] + 1] - lo;
            for (int i = 0; i < len; ++i) img[lo + i] = vec[L.off[u] + i];
        }
        imgs.push_back(std::move(img));
    }
    return imgs;
}

}  // namespace detail_res

// Yoneda product of classes f in Ext^s(M, M) and g in Ext^t(M, M), both given
// in Hom(P_•, M) coordinates; the result is a cocycle in Hom(P_{s+t}, M)
// coordinates (reduce with ext_class_coords to read off the class).
inline std::vector<uint8_t> yoneda_product(const AModule& M,
                                           const std::vector<uint8_t>& f, int s,
                                           const std::vector<uint8_t>& g, int t,
                                           long long budget = kDefaultBudget) {
    auto R = projective_resolution(M, s + t + 1, budget);
    if (s + t > R->length()) return {};
    // psi_0: P_t -> P_0 lifting Phi_g through the augmentation.
    std::vector<std::vector<uint8_t>> g_imgs = detail_res::unpack_hom(*R, M, t, g);
    const ProjTerm& Pt = R->terms[t];
    std::vector<std::vector<uint8_t>> psi_imgs;
    for (int u = 0; u < int(Pt.gen_weight.size()); ++u)
        psi_imgs.push_back(detail_res::solve_graded(R->terms[0].mod, M, R->maps[0],
                                                    Pt.gen_weight[u], g_imgs[u]));
    FpMat psi = detail_res::extend_by_linearity(Pt, R->terms[0].mod, psi_imgs);
    // psi_r: P_{t+r} -> P_r with d_r ∘ psi_r = psi_{r-1} ∘ d_{t+r}.
    for (int r = 1; r <= s; ++r) {
        const ProjTerm& Psrc = R->terms[t + r];
        const ProjTerm& Ptgt = R->terms[r];
        std::vector<std::vector<uint8_t>> imgs;
        for (int u = 0; u < int(Psrc.gen_weight.size()); ++u) {
            std::vector<uint8_t> w = R->maps[t + r].col(Psrc.gen_index[u]);
            std::vector<uint8_t> rhs = detail_res::mat_vec(psi, w);
            imgs.push_back(detail_res::solve_graded(Ptgt.mod, R->terms[r - 1].mod,
                                                    R->maps[r], Psrc.gen_weight[u], rhs));
        }
        psi = detail_res::extend_by_linearity(Psrc, Ptgt.mod, imgs);
    }
    // Composite Phi_f ∘ psi_s at the generators of P_{s+t}.
    std::vector<std::vector<uint8_t>> f_imgs = detail_res::unpack_hom(*R, M, s, f);
    FpMat Phi_f = detail_res::extend_by_linearity(R->terms[s], M, f_imgs);
    const ProjTerm& Pst = R->terms[s + t];
    detail_res::HomLayout L = detail_res::hom_layout(Pst, M);
    std::vector<uint8_t> out(L.total, 0);
    for (int u = 0; u < int(Pst.gen_weight.size()); ++u) {
        if (L.nblk[u] < 0) continue;
        std::vector<uint8_t> gen(Pst.mod.dim, 0);
        gen[Pst.gen_index[u]] = 1;
        std::vector<uint8_t> val =
            detail_res::mat_vec(Phi_f, detail_res::mat_vec(psi, gen));
        int lo = M.wt_begin[L.nblk[u]];
        int len = M.wt_begin[L.nblk[u] + 1] - lo;
        for (int i = 0; i < len; ++i) out[L.off[u] + i] = val[lo + i];
    }
    return out;
}

// Reduce a cocycle at degree q to its class coordinates against a cocycle
// basis (coboundaries quotiented out).  Returns coefficients per basis
// element; throws if the vector does not represent a class in their span.
inline std::vector<uint8_t> ext_class_coords(const AModule& M, const AModule& N, int q,
                                             const std::vector<std::vector<uint8_t>>& basis,
                                             const std::vector<uint8_t>& vec,
                                             long long budget = kDefaultBudget) {
    auto R = projective_resolution(M, q + 1, budget);
    if (q > R->length()) {
        // Past a finite resolution the Hom space is zero: the class is zero,
        // and only an (empty or zero) cocycle can be reduced against it.
        for (uint8_t v : vec)
            if (v) throw std::logic_error("ext_class_coords: nonzero vector past the end");
        return std::vector<uint8_t>(basis.size(), 0);
    }
    detail_res::HomLayout L = detail_res::hom_layout(R->terms[q], N);
    if (int(vec.size()) != L.total)
        throw std::invalid_argument("ext_class_coords: size mismatch");
    int p = N.act.p;
    std::vector<std::vector<uint8_t>> cols(basis.begin(), basis.end());
    if (q >= 1) {
        FpMat Dprev = detail_res::hom_differential(*R, N, q - 1);
        FpMat img = Dprev.image_basis();
        for (int c = 0; c < img.cols(); ++c) cols.push_back(img.col(c));
    }
    FpMat sys(L.total, int(cols.size()), p);
    for (int c = 0; c < int(cols.size()); ++c) sys.set_col(c, cols[c]);
    auto sol = sys.solve(vec);
    if (!sol) throw std::logic_error("ext_class_coords: vector is not a cocycle class");
    return std::vector<uint8_t>(sol->begin(), sol->begin() + basis.size());
}

}  // namespace schurkit
