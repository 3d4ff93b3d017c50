#pragma once

#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <vector>

#include "schurkit/amodule.hpp"
#include "schurkit/littlewood.hpp"

namespace schurkit {

// A module realized as a product of symmetric / exterior factors of V,
// presented as a quotient of the tensor power with a fixed monomial section.
struct Segment {
    bool wedge = false;
    int size = 0;
};

struct FunctorModule {
    AModule mod;
    std::vector<Segment> segs;
    std::vector<std::vector<std::vector<int>>> basis; // idx -> per-segment sorted entries
    std::map<std::vector<std::vector<int>>, int> index;
    FpMat projection; // mod.dim x tensor.dim (tensor-module column order)
};

namespace detail {

inline void enum_sorted_lists(int n, int size, bool strict, std::vector<int>& cur,
                              std::vector<std::vector<int>>& out) {
    if (int(cur.size()) == size) {
        out.push_back(cur);
        return;
    }
    int lo = cur.empty() ? 0 : (strict ? cur.back() + 1 : cur.back());
    for (int v = lo; v < n; ++v) {
        cur.push_back(v);
        enum_sorted_lists(n, size, strict, cur, out);
        cur.pop_back();
    }
}

// Sort a slice; returns 0 if a strict segment has a repeat, else +-1.
inline int normalize_segment(std::vector<int>& part, bool strict) {
    int inv = 0;
    for (size_t a = 0; a < part.size(); ++a)
        for (size_t b = a + 1; b < part.size(); ++b) {
            if (part[a] > part[b]) ++inv;
            if (strict && part[a] == part[b]) return 0;
        }
    std::sort(part.begin(), part.end());
    return strict && (inv & 1) ? -1 : 1;
}

} // namespace detail

// Build the quotient of V^{tensor d} given by the segment shape, with exact
// verification that the projection intertwines the action of every algebra
// basis element.
inline FunctorModule segmented_module(const SchurAlgebra& A, const TensorModule& T,
                                      const std::vector<Segment>& segs, std::string kind = "other",
                                      Partition label = {}) {
    int d = 0;
    for (auto& s : segs) d += s.size;
    if (d != A.d) throw std::invalid_argument("segmented_module: sizes must sum to d");

    FunctorModule F;
    F.segs = segs;
    AModule& M = F.mod;
    M.A = &A;
    M.kind = std::move(kind);
    M.label = std::move(label);

    // Enumerate the basis: per segment sorted (weakly or strictly) lists.
    std::vector<std::vector<std::vector<int>>> per_seg;
    for (auto& s : segs) {
        std::vector<std::vector<int>> lists;
        std::vector<int> cur;
        detail::enum_sorted_lists(A.n, s.size, s.wedge, cur, lists);
        per_seg.push_back(std::move(lists));
    }
    std::map<std::vector<int>, std::vector<std::vector<std::vector<int>>>> groups;
    {
        std::vector<std::vector<std::vector<int>>> all;
        std::vector<std::vector<int>> combo;
        std::function<void(size_t)> rec = [&](size_t s) {
            if (s == segs.size()) {
                all.push_back(combo);
                return;
            }
            for (auto& lst : per_seg[s]) {
                combo.push_back(lst);
                rec(s + 1);
                combo.pop_back();
            }
        };
        rec(0);
        for (auto& c : all) {
            std::vector<int> chi(A.n, 0);
            for (auto& lst : c)
                for (int v : lst) ++chi[v];
            groups[chi].push_back(c);
        }
    }

    M.wt_begin.push_back(0);
    for (auto& [chi, lst] : groups) {
        M.weights.push_back(chi);
        for (auto& c : lst) {
            F.index[c] = int(F.basis.size());
            F.basis.push_back(c);
        }
        M.wt_begin.push_back(int(F.basis.size()));
    }
    M.dim = int(F.basis.size());

    // Projection on tuple encodings: split, normalize each segment.
    std::vector<int> pi_idx(A.vdim, -1);
    std::vector<int> pi_sign(A.vdim, 0);
    for (int e = 0; e < A.vdim; ++e) {
        std::vector<int> tup = A.decode(e);
        std::vector<std::vector<int>> parts;
        int off = 0, sign = 1;
        for (auto& s : segs) {
            std::vector<int> part(tup.begin() + off, tup.begin() + off + s.size);
            off += s.size;
            int sg = detail::normalize_segment(part, s.wedge);
            if (sg == 0) {
                sign = 0;
                break;
            }
            sign *= sg;
            parts.push_back(std::move(part));
        }
        if (sign == 0) continue;
        auto it = F.index.find(parts);
        if (it == F.index.end()) throw std::logic_error("segmented_module: missing basis element");
        pi_idx[e] = it->second;
        pi_sign[e] = sign;
    }

    // Section: concatenate the sorted segment entries.
    auto section_enc = [&](int j) {
        std::vector<int> tup;
        for (auto& lst : F.basis[j]) tup.insert(tup.end(), lst.begin(), lst.end());
        return A.encode(tup);
    };
    std::vector<int> sec(M.dim);
    for (int j = 0; j < M.dim; ++j) sec[j] = section_enc(j);

    F.projection = FpMat(M.dim, T.mod.dim, A.p);
    for (int e = 0; e < A.vdim; ++e)
        if (pi_idx[e] >= 0)
            F.projection.at(pi_idx[e], T.tuple_index[e]) =
                pi_sign[e] > 0 ? 1 : uint8_t(A.p - 1);

    // Action via section; exact well-definedness: pi . op_b == act_b . pi on
    // every tuple, for every algebra basis element.
    ActionBuilder ab(A.dim, M.dim, A.p);
    std::vector<std::map<int, int>> cols(M.dim);
    for (int b = 0; b < A.dim; ++b) {
        for (auto& c : cols) c.clear();
        for (int j = 0; j < M.dim; ++j)
            for (auto [r, v] : A.op[b].col[sec[j]])
                if (pi_idx[r] >= 0) cols[j][pi_idx[r]] += pi_sign[r] * v;
        for (int j = 0; j < M.dim; ++j)
            for (auto [r, v] : cols[j]) {
                int rv = v % A.p;
                if (rv) ab.add(b, r, j, rv);
            }
        // Verification against arbitrary (non-canonical) lifts.
        for (int e = 0; e < A.vdim; ++e) {
            std::map<int, int> lhs;
            for (auto [r, v] : A.op[b].col[e])
                if (pi_idx[r] >= 0) lhs[pi_idx[r]] += pi_sign[r] * v;
            std::map<int, int> rhs;
            if (pi_idx[e] >= 0)
                for (auto [r, v] : cols[pi_idx[e]]) rhs[r] += pi_sign[e] * v;
            for (auto [r, v] : rhs) lhs[r] -= v;
            for (auto [r, v] : lhs)
                if ((v % A.p + A.p) % A.p != 0)
                    throw std::logic_error("segmented_module: projection not equivariant");
        }
    }
    M.act = ab.finish();
    return F;
}

// ----- de Rham / Koszul strand in degree d --------------------------------

struct OmegaModule {
    FunctorModule fm;
};

// Omega^i = S^{d-i} tensor Lambda^i as a quotient of V^{tensor d}.
inline FunctorModule omega_module(const SchurAlgebra& A, const TensorModule& T, int i) {
    if (i < 0 || i > std::min(A.n, A.d)) throw std::invalid_argument("omega_module: bad index");
    std::vector<Segment> segs;
    if (A.d - i > 0) segs.push_back({false, A.d - i});
    if (i > 0) segs.push_back({true, i});
    if (segs.empty()) segs.push_back({false, 0});
    return segmented_module(A, T, segs, "omega");
}

namespace detail {

// Split a segmented basis element of Omega^i into (monomial, wedge) parts.
inline std::pair<std::vector<int>, std::vector<int>> omega_parts(const FunctorModule& F, int j) {
    std::vector<int> m, w;
    for (size_t s = 0; s < F.segs.size(); ++s) {
        auto& lst = F.basis[j][s];
        if (F.segs[s].wedge)
            w = lst;
        else
            m = lst;
    }
    return {m, w};
}

inline int omega_lookup(const FunctorModule& F, const std::vector<int>& m,
                        const std::vector<int>& w) {
    std::vector<std::vector<int>> key;
    for (auto& s : F.segs) key.push_back(s.wedge ? w : m);
    auto it = F.index.find(key);
    return it == F.index.end() ? -1 : it->second;
}

} // namespace detail

// d(m tensor w) = sum over variables v in m of mult_v(m) (m minus v) tensor (v wedge w).
inline ModuleMap de_rham(const FunctorModule& src, const FunctorModule& tgt) {
    const SchurAlgebra& A = *src.mod.A;
    Fp f(A.p);
    FpMat mat(tgt.mod.dim, src.mod.dim, A.p);
    for (int j = 0; j < src.mod.dim; ++j) {
        auto [m, w] = detail::omega_parts(src, j);
        for (size_t t = 0; t < m.size(); ++t) {
            if (t > 0 && m[t] == m[t - 1]) continue;
            int v = m[t];
            int mult = int(std::count(m.begin(), m.end(), v)) % A.p;
            if (!mult) continue;
            if (std::find(w.begin(), w.end(), v) != w.end()) continue;
            std::vector<int> m2 = m;
            m2.erase(m2.begin() + t);
            std::vector<int> w2 = w;
            int less = int(std::count_if(w.begin(), w.end(), [&](int u) { return u < v; }));
            w2.insert(w2.begin() + less, v);
            int row = detail::omega_lookup(tgt, m2, w2);
            if (row < 0) throw std::logic_error("de_rham: missing target basis element");
            uint8_t coef = uint8_t(mult);
            if (less & 1) coef = f.neg(coef);
            mat.at(row, j) = f.add(mat.at(row, j), coef);
        }
    }
    return make_module_map(src.mod, tgt.mod, std::move(mat));
}

// kappa(m tensor w) = alternating sum over wedge entries moved into the monomial.
inline ModuleMap koszul(const FunctorModule& src, const FunctorModule& tgt) {
    const SchurAlgebra& A = *src.mod.A;
    Fp f(A.p);
    FpMat mat(tgt.mod.dim, src.mod.dim, A.p);
    for (int j = 0; j < src.mod.dim; ++j) {
        auto [m, w] = detail::omega_parts(src, j);
        for (size_t t = 0; t < w.size(); ++t) {
            int v = w[t];
            std::vector<int> m2 = m;
            m2.insert(std::lower_bound(m2.begin(), m2.end(), v), v);
            std::vector<int> w2 = w;
            w2.erase(w2.begin() + t);
            int row = detail::omega_lookup(tgt, m2, w2);
            if (row < 0) throw std::logic_error("koszul: missing target basis element");
            uint8_t coef = 1;
            if (t & 1) coef = f.neg(coef);
            mat.at(row, j) = f.add(mat.at(row, j), coef);
        }
    }
    return make_module_map(src.mod, tgt.mod, std::move(mat));
}

// ----- the hook family at d = p --------------------------------------------

// All the strand data over one algebra: omegas, both differentials, the
// costandard kernels S_i, the simples F_i, and the standards W_i.
struct HookContext {
    const SchurAlgebra* A = nullptr;
    int qmax = 0;
    TensorModule tensor;
    std::vector<FunctorModule> omega; // 0..qmax
    std::vector<FpMat> dmat;          // i: omega[i] -> omega[i+1], 0..qmax-1
    std::vector<FpMat> kmat;          // i: omega[i] -> omega[i-1], 1..qmax (index i)
    std::vector<SubModule> S;         // 0..qmax, inside omega[i]
    std::vector<FpMat> dS;            // i: S[i] -> S[i+1], 0..qmax-1
    std::vector<SubModule> F;         // 0..qmax-1, inside S[i].mod
    std::vector<AModule> W;           // 0..qmax-1
};

inline HookContext hook_context(const SchurAlgebra& A) {
    if (A.d != A.p)
        throw std::invalid_argument("hook_context: requires degree equal to the characteristic");

    HookContext C;
    C.A = &A;
    C.qmax = std::min(A.n, A.d);
    C.tensor = tensor_power_module(A);
    for (int i = 0; i <= C.qmax; ++i) C.omega.push_back(omega_module(A, C.tensor, i));
    for (int i = 0; i < C.qmax; ++i) C.dmat.push_back(de_rham(C.omega[i], C.omega[i + 1]).mat);
    C.kmat.push_back(FpMat(0, 0, A.p)); // kappa_0 unused
    for (int i = 1; i <= C.qmax; ++i) C.kmat.push_back(koszul(C.omega[i], C.omega[i - 1]).mat);

    // Strand convention gate: d d = 0, kappa kappa = 0, kappa d + d kappa = 0.
    for (int i = 0; i + 1 < C.qmax; ++i)
        if (!(C.dmat[i + 1] * C.dmat[i]).is_zero())
            throw std::logic_error("hook_context: de Rham differential does not square to zero");
    for (int i = 2; i <= C.qmax; ++i)
        if (!(C.kmat[i - 1] * C.kmat[i]).is_zero())
            throw std::logic_error("hook_context: Koszul differential does not square to zero");
    for (int i = 1; i < C.qmax; ++i)
        if (!(C.kmat[i + 1] * C.dmat[i] + C.dmat[i - 1] * C.kmat[i]).is_zero())
            throw std::logic_error("hook_context: differentials do not anticommute");
    // At the ends of the ladder one of the two compositions is absent and the
    // remaining one must vanish on its own (the strand degree is divisible
    // by the characteristic).
    if (C.qmax >= 1) {
        if (!(C.kmat[1] * C.dmat[0]).is_zero())
            throw std::logic_error("hook_context: strand relation fails at the bottom");
        if (!(C.dmat[C.qmax - 1] * C.kmat[C.qmax]).is_zero())
            throw std::logic_error("hook_context: strand relation fails at the top");
    }

    // Costandard hooks: S_i = ker(kappa_i), with S_0 the whole of Omega^0.
    for (int i = 0; i <= C.qmax; ++i) {
        Partition hook;
        if (i <= C.qmax - 1 && A.d - i >= 1) {
            hook.push_back(i + 1);
            for (int t = 0; t < A.d - i - 1; ++t) hook.push_back(1);
        }
        FpMat span = i == 0 ? FpMat::identity(C.omega[0].mod.dim, A.p)
                            : C.kmat[i].nullspace_basis();
        C.S.push_back(submodule(C.omega[i].mod, span, "costandard", hook));
        if (i <= C.qmax - 1) {
            SymPolynomial expect = char_costandard(C.S[i].mod.label, A.n);
            if (!(C.S[i].mod.weight_character() == expect))
                throw std::logic_error("hook_context: costandard character mismatch");
        }
    }
    if (C.S[C.qmax].mod.dim != 0)
        throw std::logic_error("hook_context: top Koszul kernel should vanish");

    // d restricts to S_i -> S_{i+1}.
    for (int i = 0; i < C.qmax; ++i) {
        FpMat big = C.dmat[i] * C.S[i].embed; // omega[i+1] coords
        FpMat crd = C.S[i + 1].coords * big;
        if (!(C.S[i + 1].embed * crd == big))
            throw std::logic_error("hook_context: de Rham does not restrict to the kernels");
        C.dS.push_back(std::move(crd));
    }

    // F_i = ker(d: S_i -> S_{i+1}); W_i = dual of S_i.
    for (int i = 0; i < C.qmax; ++i) {
        Partition hook = C.S[i].mod.label;
        C.F.push_back(submodule(C.S[i].mod, C.dS[i].nullspace_basis(), "simple", hook));
        AModule w = kuhn_dual(C.S[i].mod);
        w.kind = "standard";
        w.label = hook;
        C.W.push_back(std::move(w));
    }

    return C;
}

inline AModule hook_costandard(const SchurAlgebra& A, int i) {
    HookContext C = hook_context(A);
    if (i < 0 || i >= C.qmax) throw std::invalid_argument("hook_costandard: index out of range");
    return C.S[i].mod;
}

inline AModule hook_simple(const SchurAlgebra& A, int i) {
    HookContext C = hook_context(A);
    if (i < 0 || i >= C.qmax) throw std::invalid_argument("hook_simple: index out of range");
    return C.F[i].mod;
}

inline AModule hook_standard(const SchurAlgebra& A, int i) {
    HookContext C = hook_context(A);
    if (i < 0 || i >= C.qmax) throw std::invalid_argument("hook_standard: index out of range");
    return C.W[i];
}

// ----- general costandard / simple -----------------------------------------

// Costandard module for any partition with at most n columns: the image of
// the exterior-power embedding, slot permutation, and symmetric-power
// projection, with the character identity asserted as a postcondition.
inline AModule general_costandard(const SchurAlgebra& A, const Partition& lam) {
    if (weight(lam) != A.d) throw std::invalid_argument("general_costandard: wrong degree");
    if (!lam.empty() && lam[0] > A.n)
        throw std::invalid_argument("general_costandard: more columns than n");

    TensorModule T = tensor_power_module(A);
    Partition lamc = conjugate(lam);

    // Target: tensor of symmetric powers along the conjugate rows.
    std::vector<Segment> segs;
    for (int r : lamc) segs.push_back({false, r});
    if (segs.empty()) segs.push_back({false, 0});
    FunctorModule Q = segmented_module(A, T, segs);

    // Slot permutation: cells of the diagram, row-major order to column-major
    // order. Slot k of the source lives at row-major cell k; it must land at
    // the tensor position of the same cell in column-major enumeration.
    std::vector<std::pair<int, int>> row_major, col_major;
    for (int r = 0; r < int(lam.size()); ++r)
        for (int c = 0; c < lam[r]; ++c) row_major.push_back({r, c});
    for (int c = 0; c < (lam.empty() ? 0 : lam[0]); ++c)
        for (int r = 0; r < lamc[c]; ++r) col_major.push_back({r, c});
    std::map<std::pair<int, int>, int> col_pos;
    for (size_t k = 0; k < col_major.size(); ++k) col_pos[col_major[k]] = int(k);

    // Wedge-tuple basis of the source tensor of exterior powers.
    std::vector<std::vector<std::vector<int>>> wedge_lists;
    for (int r : lam) {
        std::vector<std::vector<int>> lists;
        std::vector<int> cur;
        detail::enum_sorted_lists(A.n, r, true, cur, lists);
        wedge_lists.push_back(std::move(lists));
    }
    std::vector<std::vector<int>> combos; // flattened choice index per row
    {
        std::vector<int> cur(lam.size(), 0);
        std::function<void(size_t)> rec = [&](size_t r) {
            if (r == lam.size()) {
                combos.push_back(cur);
                return;
            }
            for (int c = 0; c < int(wedge_lists[r].size()); ++c) {
                cur[r] = c;
                rec(r + 1);
            }
        };
        rec(0);
        if (lam.empty()) combos.push_back({});
    }

    Fp f(A.p);
    FpMat span(Q.mod.dim, int(combos.size()), A.p);
    for (size_t ci = 0; ci < combos.size(); ++ci) {
        // Antisymmetrize each row, permute slots, project.
        // Iterate over products of row permutations via odometer on
        // permutation ranks; rows are small (size <= n <= 5).
        std::vector<std::vector<int>> row_vals;
        for (size_t r = 0; r < lam.size(); ++r)
            row_vals.push_back(wedge_lists[r][combos[ci][r]]);
        std::vector<std::vector<std::pair<std::vector<int>, int>>> signed_perms;
        for (auto& vals : row_vals) {
            std::vector<int> idx(vals.size());
            for (size_t t = 0; t < idx.size(); ++t) idx[t] = int(t);
            std::vector<std::pair<std::vector<int>, int>> lst;
            std::sort(idx.begin(), idx.end());
            do {
                int inv = 0;
                for (size_t a = 0; a < idx.size(); ++a)
                    for (size_t b = a + 1; b < idx.size(); ++b)
                        if (idx[a] > idx[b]) ++inv;
                std::vector<int> arranged(vals.size());
                for (size_t t = 0; t < vals.size(); ++t) arranged[t] = vals[idx[t]];
                lst.push_back({arranged, (inv & 1) ? -1 : 1});
            } while (std::next_permutation(idx.begin(), idx.end()));
            signed_perms.push_back(std::move(lst));
        }
        std::vector<int> pick(lam.size(), 0);
        std::vector<long long> acc(Q.mod.dim, 0);
        std::function<void(size_t, int)> rec = [&](size_t r, int sign) {
            if (r == lam.size()) {
                // Assemble the permuted tuple and project.
                std::vector<int> tup(row_major.size());
                int k = 0;
                for (size_t rr = 0; rr < lam.size(); ++rr) {
                    auto& arranged = signed_perms[rr][pick[rr]].first;
                    for (int cc = 0; cc < lam[rr]; ++cc, ++k)
                        tup[col_pos.at({int(rr), cc})] = arranged[cc];
                }
                // Project into Q: sort every symmetric segment (sign +1).
                std::vector<std::vector<int>> parts;
                int off = 0;
                for (auto& s : Q.segs) {
                    std::vector<int> part(tup.begin() + off, tup.begin() + off + s.size);
                    off += s.size;
                    std::sort(part.begin(), part.end());
                    parts.push_back(std::move(part));
                }
                acc[Q.index.at(parts)] += sign;
                return;
            }
            for (size_t c = 0; c < signed_perms[r].size(); ++c) {
                pick[r] = int(c);
                rec(r + 1, sign * signed_perms[r][c].second);
            }
        };
        if (lam.empty()) {
            acc.assign(Q.mod.dim, 0);
            if (Q.mod.dim) acc[0] = 1;
        } else {
            rec(0, 1);
        }
        for (int i = 0; i < Q.mod.dim; ++i) {
            long long v = acc[i] % A.p;
            if (v < 0) v += A.p;
            span.at(i, int(ci)) = uint8_t(v);
        }
    }

    SubModule S = submodule(Q.mod, span, "costandard", lam);
    SymPolynomial expect = char_costandard(lam, A.n);
    if (!(S.mod.weight_character() == expect))
        throw std::logic_error("general_costandard: character mismatch");
    return S.mod;
}

inline AModule general_standard(const SchurAlgebra& A, const Partition& lam) {
    AModule S = general_costandard(A, lam);
    AModule W = kuhn_dual(S);
    W.kind = "standard";
    return W;
}

// Simple module: image of the unique (up to scalar) map W_lam -> S_lam.
inline AModule simple_general(const SchurAlgebra& A, const Partition& lam) {
    AModule S = general_costandard(A, lam);
    AModule W = kuhn_dual(S);
    W.kind = "standard";
    auto homs = hom_space(W, S);
    if (homs.size() != 1)
        throw std::logic_error("simple_general: hom space is not one-dimensional");
    SubModule F = submodule(S, homs[0].image_basis(), "simple", lam);
    return F.mod;
}

// ----- multilinear-stratum dimension of a hook simple ----------------------

// dim of the (1,...,1) weight space of F_i over n = p variables, computed on
// the multilinear strata of the strand only: bases are the i-subsets of the
// variables, and both differentials act by signed insertion/removal.
inline long long simple_dim_sym(int p, int i) {
    if (p < 2 || i < 0 || i >= p) throw std::out_of_range("simple_dim_sym: bad arguments");
    auto subsets = [&](int k) {
        std::vector<std::vector<int>> out;
        std::vector<int> cur;
        detail::enum_sorted_lists(p, k, true, cur, out);
        return out;
    };
    auto level_i = subsets(i);
    std::map<std::vector<int>, int> idx_i;
    for (size_t t = 0; t < level_i.size(); ++t) idx_i[level_i[t]] = int(t);

    // d: level i -> level i+1; kappa: level i -> level i-1.
    auto build = [&](int from, int to, bool rham) {
        auto src = subsets(from), dst = subsets(to);
        std::map<std::vector<int>, int> di;
        for (size_t t = 0; t < dst.size(); ++t) di[dst[t]] = int(t);
        FpMat m(int(dst.size()), int(src.size()), p);
        Fp f(p);
        for (size_t j = 0; j < src.size(); ++j) {
            const auto& w = src[j];
            if (rham) {
                for (int v = 0; v < p; ++v) {
                    if (std::find(w.begin(), w.end(), v) != w.end()) continue;
                    std::vector<int> w2 = w;
                    int less = int(std::count_if(w.begin(), w.end(),
                                                 [&](int u) { return u < v; }));
                    w2.insert(w2.begin() + less, v);
                    uint8_t c = (less & 1) ? f.neg(1) : 1;
                    m.at(di.at(w2), int(j)) = f.add(m.at(di.at(w2), int(j)), c);
                }
            } else {
                for (size_t t = 0; t < w.size(); ++t) {
                    std::vector<int> w2 = w;
                    w2.erase(w2.begin() + t);
                    uint8_t c = (t & 1) ? f.neg(1) : 1;
                    m.at(di.at(w2), int(j)) = f.add(m.at(di.at(w2), int(j)), c);
                }
            }
        }
        return m;
    };

    FpMat stacked(0, int(level_i.size()), p);
    if (i + 1 <= p) {
        FpMat d = build(i, i + 1, true);
        stacked = d;
    }
    if (i >= 1) {
        FpMat k = build(i, i - 1, false);
        stacked = stacked.rows() ? FpMat::vstack(stacked, k) : k;
    }
    if (stacked.rows() == 0) return int(level_i.size());
    return int(level_i.size()) - stacked.rank();
}

} // namespace schurkit
