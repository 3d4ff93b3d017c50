#pragma once

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "schurkit/fp.hpp"
#include "schurkit/fpmatrix.hpp"

namespace schurkit {

// Sparse algebra element: (basis index, coefficient) pairs, index-sorted.
using AlgElt = std::vector<std::pair<int, uint8_t>>;

// The Schur algebra S(n,d) over GF(p), realized as the permutation-invariant
// operators on V^{tensor d}, V = k^n. Basis: orbits of pairs of d-tuples
// under the simultaneous place permutation; an orbit is stored as the sorted
// sequence of its d pair codes i*n+j, which is the lexicographically least
// representative.
class SchurAlgebra {
  public:
    int n, d, p;
    Fp f;
    int vdim; // n^d
    int dim;  // binomial(n^2+d-1, d)

    std::vector<std::vector<uint16_t>> basis;  // sorted pair codes
    std::vector<std::vector<int>> rowwt;       // composition of d into n parts
    std::vector<std::vector<int>> colwt;
    std::vector<int> canon_row, canon_col;     // encoded canonical position
    std::vector<SpMat> op;                     // operator on V^{tensor d}
    std::vector<int> idempotents;              // basis indices with i == j

    SchurAlgebra(int n_, int d_, int p_) : n(n_), d(d_), p(p_), f(p_) {
        if (n < 1 || d < 0) throw std::invalid_argument("SchurAlgebra: bad n or d");
        double sz = 1;
        for (int t = 0; t < d; ++t) sz *= n;
        if (sz > 1e6) throw std::length_error("SchurAlgebra: n^d exceeds resource guard");
        vdim = 1;
        for (int t = 0; t < d; ++t) vdim *= n;
        build_basis();
        build_operators();
    }

    int encode(const std::vector<int>& tup) const {
        int e = 0;
        for (int t = 0; t < d; ++t) e = e * n + tup[t];
        return e;
    }
    std::vector<int> decode(int e) const {
        std::vector<int> tup(d);
        for (int t = d - 1; t >= 0; --t) {
            tup[t] = e % n;
            e /= n;
        }
        return tup;
    }

    int index_of(const std::vector<uint16_t>& codes) const {
        auto it = index_.find(codes);
        return it == index_.end() ? -1 : it->second;
    }

    // Basis index whose orbit contains matrix position (r, c), or -1 when
    // (r, c) is not the canonical position of its orbit.
    int index_at_canonical(int r, int c) const {
        auto it = canon_pos_.find(uint64_t(r) * vdim + c);
        return it == canon_pos_.end() ? -1 : it->second;
    }

    const std::vector<int>& idem_weight(int k) const { return rowwt[idempotents[k]]; }

    int idempotent_of_weight(const std::vector<int>& chi) const {
        std::vector<uint16_t> codes;
        for (int t = 0; t < n; ++t)
            for (int c = 0; c < chi[t]; ++c) codes.push_back(uint16_t(t * n + t));
        std::sort(codes.begin(), codes.end());
        return index_of(codes);
    }

    int transpose_elt(int b) const {
        std::vector<uint16_t> codes(basis[b]);
        for (auto& c : codes) c = uint16_t((c % n) * n + c / n);
        std::sort(codes.begin(), codes.end());
        return index_of(codes);
    }

    // Structure constants: xi_a xi_b = sum_e sc(a,b)[e] xi_e. Computed lazily
    // per row-weight class the first time any product in it is requested, or
    // all at once by ensure_all_sc (what the disk cache stores).
    const AlgElt& sc(int a, int b) const {
        ensure_sc_row(a);
        auto& row = sc_rows_[a];
        auto it = std::lower_bound(row.begin(), row.end(), b,
                                   [](const auto& e, int v) { return e.first < v; });
        if (it == row.end() || it->first != b) return empty_;
        return it->second;
    }

    AlgElt mul_elem(const AlgElt& x, const AlgElt& y) const {
        std::map<int, int> acc;
        for (auto [a, va] : x)
            for (auto [b, vb] : y)
                for (auto [e, c] : sc(a, b)) acc[e] += int(va) * vb % p * c;
        AlgElt out;
        for (auto [e, v] : acc) {
            uint8_t r = f.reduce(v);
            if (r) out.push_back({e, r});
        }
        return out;
    }

    AlgElt unit() const {
        AlgElt u;
        for (int e : idempotents) u.push_back({e, 1});
        std::sort(u.begin(), u.end());
        return u;
    }

    void ensure_all_sc() const {
        for (int a = 0; a < dim; ++a) ensure_sc_row(a);
    }

    size_t sc_triple_count() const {
        size_t t = 0;
        for (auto& row : sc_rows_)
            for (auto& [b, terms] : row) t += terms.size();
        return t;
    }

    // --- binary structure constant cache ---------------------------------

    static std::string cache_dir_from_env() {
        const char* env = std::getenv("SCHURKIT_CACHE");
        return env && *env ? env : "./.schurkit-cache";
    }

    std::string cache_path(const std::string& dir) const {
        return dir + "/sc_n" + std::to_string(n) + "_d" + std::to_string(d) + "_p" +
               std::to_string(p) + ".bin";
    }

    bool load_cache(const std::string& dir) {
        FILE* h = std::fopen(cache_path(dir).c_str(), "rb");
        if (!h) return false;
        char magic[5];
        uint32_t hdr[4];
        if (std::fread(magic, 1, 5, h) != 5 || std::memcmp(magic, "SCHK1", 5) != 0 ||
            std::fread(hdr, 4, 4, h) != 4 || int(hdr[0]) != n || int(hdr[1]) != d ||
            int(hdr[2]) != p || int(hdr[3]) != dim) {
            std::fclose(h);
            return false;
        }
        std::vector<std::map<int, AlgElt>> rows(dim);
        for (;;) {
            uint32_t abe[3];
            uint16_t coef;
            if (std::fread(abe, 4, 3, h) != 3) break;
            if (std::fread(&coef, 2, 1, h) != 1) {
                std::fclose(h);
                return false;
            }
            if (abe[0] >= uint32_t(dim) || abe[1] >= uint32_t(dim) || abe[2] >= uint32_t(dim)) {
                std::fclose(h);
                return false;
            }
            rows[abe[0]][int(abe[1])].push_back({int(abe[2]), uint8_t(coef % p)});
        }
        std::fclose(h);
        sc_rows_.assign(dim, {});
        sc_done_.assign(dim, 1);
        for (int a = 0; a < dim; ++a)
            for (auto& [b, terms] : rows[a]) sc_rows_[a].push_back({b, terms});
        return true;
    }

    void write_cache(const std::string& dir) const {
        ensure_all_sc();
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        if (ec) return;
        std::string tmp = cache_path(dir) + ".tmp";
        FILE* h = std::fopen(tmp.c_str(), "wb");
        if (!h) return;
        std::fwrite("SCHK1", 1, 5, h);
        uint32_t hdr[4] = {uint32_t(n), uint32_t(d), uint32_t(p), uint32_t(dim)};
        std::fwrite(hdr, 4, 4, h);
        for (int a = 0; a < dim; ++a)
            for (auto& [b, terms] : sc_rows_[a])
                for (auto [e, c] : terms) {
                    uint32_t abe[3] = {uint32_t(a), uint32_t(b), uint32_t(e)};
                    uint16_t coef = c;
                    std::fwrite(abe, 4, 3, h);
                    std::fwrite(&coef, 2, 1, h);
                }
        std::fclose(h);
        std::rename(tmp.c_str(), cache_path(dir).c_str());
    }

    // Basis indices grouped by row weight, for product enumeration.
    const std::vector<int>& group_by_rowwt(const std::vector<int>& chi) const {
        auto it = rowwt_group_.find(chi);
        static const std::vector<int> none;
        return it == rowwt_group_.end() ? none : it->second;
    }

  private:
    std::map<std::vector<uint16_t>, int> index_;
    std::unordered_map<uint64_t, int> canon_pos_;
    std::map<std::vector<int>, std::vector<int>> rowwt_group_;
    mutable std::vector<std::vector<std::pair<int, AlgElt>>> sc_rows_;
    mutable std::vector<char> sc_done_;
    AlgElt empty_;

    void build_basis() {
        int nn = n * n;
        std::vector<uint16_t> cur;
        auto rec = [&](auto&& self, int rem, int minc) -> void {
            if (rem == 0) {
                int idx = int(basis.size());
                basis.push_back(cur);
                index_[cur] = idx;
                return;
            }
            for (int c = minc; c < nn; ++c) {
                cur.push_back(uint16_t(c));
                self(self, rem - 1, c);
                cur.pop_back();
            }
        };
        rec(rec, d, 0);
        dim = int(basis.size());

        rowwt.resize(dim);
        colwt.resize(dim);
        canon_row.resize(dim);
        canon_col.resize(dim);
        for (int e = 0; e < dim; ++e) {
            std::vector<int> rw(n, 0), cw(n, 0), rt(d), ct(d);
            for (int t = 0; t < d; ++t) {
                int i = basis[e][t] / n, j = basis[e][t] % n;
                ++rw[i];
                ++cw[j];
                rt[t] = i;
                ct[t] = j;
            }
            rowwt[e] = rw;
            colwt[e] = cw;
            canon_row[e] = encode(rt);
            canon_col[e] = encode(ct);
            canon_pos_[uint64_t(canon_row[e]) * vdim + canon_col[e]] = e;
            rowwt_group_[rw].push_back(e);
            bool diag = true;
            for (int t = 0; t < d; ++t)
                if (basis[e][t] / n != basis[e][t] % n) diag = false;
            if (diag) idempotents.push_back(e);
        }
        sc_rows_.assign(dim, {});
        sc_done_.assign(dim, 0);
    }

    void build_operators() {
        op.reserve(dim);
        for (int e = 0; e < dim; ++e) {
            SpMat m(vdim, vdim, p);
            std::vector<uint16_t> perm = basis[e];
            do {
                std::vector<int> rt(d), ct(d);
                for (int t = 0; t < d; ++t) {
                    rt[t] = perm[t] / n;
                    ct[t] = perm[t] % n;
                }
                m.col[encode(ct)].push_back({encode(rt), 1});
            } while (std::next_permutation(perm.begin(), perm.end()));
            op.push_back(std::move(m));
        }
    }

    // All products xi_a xi_b for this a: compose the sparse operators and
    // read coefficients at canonical orbit positions only.
    void ensure_sc_row(int a) const {
        if (sc_done_[a]) return;
        sc_done_[a] = 1;
        auto git = rowwt_group_.find(colwt[a]);
        if (git == rowwt_group_.end()) return;
        const SpMat& A = op[a];
        for (int b : git->second) {
            const SpMat& B = op[b];
            std::unordered_map<uint64_t, uint32_t> acc;
            for (int c = 0; c < B.cols; ++c)
                for (auto [m, vb] : B.col[c])
                    for (auto [r, va] : A.col[m]) acc[uint64_t(r) * vdim + c] += uint32_t(va) * vb;
            std::map<int, uint8_t> terms;
            for (auto [pos, v] : acc) {
                uint8_t red = uint8_t(v % p);
                if (!red) continue;
                auto it = canon_pos_.find(pos);
                if (it != canon_pos_.end()) terms[it->second] = red;
            }
            if (terms.empty()) continue;
            AlgElt elt(terms.begin(), terms.end());
            sc_rows_[a].push_back({b, std::move(elt)});
        }
        std::sort(sc_rows_[a].begin(), sc_rows_[a].end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
    }
};

// Weight idempotents as (composition, basis index) pairs.
inline std::vector<std::pair<std::vector<int>, int>> weight_idempotents(const SchurAlgebra& A) {
    std::vector<std::pair<std::vector<int>, int>> out;
    for (int e : A.idempotents) out.push_back({A.rowwt[e], e});
    return out;
}

// Divided power elements: for each source weight chi, the orbit moving r
// boxes across one wall. Together with the weight idempotents these give the
// classical generator supply; they are used to cut solver work, never
// trusted for correctness.
inline std::vector<int> hyperalgebra_generators(const SchurAlgebra& A) {
    std::vector<int> gens = A.idempotents;
    for (auto& [chi, idx] : weight_idempotents(A)) {
        for (int i = 0; i + 1 < A.n; ++i) {
            for (int r = 1; r <= A.d; ++r) {
                if (chi[i + 1] >= r) { // raise: r boxes i+1 -> i
                    std::vector<uint16_t> codes;
                    for (int t = 0; t < A.n; ++t) {
                        int keep = chi[t] - (t == i + 1 ? r : 0);
                        for (int c = 0; c < keep; ++c) codes.push_back(uint16_t(t * A.n + t));
                    }
                    for (int c = 0; c < r; ++c) codes.push_back(uint16_t(i * A.n + (i + 1)));
                    std::sort(codes.begin(), codes.end());
                    gens.push_back(A.index_of(codes));
                }
                if (chi[i] >= r) { // lower: r boxes i -> i+1
                    std::vector<uint16_t> codes;
                    for (int t = 0; t < A.n; ++t) {
                        int keep = chi[t] - (t == i ? r : 0);
                        for (int c = 0; c < keep; ++c) codes.push_back(uint16_t(t * A.n + t));
                    }
                    for (int c = 0; c < r; ++c) codes.push_back(uint16_t((i + 1) * A.n + i));
                    std::sort(codes.begin(), codes.end());
                    gens.push_back(A.index_of(codes));
                }
            }
        }
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (int g : gens)
        if (g < 0) throw std::logic_error("hyperalgebra_generators: missing basis element");
    return gens;
}

// e = sum of weight idempotents supported on the first n coordinates of the
// m-column algebra.
inline AlgElt truncation_idempotent(const SchurAlgebra& Am, int n) {
    if (n >= Am.n || n < 1) throw std::invalid_argument("truncation_idempotent: need 1 <= n < m");
    AlgElt e;
    for (int idx : Am.idempotents) {
        bool supported = true;
        for (int t = n; t < Am.n; ++t)
            if (Am.rowwt[idx][t]) supported = false;
        if (supported) e.push_back({idx, 1});
    }
    return e;
}

// Basis indices of e A_m e: orbits whose row and column tuples only use the
// first n symbols. Sorted pair codes relabel verbatim into S(n,d), giving
// the canonical bijection onto its basis.
inline std::vector<int> truncated_subalgebra_basis(const SchurAlgebra& Am, int n) {
    std::vector<int> out;
    for (int e = 0; e < Am.dim; ++e) {
        bool ok = true;
        for (uint16_t c : Am.basis[e])
            if (c / Am.n >= n || c % Am.n >= n) ok = false;
        if (ok) out.push_back(e);
    }
    return out;
}

inline int relabel_into_small(const SchurAlgebra& Am, int e, const SchurAlgebra& An) {
    std::vector<uint16_t> codes;
    for (uint16_t c : Am.basis[e])
        codes.push_back(uint16_t((c / Am.n) * An.n + (c % Am.n)));
    std::sort(codes.begin(), codes.end());
    return An.index_of(codes);
}

} // namespace schurkit
