#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fp.hpp"

namespace schurkit {

// Dense matrix over GF(p), row-major uint8_t entries in [0,p).
// Accumulation uses uint32_t; with p <= 251 up to ~65k terms are safe,
// far above any dimension this library reaches.
class FpMat {
  public:
    FpMat() : rows_(0), cols_(0), p_(2) {}
    FpMat(int rows, int cols, int p) : rows_(rows), cols_(cols), p_(p), a_(size_t(rows) * cols, 0) {}

    static FpMat identity(int n, int p) {
        FpMat m(n, n, p);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int modulus() const { return p_; }

    uint8_t& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    uint8_t at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }
    uint8_t* row(int r) { return a_.data() + size_t(r) * cols_; }
    const uint8_t* row(int r) const { return a_.data() + size_t(r) * cols_; }

    bool is_zero() const {
        for (uint8_t v : a_)
            if (v) return false;
        return true;
    }

    bool operator==(const FpMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && a_ == o.a_;
    }

    FpMat operator+(const FpMat& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        FpMat r(rows_, cols_, p_);
        for (size_t i = 0; i < a_.size(); ++i) {
            int s = a_[i] + o.a_[i];
            r.a_[i] = uint8_t(s >= p_ ? s - p_ : s);
        }
        return r;
    }
    FpMat operator-(const FpMat& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        FpMat r(rows_, cols_, p_);
        for (size_t i = 0; i < a_.size(); ++i) {
            int s = a_[i] - o.a_[i];
            r.a_[i] = uint8_t(s < 0 ? s + p_ : s);
        }
        return r;
    }
    FpMat operator*(const FpMat& o) const {
        assert(cols_ == o.rows_ && p_ == o.p_);
        FpMat r(rows_, o.cols_, p_);
        std::vector<uint32_t> acc(o.cols_);
        for (int i = 0; i < rows_; ++i) {
            std::fill(acc.begin(), acc.end(), 0u);
            const uint8_t* ri = row(i);
            for (int k = 0; k < cols_; ++k) {
                uint32_t v = ri[k];
                if (!v) continue;
                const uint8_t* rk = o.row(k);
                for (int j = 0; j < o.cols_; ++j) acc[j] += v * rk[j];
            }
            uint8_t* out = r.row(i);
            for (int j = 0; j < o.cols_; ++j) out[j] = uint8_t(acc[j] % p_);
        }
        return r;
    }

    std::vector<uint8_t> mul_vec(const std::vector<uint8_t>& x) const {
        assert(int(x.size()) == cols_);
        std::vector<uint8_t> y(rows_);
        for (int i = 0; i < rows_; ++i) {
            const uint8_t* ri = row(i);
            uint32_t acc = 0;
            for (int k = 0; k < cols_; ++k) acc += uint32_t(ri[k]) * x[k];
            y[i] = uint8_t(acc % p_);
        }
        return y;
    }

    FpMat scale(uint8_t c) const {
        FpMat r(rows_, cols_, p_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = uint8_t(a_[i] * c % p_);
        return r;
    }

    FpMat transpose() const {
        FpMat r(cols_, rows_, p_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    FpMat col_slice(const std::vector<int>& idx) const {
        FpMat r(rows_, int(idx.size()), p_);
        for (int i = 0; i < rows_; ++i)
            for (size_t j = 0; j < idx.size(); ++j) r.at(i, int(j)) = at(i, idx[j]);
        return r;
    }
    FpMat row_slice(const std::vector<int>& idx) const {
        FpMat r(int(idx.size()), cols_, p_);
        for (size_t i = 0; i < idx.size(); ++i)
            for (int j = 0; j < cols_; ++j) r.at(int(i), j) = at(idx[i], j);
        return r;
    }
    std::vector<uint8_t> col(int c) const {
        std::vector<uint8_t> v(rows_);
        for (int i = 0; i < rows_; ++i) v[i] = at(i, c);
        return v;
    }
    void set_col(int c, const std::vector<uint8_t>& v) {
        for (int i = 0; i < rows_; ++i) at(i, c) = v[i];
    }

    static FpMat hstack(const FpMat& a, const FpMat& b) {
        assert(a.rows_ == b.rows_ && a.p_ == b.p_);
        FpMat r(a.rows_, a.cols_ + b.cols_, a.p_);
        for (int i = 0; i < a.rows_; ++i) {
            for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
            for (int j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
        }
        return r;
    }
    static FpMat vstack(const FpMat& a, const FpMat& b) {
        assert(a.cols_ == b.cols_ && a.p_ == b.p_);
        FpMat r(a.rows_ + b.rows_, a.cols_, a.p_);
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
        for (int i = 0; i < b.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j) r.at(a.rows_ + i, j) = b.at(i, j);
        return r;
    }

    static FpMat direct_sum(const FpMat& a, const FpMat& b) {
        FpMat r(a.rows_ + b.rows_, a.cols_ + b.cols_, a.p_);
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
        for (int i = 0; i < b.rows_; ++i)
            for (int j = 0; j < b.cols_; ++j) r.at(a.rows_ + i, a.cols_ + j) = b.at(i, j);
        return r;
    }

    static FpMat kron(const FpMat& a, const FpMat& b) {
        FpMat r(a.rows_ * b.rows_, a.cols_ * b.cols_, a.p_);
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j) {
                uint8_t v = a.at(i, j);
                if (!v) continue;
                for (int k = 0; k < b.rows_; ++k)
                    for (int l = 0; l < b.cols_; ++l)
                        r.at(i * b.rows_ + k, j * b.cols_ + l) = uint8_t(v * b.at(k, l) % a.p_);
            }
        return r;
    }

    // In-place reduced row echelon form. Deterministic: pivot is the first
    // row with a nonzero entry in the current column. Returns pivot columns.
    std::vector<int> rref_in_place() {
        Fp f(p_);
        std::vector<int> pivots;
        int r = 0;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            int pr = -1;
            for (int i = r; i < rows_; ++i)
                if (at(i, c)) {
                    pr = i;
                    break;
                }
            if (pr < 0) continue;
            if (pr != r)
                for (int j = 0; j < cols_; ++j) std::swap(at(pr, j), at(r, j));
            uint8_t iv = f.inv(at(r, c));
            if (iv != 1)
                for (int j = c; j < cols_; ++j) at(r, j) = uint8_t(at(r, j) * iv % p_);
            for (int i = 0; i < rows_; ++i) {
                if (i == r) continue;
                uint8_t v = at(i, c);
                if (!v) continue;
                const uint8_t* src = row(r);
                uint8_t* dst = this->row(i);
                for (int j = c; j < cols_; ++j) {
                    int t = dst[j] - v * src[j] % p_;
                    dst[j] = uint8_t(t < 0 ? t + p_ : t);
                }
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    int rank() const {
        FpMat m = *this;
        return int(m.rref_in_place().size());
    }

    // Basis of the right nullspace; columns of the returned matrix.
    FpMat nullspace_basis() const {
        FpMat R = *this;
        std::vector<int> piv = R.rref_in_place();
        std::vector<char> is_piv(cols_, 0);
        for (int c : piv) is_piv[c] = 1;
        std::vector<int> free_cols;
        for (int c = 0; c < cols_; ++c)
            if (!is_piv[c]) free_cols.push_back(c);
        FpMat ns(cols_, int(free_cols.size()), p_);
        Fp f(p_);
        for (size_t k = 0; k < free_cols.size(); ++k) {
            int fc = free_cols[k];
            ns.at(fc, int(k)) = 1;
            for (size_t r = 0; r < piv.size(); ++r) ns.at(piv[r], int(k)) = f.neg(R.at(int(r), fc));
        }
        return ns;
    }

    // Columns of *this spanning the image (original columns at pivot positions).
    FpMat image_basis() const {
        FpMat R = *this;
        std::vector<int> piv = R.rref_in_place();
        return col_slice(piv);
    }

    // Solve this * x = b for a single column b. Returns one solution or nullopt.
    std::optional<std::vector<uint8_t>> solve(const std::vector<uint8_t>& b) const {
        assert(int(b.size()) == rows_);
        FpMat aug(rows_, cols_ + 1, p_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, cols_) = b[i];
        }
        std::vector<int> piv = aug.rref_in_place();
        if (!piv.empty() && piv.back() == cols_) return std::nullopt;
        std::vector<uint8_t> x(cols_, 0);
        for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug.at(int(r), cols_);
        return x;
    }

    // Solve this * X = B; every column must be consistent.
    std::optional<FpMat> solve_mat(const FpMat& B) const {
        assert(B.rows() == rows_);
        FpMat aug = hstack(*this, B);
        std::vector<int> piv = aug.rref_in_place();
        FpMat X(cols_, B.cols(), p_);
        for (size_t r = 0; r < piv.size(); ++r) {
            if (piv[r] >= cols_) return std::nullopt;
            for (int j = 0; j < B.cols(); ++j) X.at(piv[r], j) = aug.at(int(r), cols_ + j);
        }
        return X;
    }

  private:
    int rows_, cols_, p_;
    std::vector<uint8_t> a_;
};

// Row-reduced transform: E * M = R with R in rref. E collects the row ops.
struct RrefTransform {
    FpMat R;
    FpMat E;
    std::vector<int> pivots;
};

inline RrefTransform rref_with_transform(const FpMat& M) {
    int p = M.modulus();
    FpMat aug = FpMat::hstack(M, FpMat::identity(M.rows(), p));
    // rref of [M | I] reduces M while tracking ops, but rref_in_place would
    // also pivot inside the identity block; eliminate manually instead.
    Fp f(p);
    int rows = M.rows(), cols = M.cols(), w = cols + rows;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (aug.at(i, c)) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < w; ++j) std::swap(aug.at(pr, j), aug.at(r, j));
        uint8_t iv = f.inv(aug.at(r, c));
        if (iv != 1)
            for (int j = 0; j < w; ++j) aug.at(r, j) = uint8_t(aug.at(r, j) * iv % p);
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            uint8_t v = aug.at(i, c);
            if (!v) continue;
            for (int j = 0; j < w; ++j) {
                int t = aug.at(i, j) - v * aug.at(r, j) % p;
                aug.at(i, j) = uint8_t(t < 0 ? t + p : t);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    RrefTransform out;
    out.pivots = pivots;
    out.R = FpMat(rows, cols, p);
    out.E = FpMat(rows, rows, p);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) out.R.at(i, j) = aug.at(i, j);
        for (int j = 0; j < rows; ++j) out.E.at(i, j) = aug.at(i, cols + j);
    }
    return out;
}

// Incrementally maintained row space in reduced echelon form.
// insert() reduces the vector against the current basis and either absorbs
// it (returning true) or finds it dependent (returning false).
class RrefSpan {
  public:
    RrefSpan(int dim, int p) : dim_(dim), p_(p), f_(p), pivot_row_(dim, -1) {}

    int dim() const { return dim_; }
    int rank() const { return int(rows_.size()); }

    bool contains(const std::vector<uint8_t>& v) const {
        std::vector<uint8_t> w = v;
        reduce(w);
        for (uint8_t x : w)
            if (x) return false;
        return true;
    }

    bool insert(const std::vector<uint8_t>& v) {
        std::vector<uint8_t> w = v;
        reduce(w);
        int lead = -1;
        for (int i = 0; i < dim_; ++i)
            if (w[i]) {
                lead = i;
                break;
            }
        if (lead < 0) return false;
        uint8_t iv = f_.inv(w[lead]);
        if (iv != 1)
            for (int i = lead; i < dim_; ++i) w[i] = uint8_t(w[i] * iv % p_);
        // Back-eliminate the new pivot from existing rows to stay reduced.
        for (auto& row : rows_) {
            uint8_t c = row[lead];
            if (!c) continue;
            for (int i = lead; i < dim_; ++i) {
                int t = row[i] - c * w[i] % p_;
                row[i] = uint8_t(t < 0 ? t + p_ : t);
            }
        }
        pivot_row_[lead] = int(rows_.size());
        rows_.push_back(std::move(w));
        return true;
    }

    // Rows of the span as a matrix (basis of the span, one per row).
    FpMat basis_rows() const {
        FpMat m(int(rows_.size()), dim_, p_);
        for (size_t i = 0; i < rows_.size(); ++i)
            for (int j = 0; j < dim_; ++j) m.at(int(i), j) = rows_[i][j];
        return m;
    }

  private:
    void reduce(std::vector<uint8_t>& w) const {
        for (int i = 0; i < dim_; ++i) {
            uint8_t c = w[i];
            if (!c) continue;
            int r = pivot_row_[i];
            if (r < 0) continue;
            const std::vector<uint8_t>& row = rows_[r];
            for (int j = i; j < dim_; ++j) {
                int t = w[j] - c * row[j] % p_;
                w[j] = uint8_t(t < 0 ? t + p_ : t);
            }
        }
    }

    int dim_, p_;
    Fp f_;
    std::vector<int> pivot_row_;
    std::vector<std::vector<uint8_t>> rows_;
};

// Sparse matrix over GF(p), column-major coordinate lists.
struct SpMat {
    int rows = 0, cols = 0, p = 2;
    std::vector<std::vector<std::pair<int32_t, uint8_t>>> col;

    SpMat() = default;
    SpMat(int r, int c, int prime) : rows(r), cols(c), p(prime), col(c) {}

    void add(int r, int c, long long v) {
        Fp f(p);
        uint8_t rv = f.reduce(v);
        if (rv) col[c].push_back({r, rv});
    }

    size_t nnz() const {
        size_t n = 0;
        for (auto& c : col) n += c.size();
        return n;
    }

    static SpMat from_dense(const FpMat& m) {
        SpMat s(m.rows(), m.cols(), m.modulus());
        for (int j = 0; j < m.cols(); ++j)
            for (int i = 0; i < m.rows(); ++i)
                if (m.at(i, j)) s.col[j].push_back({i, m.at(i, j)});
        return s;
    }

    FpMat to_dense() const {
        FpMat m(rows, cols, p);
        for (int j = 0; j < cols; ++j)
            for (auto [r, v] : col[j]) m.at(r, j) = uint8_t((m.at(r, j) + v) % p);
        return m;
    }

    SpMat transpose() const {
        SpMat t(cols, rows, p);
        for (int j = 0; j < cols; ++j)
            for (auto [r, v] : col[j]) t.col[r].push_back({j, v});
        return t;
    }

    std::vector<uint8_t> mul_vec(const std::vector<uint8_t>& x) const {
        assert(int(x.size()) == cols);
        std::vector<uint32_t> acc(rows, 0);
        for (int j = 0; j < cols; ++j) {
            uint32_t v = x[j];
            if (!v) continue;
            for (auto [r, c] : col[j]) acc[r] += v * c;
        }
        std::vector<uint8_t> y(rows);
        for (int i = 0; i < rows; ++i) y[i] = uint8_t(acc[i] % p);
        return y;
    }

    // this * B for dense B.
    FpMat mul_dense(const FpMat& B) const {
        assert(B.rows() == cols);
        FpMat out(rows, B.cols(), p);
        std::vector<std::vector<uint32_t>> acc(rows, std::vector<uint32_t>(B.cols(), 0));
        for (int j = 0; j < cols; ++j)
            for (auto [r, v] : col[j]) {
                const uint8_t* brow = B.row(j);
                auto& arow = acc[r];
                for (int k = 0; k < B.cols(); ++k) arow[k] += uint32_t(v) * brow[k];
            }
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < B.cols(); ++k) out.at(i, k) = uint8_t(acc[i][k] % p);
        return out;
    }

    // A * this for dense A.
    FpMat dense_mul(const FpMat& A) const {
        assert(A.cols() == rows);
        FpMat out(A.rows(), cols, p);
        for (int j = 0; j < cols; ++j) {
            std::vector<uint32_t> acc(A.rows(), 0);
            for (auto [r, v] : col[j])
                for (int i = 0; i < A.rows(); ++i) acc[i] += uint32_t(v) * A.at(i, r);
            for (int i = 0; i < A.rows(); ++i) out.at(i, j) = uint8_t(acc[i] % p);
        }
        return out;
    }

    // Rank by sparse elimination on column lists; independent of FpMat::rank.
    int rank_sparse() const {
        Fp f(p);
        std::vector<std::vector<std::pair<int32_t, uint8_t>>> work;
        work.reserve(cols);
        for (auto c : col) {
            std::sort(c.begin(), c.end());
            // merge duplicate row entries
            std::vector<std::pair<int32_t, uint8_t>> m;
            for (auto [r, v] : c) {
                if (!m.empty() && m.back().first == r)
                    m.back().second = uint8_t((m.back().second + v) % p);
                else
                    m.push_back({r, v});
            }
            std::erase_if(m, [](auto& e) { return e.second == 0; });
            if (!m.empty()) work.push_back(std::move(m));
        }
        // Pivot rows kept sorted by lead index: eliminating lead L only
        // introduces indices > L, so one ascending pass fully reduces.
        std::vector<std::pair<int32_t, std::vector<std::pair<int32_t, uint8_t>>>> pivots;
        int rank = 0;
        for (auto& v : work) {
            std::vector<std::pair<int32_t, uint8_t>> cur = v;
            for (auto& [plead, prow] : pivots) {
                uint8_t c = 0;
                for (auto [r, val] : cur)
                    if (r == plead) {
                        c = val;
                        break;
                    }
                if (!c) continue;
                // cur -= c * prow, merging sorted lists
                std::vector<std::pair<int32_t, uint8_t>> next;
                size_t i = 0, j = 0;
                while (i < cur.size() || j < prow.size()) {
                    if (j == prow.size() || (i < cur.size() && cur[i].first < prow[j].first)) {
                        next.push_back(cur[i++]);
                    } else if (i == cur.size() || prow[j].first < cur[i].first) {
                        next.push_back({prow[j].first, f.neg(f.mul(c, prow[j].second))});
                        ++j;
                    } else {
                        uint8_t nv = f.sub(cur[i].second, f.mul(c, prow[j].second));
                        if (nv) next.push_back({cur[i].first, nv});
                        ++i;
                        ++j;
                    }
                }
                std::erase_if(next, [](auto& e) { return e.second == 0; });
                cur = std::move(next);
            }
            if (cur.empty()) continue;
            uint8_t iv = f.inv(cur.front().second);
            if (iv != 1)
                for (auto& [r, val] : cur) val = f.mul(val, iv);
            int32_t lead = cur.front().first;
            auto pos = std::lower_bound(pivots.begin(), pivots.end(), lead,
                                        [](const auto& a, int32_t b) { return a.first < b; });
            pivots.insert(pos, {lead, std::move(cur)});
            ++rank;
        }
        return rank;
    }
};

} // namespace schurkit
