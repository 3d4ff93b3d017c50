#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <tuple>

#include "schurkit/schur_algebra.hpp"

using namespace schurkit;

namespace {

unsigned long long binom(int a, int b) {
    if (b < 0 || b > a) return 0;
    unsigned long long r = 1;
    for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
}

AlgElt single(int e) { return {{e, 1}}; }

FpMat op_dense(const SchurAlgebra& A, const AlgElt& x) {
    FpMat m(A.vdim, A.vdim, A.p);
    for (auto [e, c] : x) {
        FpMat d = A.op[e].to_dense();
        m = m + d.scale(c);
    }
    return m;
}

// Left multiplication by xi_g on coefficient vectors, via structure constants.
std::vector<uint8_t> left_mul(const SchurAlgebra& A, int g, const std::vector<uint8_t>& v) {
    std::vector<uint32_t> acc(A.dim, 0);
    for (int e = 0; e < A.dim; ++e) {
        if (!v[e]) continue;
        for (auto [t, c] : A.sc(g, e)) acc[t] += uint32_t(v[e]) * c;
    }
    std::vector<uint8_t> out(A.dim);
    for (int i = 0; i < A.dim; ++i) out[i] = uint8_t(acc[i] % A.p);
    return out;
}

} // namespace

TEST_CASE("dimension matches the multiset count") {
    CHECK(SchurAlgebra(2, 3, 3).dim == 20);
    CHECK(SchurAlgebra(1, 4, 5).dim == 1);
    CHECK(SchurAlgebra(3, 5, 5).dim == 1287);
    for (int n = 1; n <= 3; ++n)
        for (int d = 0; d <= 6; ++d)
            for (int p : {2, 3, 5, 7}) {
                SchurAlgebra A(n, d, p);
                CHECK(A.dim == int(binom(n * n + d - 1, d)));
            }
}

TEST_CASE("operators partition the full matrix grid") {
    SchurAlgebra A(2, 3, 5);
    size_t total = 0;
    for (auto& m : A.op) total += m.nnz();
    CHECK(total == 64); // n^{2d}
    // Orbit operators have disjoint supports and 0/1 entries.
    FpMat sum(A.vdim, A.vdim, A.p);
    for (auto& m : A.op) sum = sum + m.to_dense();
    for (int i = 0; i < A.vdim; ++i)
        for (int j = 0; j < A.vdim; ++j) CHECK(sum.at(i, j) == 1);
}

TEST_CASE("weight idempotents are orthogonal and sum to the unit") {
    SchurAlgebra A(2, 3, 3);
    auto idems = weight_idempotents(A);
    REQUIRE(idems.size() == 4);
    std::set<std::vector<int>> comps;
    for (auto& [chi, idx] : idems) comps.insert(chi);
    CHECK(comps == std::set<std::vector<int>>{{3, 0}, {2, 1}, {1, 2}, {0, 3}});

    for (auto& [chi, e] : idems)
        for (auto& [psi, g] : idems) {
            AlgElt prod = A.mul_elem(single(e), single(g));
            if (chi == psi)
                CHECK(prod == single(e));
            else
                CHECK(prod.empty());
        }

    AlgElt u = A.unit();
    for (int b = 0; b < A.dim; ++b) {
        CHECK(A.mul_elem(u, single(b)) == single(b));
        CHECK(A.mul_elem(single(b), u) == single(b));
    }
}

TEST_CASE("structure constants agree with operator composition") {
    std::mt19937 rng(31);
    for (auto [n, d, p] : {std::tuple{2, 3, 3}, {3, 2, 5}, {2, 4, 2}}) {
        SchurAlgebra A(n, d, p);
        std::uniform_int_distribution<int> pick(0, A.dim - 1);
        for (int trial = 0; trial < 60; ++trial) {
            int a = pick(rng), b = pick(rng);
            FpMat lhs = op_dense(A, single(a)) * op_dense(A, single(b));
            FpMat rhs = op_dense(A, A.mul_elem(single(a), single(b)));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("associativity on random triples") {
    std::mt19937 rng(67);
    for (auto [n, d, p] : {std::tuple{2, 3, 3}, {3, 2, 5}, {2, 4, 2}, {3, 3, 3}}) {
        SchurAlgebra A(n, d, p);
        std::uniform_int_distribution<int> pick(0, A.dim - 1);
        for (int trial = 0; trial < 200; ++trial) {
            AlgElt a = single(pick(rng)), b = single(pick(rng)), c = single(pick(rng));
            CHECK(A.mul_elem(A.mul_elem(a, b), c) == A.mul_elem(a, A.mul_elem(b, c)));
        }
    }
}

TEST_CASE("operator realization is faithful") {
    for (int d = 0; d <= 5; ++d)
        for (int p : {2, 3, 5}) {
            SchurAlgebra A(2, d, p);
            FpMat flat(A.dim, A.vdim * A.vdim, p);
            for (int e = 0; e < A.dim; ++e) {
                FpMat m = A.op[e].to_dense();
                for (int i = 0; i < A.vdim; ++i)
                    for (int j = 0; j < A.vdim; ++j) flat.at(e, i * A.vdim + j) = m.at(i, j);
            }
            CHECK(flat.rank() == A.dim);
        }
}

TEST_CASE("transpose is an involutive anti-automorphism") {
    SchurAlgebra A(2, 3, 3);
    for (int e : A.idempotents) CHECK(A.transpose_elt(e) == e);
    for (int b = 0; b < A.dim; ++b) {
        int t = A.transpose_elt(b);
        REQUIRE(t >= 0);
        CHECK(A.transpose_elt(t) == b);
        CHECK(A.rowwt[t] == A.colwt[b]);
    }
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> pick(0, A.dim - 1);
    for (int trial = 0; trial < 100; ++trial) {
        int a = pick(rng), b = pick(rng);
        AlgElt ab = A.mul_elem(single(a), single(b));
        AlgElt tt = A.mul_elem(single(A.transpose_elt(b)), single(A.transpose_elt(a)));
        AlgElt ab_t;
        for (auto [e, c] : ab) ab_t.push_back({A.transpose_elt(e), c});
        std::sort(ab_t.begin(), ab_t.end());
        CHECK(ab_t == tt);
    }
}

TEST_CASE("truncation idempotent cuts out the smaller Schur algebra") {
    SchurAlgebra A3(3, 3, 3);
    AlgElt e = truncation_idempotent(A3, 2);
    CHECK(A3.mul_elem(e, e) == e);
    auto sub = truncated_subalgebra_basis(A3, 2);
    CHECK(sub.size() == 20);

    SchurAlgebra A1(3, 1, 5);
    CHECK(truncated_subalgebra_basis(A1, 1).size() == 1);

    // Exhaustive structure constant comparison under the relabeling bijection.
    SchurAlgebra A2(2, 3, 3);
    std::map<int, int> to_small;
    for (int x : sub) {
        int y = relabel_into_small(A3, x, A2);
        REQUIRE(y >= 0);
        to_small[x] = y;
    }
    // The relabeling is a bijection onto the small basis.
    std::set<int> image;
    for (auto& [x, y] : to_small) image.insert(y);
    CHECK(int(image.size()) == A2.dim);

    for (int x : sub)
        for (int y : sub) {
            AlgElt big = A3.mul_elem(single(x), single(y));
            AlgElt small = A2.mul_elem(single(to_small[x]), single(to_small[y]));
            AlgElt mapped;
            for (auto [t, c] : big) {
                REQUIRE(to_small.count(t)); // product stays in eAe
                mapped.push_back({to_small[t], c});
            }
            std::sort(mapped.begin(), mapped.end());
            CHECK(mapped == small);
        }
}

TEST_CASE("eAe has the right dimension for S(3,3) -> n=2") {
    SchurAlgebra A(3, 3, 3);
    AlgElt e = truncation_idempotent(A, 2);
    // Dimension of eAe by direct span: e xi e over all basis xi.
    RrefSpan span(A.dim, A.p);
    for (int b = 0; b < A.dim; ++b) {
        AlgElt exe = A.mul_elem(A.mul_elem(e, single(b)), e);
        std::vector<uint8_t> v(A.dim, 0);
        for (auto [t, c] : exe) v[t] = c;
        span.insert(v);
    }
    CHECK(span.rank() == 20);
}

TEST_CASE("hyperalgebra elements generate the whole algebra at small sizes") {
    for (auto [n, d, p] : {std::tuple{2, 2, 2}, {2, 3, 3}, {3, 2, 3}, {3, 3, 2}, {2, 4, 2}}) {
        SchurAlgebra A(n, d, p);
        auto gens = hyperalgebra_generators(A);
        RrefSpan span(A.dim, A.p);
        std::vector<uint8_t> u(A.dim, 0);
        for (auto [e, c] : A.unit()) u[e] = c;
        span.insert(u);
        bool grew = true;
        while (grew) {
            grew = false;
            FpMat rows = span.basis_rows();
            for (int g : gens)
                for (int r = 0; r < rows.rows(); ++r) {
                    std::vector<uint8_t> v(A.dim);
                    for (int j = 0; j < A.dim; ++j) v[j] = rows.at(r, j);
                    if (span.insert(left_mul(A, g, v))) grew = true;
                }
        }
        CHECK(span.rank() == A.dim);
    }
}

TEST_CASE("structure constant cache round-trips") {
    std::string dir = "./.schurkit-cache-test";
    std::filesystem::remove_all(dir);
    SchurAlgebra A(2, 3, 3);
    A.ensure_all_sc();
    A.write_cache(dir);

    SchurAlgebra B(2, 3, 3);
    REQUIRE(B.load_cache(dir));
    for (int a = 0; a < A.dim; ++a)
        for (int b = 0; b < A.dim; ++b) CHECK(A.sc(a, b) == B.sc(a, b));

    // Wrong parameters are rejected.
    SchurAlgebra C(2, 3, 5);
    CHECK_FALSE(C.load_cache(dir));
    std::filesystem::remove_all(dir);
}
