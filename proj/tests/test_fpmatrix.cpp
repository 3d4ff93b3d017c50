#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "schurkit/fp.hpp"
#include "schurkit/fpmatrix.hpp"

using namespace schurkit;

namespace {

FpMat from_rows(int p, std::vector<std::vector<int>> rows) {
    Fp F(p);
    FpMat M(int(rows.size()), rows.empty() ? 0 : int(rows[0].size()), p);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j)
            M.at(int(i), int(j)) = F.reduce(rows[i][j]);
    return M;
}

FpMat random_mat(int p, int r, int c, std::mt19937& rng) {
    FpMat M(r, c, p);
    std::uniform_int_distribution<int> dist(0, p - 1);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) M.at(i, j) = uint8_t(dist(rng));
    return M;
}

} // namespace

TEST_CASE("fp scalar arithmetic") {
    for (int p : {2, 3, 5, 7, 11, 251}) {
        Fp F(p);
        for (int a = 1; a < p; ++a) {
            CHECK(F.mul(uint8_t(a), F.inv(uint8_t(a))) == 1);
            CHECK(F.add(uint8_t(a), F.neg(uint8_t(a))) == 0);
        }
        CHECK(F.reduce(-1) == p - 1);
        CHECK(F.reduce(p) == 0);
    }
    CHECK_THROWS(Fp(4));
    CHECK_THROWS(Fp(1));
}

TEST_CASE("rref matches examples") {
    FpMat I = FpMat::identity(3, 5);
    FpMat R = I;
    auto piv = R.rref_in_place();
    CHECK(R == I);
    CHECK(piv == std::vector<int>{0, 1, 2});

    FpMat M = from_rows(5, {{1, 2}, {2, 4}});
    auto piv2 = M.rref_in_place();
    CHECK(M == from_rows(5, {{1, 2}, {0, 0}}));
    CHECK(piv2 == std::vector<int>{0});

    FpMat Z(2, 3, 5);
    auto piv3 = Z.rref_in_place();
    CHECK(Z == FpMat(2, 3, 5));
    CHECK(piv3.empty());
}

TEST_CASE("nullspace and image match examples") {
    CHECK(FpMat::identity(3, 5).nullspace_basis().cols() == 0);

    FpMat M = from_rows(5, {{1, 2}, {2, 4}});
    FpMat N = M.nullspace_basis();
    REQUIRE(N.cols() == 1);
    CHECK((M * N).is_zero());

    FpMat Z(1, 3, 5);
    CHECK(Z.nullspace_basis().cols() == 3);

    FpMat C = from_rows(5, {{1}, {2}});
    FpMat Im = C.image_basis();
    REQUIRE(Im.cols() == 1);
    Fp F(5);
    CHECK(Im.at(1, 0) == F.mul(2, Im.at(0, 0)));
}

TEST_CASE("solve and kron match examples") {
    FpMat I = FpMat::identity(4, 3);
    std::vector<uint8_t> b{1, 2, 0, 1};
    auto x = I.solve(b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    FpMat a(1, 1, 3);
    a.at(0, 0) = 2;
    FpMat K = FpMat::kron(a, FpMat::identity(2, 3));
    CHECK(K == from_rows(3, {{2, 0}, {0, 2}}));

    FpMat M = from_rows(3, {{1, 2}, {2, 1}});
    FpMat D = FpMat::direct_sum(M, FpMat::identity(1, 3));
    CHECK(D == from_rows(3, {{1, 2, 0}, {2, 1, 0}, {0, 0, 1}}));
}

TEST_CASE("random property sweep") {
    std::mt19937 rng(12345);
    for (int p : {2, 3, 5, 7}) {
        for (int trial = 0; trial < 6; ++trial) {
            std::uniform_int_distribution<int> dim(1, trial < 4 ? 40 : 200);
            int r = dim(rng), c = dim(rng);
            FpMat M = random_mat(p, r, c, rng);
            FpMat N = M.nullspace_basis();
            CHECK((M * N).is_zero());
            CHECK(M.rank() + N.cols() == c);

            FpMat R = M;
            R.rref_in_place();
            FpMat R2 = R;
            R2.rref_in_place();
            CHECK(R == R2);

            std::uniform_int_distribution<int> dist(0, p - 1);
            std::vector<uint8_t> x(c);
            for (auto& v : x) v = uint8_t(dist(rng));
            auto sol = M.solve(M.mul_vec(x));
            REQUIRE(sol.has_value());
            CHECK(M.mul_vec(*sol) == M.mul_vec(x));

            // solve_mat agrees column by column.
            FpMat B = random_mat(p, c, 3, rng);
            FpMat MB = M * B;
            auto X = M.solve_mat(MB);
            REQUIRE(X.has_value());
            CHECK(M * *X == MB);

            // Unsolvable targets are reported as such.
            FpMat Im = M.image_basis();
            if (Im.cols() < r) {
                std::vector<uint8_t> y(r, 0);
                bool found = false;
                for (int probe = 0; probe < 50 && !found; ++probe) {
                    for (auto& v : y) v = uint8_t(dist(rng));
                    FpMat yc(r, 1, p);
                    yc.set_col(0, y);
                    if (FpMat::hstack(Im, yc).rank() > Im.cols()) found = true;
                }
                if (found) CHECK_FALSE(M.solve(y).has_value());
            }
        }
    }
}

TEST_CASE("sparse agrees with dense") {
    std::mt19937 rng(777);
    for (int p : {2, 3, 5, 7}) {
        std::uniform_int_distribution<int> dist(1, p - 1);
        for (int trial = 0; trial < 4; ++trial) {
            int r = 60, c = 80;
            SpMat S(r, c, p);
            std::uniform_int_distribution<int> ri(0, r - 1), ci(0, c - 1);
            for (int k = 0; k < r * c / 25; ++k) S.add(ri(rng), ci(rng), dist(rng));
            FpMat D = S.to_dense();
            CHECK(S.rank_sparse() == D.rank());
            CHECK(SpMat::from_dense(D).to_dense() == D);

            std::vector<uint8_t> x(c);
            std::uniform_int_distribution<int> dv(0, p - 1);
            for (auto& v : x) v = uint8_t(dv(rng));
            CHECK(S.mul_vec(x) == D.mul_vec(x));

            FpMat B = random_mat(p, c, 7, rng);
            CHECK(S.mul_dense(B) == D * B);
            FpMat A = random_mat(p, 7, r, rng);
            CHECK(S.dense_mul(A) == A * D);
            CHECK(S.transpose().to_dense() == D.transpose());
        }
    }
}

TEST_CASE("rref transform expresses the reduction") {
    std::mt19937 rng(99);
    for (int p : {2, 5}) {
        for (int trial = 0; trial < 4; ++trial) {
            FpMat M = random_mat(p, 30, 20, rng);
            auto rt = rref_with_transform(M);
            CHECK(rt.E * M == rt.R);
            FpMat R2 = M;
            auto piv = R2.rref_in_place();
            CHECK(rt.R == R2);
            CHECK(rt.pivots == piv);
        }
    }
}

TEST_CASE("incremental span") {
    RrefSpan span(4, 3);
    CHECK(span.insert({1, 2, 0, 1}));
    CHECK_FALSE(span.insert({2, 1, 0, 2}));
    CHECK(span.insert({0, 0, 1, 0}));
    CHECK(span.rank() == 2);
    CHECK(span.contains({1, 2, 1, 1}));
    CHECK_FALSE(span.contains({0, 1, 0, 0}));

    // Random agreement with dense rank.
    std::mt19937 rng(4242);
    for (int p : {2, 3, 5}) {
        std::uniform_int_distribution<int> dist(0, p - 1);
        RrefSpan sp(30, p);
        FpMat rowsM(25, 30, p);
        for (int i = 0; i < 25; ++i) {
            std::vector<uint8_t> v(30);
            for (auto& e : v) e = uint8_t(dist(rng));
            sp.insert(v);
            for (int j = 0; j < 30; ++j) rowsM.at(i, j) = v[j];
        }
        CHECK(sp.rank() == rowsM.rank());
        CHECK(sp.basis_rows().rank() == sp.rank());
    }
}
