#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "schurkit/partition.hpp"

using namespace schurkit;

namespace {

// Independent enumerator: all partitions of d, filtered, sorted descending.
std::vector<Partition> oracle_enum(int d, int n) {
    std::vector<Partition> all;
    Partition cur;
    auto rec = [&](auto&& self, int rem, int maxp) -> void {
        if (rem == 0) {
            all.push_back(cur);
            return;
        }
        for (int x = 1; x <= std::min(rem, maxp); ++x) {
            cur.push_back(x);
            self(self, rem - x, x);
            cur.pop_back();
        }
    };
    rec(rec, d, d);
    std::vector<Partition> out;
    for (auto& lam : all)
        if (lam.empty() || lam[0] <= n) out.push_back(lam);
    std::sort(out.begin(), out.end(), std::greater<Partition>());
    return out;
}

int hook_len(const Partition& lam, int i, int j) {
    int arm = lam[i] - 1 - j;
    int leg = 0;
    for (size_t r = i + 1; r < lam.size(); ++r)
        if (lam[r] > j) ++leg;
    return arm + leg + 1;
}

// Literal rim-hook removal at the cell whose hook length matches.
Partition remove_rim(const Partition& lam, int i, int j) {
    int leg = 0;
    for (size_t r = i + 1; r < lam.size(); ++r)
        if (lam[r] > j) ++leg;
    Partition out = lam;
    for (int r = i; r < i + leg; ++r) out[r] = lam[r + 1] - 1;
    out[i + leg] = j;
    for (size_t r = 0; r + 1 < out.size(); ++r) REQUIRE(out[r] >= out[r + 1]);
    return trim(out);
}

std::vector<std::pair<int, int>> rim_cells(const Partition& lam, int p) {
    std::vector<std::pair<int, int>> cells;
    for (size_t i = 0; i < lam.size(); ++i)
        for (int j = 0; j < lam[i]; ++j)
            if (hook_len(lam, int(i), j) == p) cells.emplace_back(int(i), j);
    return cells;
}

Partition oracle_core(Partition lam, int p, bool take_last) {
    for (;;) {
        auto cells = rim_cells(lam, p);
        if (cells.empty()) return lam;
        auto [i, j] = take_last ? cells.back() : cells.front();
        lam = remove_rim(lam, i, j);
    }
}

// Paths in the Young lattice from the empty shape, i.e. standard tableaux.
long long oracle_syt(const Partition& lam, std::map<Partition, long long>& memo) {
    if (lam.empty()) return 1;
    auto it = memo.find(lam);
    if (it != memo.end()) return it->second;
    long long total = 0;
    for (size_t i = 0; i < lam.size(); ++i) {
        if (i + 1 < lam.size() && lam[i] == lam[i + 1]) continue;
        Partition sub = lam;
        --sub[i];
        total += oracle_syt(trim(sub), memo);
    }
    memo[lam] = total;
    return total;
}

} // namespace

TEST_CASE("enum_lambda matches examples and oracle") {
    CHECK(enum_lambda(3, 2) == std::vector<Partition>{{2, 1}, {1, 1, 1}});
    CHECK(enum_lambda(5, 2) ==
          std::vector<Partition>{{2, 2, 1}, {2, 1, 1, 1}, {1, 1, 1, 1, 1}});
    for (int d = 0; d <= 9; ++d)
        for (int n = 1; n <= d + 1; ++n)
            CHECK(enum_lambda(d, n) == oracle_enum(d, n));
}

TEST_CASE("enum_lambda_rect filters by rows and validates the rectangle") {
    CHECK(enum_lambda_rect(3, 2, 2) == std::vector<Partition>{{2, 1}});
    CHECK(enum_lambda_rect(4, 2, 2) == std::vector<Partition>{{2, 2}});
    CHECK(enum_lambda_rect(1, 2, 2) == std::vector<Partition>{{1}});
    CHECK_THROWS(enum_lambda_rect(5, 2, 2));
    for (int d = 0; d <= 8; ++d)
        for (int n = 1; n <= 4; ++n)
            for (int k = 1; k <= 4; ++k) {
                if (d > n * k) continue;
                for (auto& lam : enum_lambda_rect(d, n, k)) {
                    CHECK(int(lam.size()) <= k);
                    CHECK((lam.empty() || lam[0] <= n));
                }
            }
}

TEST_CASE("conjugate is an involution and matches the example") {
    CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
    for (int d = 0; d <= 8; ++d)
        for (auto& lam : enum_lambda(d, d == 0 ? 1 : d)) {
            CHECK(conjugate(conjugate(lam)) == lam);
            CHECK(weight(conjugate(lam)) == weight(lam));
        }
}

TEST_CASE("paper_leq is reversed dominance and a partial order") {
    CHECK(paper_leq({2, 2, 1}, {2, 1, 1, 1}));
    CHECK_FALSE(paper_leq({2, 1, 1, 1}, {2, 2, 1}));
    CHECK_THROWS(paper_leq({2, 1}, {2, 2}));
    for (int d = 1; d <= 8; ++d) {
        auto all = enum_lambda(d, d);
        for (auto& a : all) {
            CHECK(paper_leq(a, a));
            for (auto& b : all) {
                if (paper_leq(a, b) && paper_leq(b, a)) CHECK(a == b);
                for (auto& c : all)
                    if (paper_leq(a, b) && paper_leq(b, c)) CHECK(paper_leq(a, c));
            }
        }
    }
    // Maximum of the order is the most dominant shape, minimum the column.
    for (int d = 1; d <= 8; ++d)
        for (auto& a : enum_lambda(d, d)) {
            CHECK(paper_leq(Partition{d}, a));
            CHECK(paper_leq(a, Partition(d, 1)));
        }
}

TEST_CASE("p_core matches rim hook removal in any order") {
    CHECK(p_core({2, 1, 1, 1}, 5) == Partition{});
    CHECK(p_core({2, 2, 1}, 5) == Partition{2, 2, 1});
    for (int p : {2, 3, 5})
        for (int d = 0; d <= 9; ++d)
            for (auto& lam : enum_lambda(d, d == 0 ? 1 : d)) {
                Partition got = p_core(lam, p);
                CHECK(got == oracle_core(lam, p, false));
                CHECK(got == oracle_core(lam, p, true));
                CHECK(rim_cells(got, p).empty());
                CHECK(p_core(got, p) == got);
            }
}

TEST_CASE("alpha matches examples and the padded conjugate rule") {
    CHECK(alpha({2, 1, 1, 1}, 5, 2) == 0);
    CHECK(alpha({2, 1}, 2, 2) == 1);
    CHECK(alpha({1, 1, 1}, 3, 1) == alpha_unconstrained);
    CHECK(alpha({}, 7, 1) == alpha_unconstrained);
    // Direct re-check against the divisibility condition.
    for (int p : {2, 3, 5})
        for (int n = 2; n <= 4; ++n)
            for (int d = 0; d <= 8; ++d)
                for (auto& lam : enum_lambda(d, n)) {
                    int r = alpha(lam, p, n);
                    Partition c = conjugate(lam);
                    c.resize(n, 0);
                    long long pr = 1;
                    for (int t = 0; t < r; ++t) pr *= p;
                    for (int i = 0; i + 1 < n; ++i)
                        CHECK((c[i] - c[i + 1] + 1) % pr == 0);
                    bool tighter = true;
                    for (int i = 0; i + 1 < n; ++i)
                        if ((c[i] - c[i + 1] + 1) % (pr * p) != 0) tighter = false;
                    CHECK_FALSE(tighter);
                }
}

TEST_CASE("blocks matches examples") {
    auto b1 = blocks(3, 2, 3);
    REQUIRE(b1.size() == 1);
    CHECK(b1[0] == std::vector<Partition>{{2, 1}, {1, 1, 1}});

    auto b2 = blocks(5, 2, 5);
    REQUIRE(b2.size() == 2);
    std::set<std::vector<Partition>> cls2(b2.begin(), b2.end());
    CHECK(cls2.count({{2, 2, 1}}) == 1);
    CHECK(cls2.count({{2, 1, 1, 1}, {1, 1, 1, 1, 1}}) == 1);

    auto b3 = blocks(2, 2, 5);
    REQUIRE(b3.size() == 2);
    for (auto& cls : b3) CHECK(cls.size() == 1);
}

TEST_CASE("blocks at weight p: the non-singleton class is the hooks") {
    for (int p : {3, 5, 7})
        for (int n = 2; n < p; ++n) {
            auto bs = blocks(p, n, p);
            int big = 0;
            for (auto& cls : bs)
                if (cls.size() > 1) {
                    ++big;
                    for (auto& lam : cls) CHECK(is_p_hook(lam, p).has_value());
                }
            // Hooks with first part <= n: i+1 <= n, so n of them; n >= 2
            // guarantees a non-singleton class.
            CHECK(big == 1);
            std::set<Partition> in_big;
            for (auto& cls : bs)
                if (cls.size() > 1)
                    for (auto& lam : cls) in_big.insert(lam);
            for (auto& lam : enum_lambda(p, n))
                if (is_p_hook(lam, p)) CHECK(in_big.count(lam) == 1);
        }
}

TEST_CASE("is_p_hook recognises hooks and nothing else") {
    CHECK(is_p_hook({1, 1, 1}, 3) == 0);
    CHECK(is_p_hook({3, 1, 1}, 5) == 2);
    CHECK_FALSE(is_p_hook({2, 2, 1}, 5).has_value());
    for (int p : {3, 5, 7})
        for (int i = 0; i < p; ++i) {
            Partition lam{i + 1};
            for (int r = 0; r < p - i - 1; ++r) lam.push_back(1);
            CHECK(is_p_hook(lam, p) == i);
        }
    CHECK_FALSE(is_p_hook({2, 1}, 5).has_value());
}

TEST_CASE("hat complements in the rectangle") {
    CHECK(hat({1}, 2, 2) == Partition{2, 1});
    CHECK(hat({2, 2}, 2, 2) == Partition{});
    CHECK(hat({1, 1, 1}, 2, 3) == Partition{1, 1, 1});
    CHECK_THROWS(hat({3}, 2, 2));
    CHECK_THROWS(hat({1, 1, 1}, 2, 2));
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 4; ++k)
            for (int d = 0; d <= n * k; ++d)
                for (auto& lam : enum_lambda_rect(d, n, k)) {
                    Partition h = hat(lam, n, k);
                    CHECK(weight(h) + weight(lam) == n * k);
                    CHECK(hat(h, n, k) == lam);
                }
}

TEST_CASE("kl_length is the hook index and otherwise zero") {
    CHECK(kl_length({2, 1, 1, 1}, 5, 3) == 1);
    CHECK(kl_length({2, 2, 1}, 5, 2) == 0);
    CHECK(kl_length({1, 1, 1, 1, 1, 1, 1}, 7, 3) == 0);
}

TEST_CASE("hook_specht_dim counts standard tableaux") {
    CHECK(hook_specht_dim(3, 1) == 2);
    CHECK(hook_specht_dim(5, 0) == 1);
    CHECK(hook_specht_dim(5, 2) == 6);
    std::map<Partition, long long> memo;
    for (int p : {3, 5, 7})
        for (int i = 0; i < p; ++i) {
            Partition lam{i + 1};
            for (int r = 0; r < p - i - 1; ++r) lam.push_back(1);
            CHECK(hook_specht_dim(p, i) == oracle_syt(lam, memo));
        }
    CHECK_THROWS(hook_specht_dim(5, 5));
}
