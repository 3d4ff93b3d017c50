#pragma once

// Acceptance suite: end-to-end checks tying the closed-form tables to the
// brute-force homological machinery.  Every check is exact; a criterion
// passes only when every compared quantity matches on the nose.  The suite
// is used by both the acceptance test binary and the CLI `verify` command.

#include <cstdlib>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "closedforms.hpp"
#include "complexes.hpp"
#include "functor_modules.hpp"
#include "recollement.hpp"
#include "resolution.hpp"
#include "schur_algebra.hpp"

namespace schurkit {

struct CriterionResult {
    int number = 0;
    std::string name;
    bool passed = false;
    std::string detail;  // failure explanations, or notes on skipped extras
};

namespace detail_verify {

struct Collector {
    bool ok = true;
    std::string detail;

    void fail(const std::string& msg) {
        ok = false;
        if (!detail.empty()) detail += "; ";
        detail += msg;
    }
    void check(bool cond, const std::string& msg) {
        if (!cond) fail(msg);
    }
    void note(const std::string& msg) {
        if (!detail.empty()) detail += "; ";
        detail += msg;
    }
};

inline void progress(std::ostream* os, const std::string& msg) {
    if (os) *os << "    .. " << msg << std::endl;
}

inline const AModule& hook_module(const HookContext& C, char kind, int i) {
    switch (kind) {
        case 'F': return C.F.at(i).mod;
        case 'S': return C.S.at(i).mod;
        case 'W': return C.W.at(i);
    }
    throw std::invalid_argument("hook_module: unknown kind");
}

inline ExtTable closed_pair_table(char a, char b, int n, int i, int j, int qmax) {
    if (a == 'F' && b == 'S') return ext_FS(n, i, j, qmax);
    if (a == 'F' && b == 'F') return ext_FF(n, i, j, qmax);
    if (a == 'S' && b == 'S') return ext_SS(n, i, j, qmax);
    if (a == 'S' && b == 'F') return ext_SF(n, i, j, qmax);
    if (a == 'F' && b == 'W') return ext_FW(n, i, j, qmax);
    if (a == 'S' && b == 'W') return ext_SW(n, i, j, qmax);
    throw std::invalid_argument("closed_pair_table: unsupported pair kind");
}

inline std::string dims_str(const std::vector<int>& v) {
    std::ostringstream os;
    os << "{";
    for (size_t q = 0; q < v.size(); ++q) os << (q ? "," : "") << v[q];
    os << "}";
    return os.str();
}

inline AModule labelled_module(const SchurAlgebra& A, char kind, const Partition& lam) {
    switch (kind) {
        case 'S': return general_costandard(A, lam);
        case 'W': return general_standard(A, lam);
        case 'F': return simple_general(A, lam);
    }
    throw std::invalid_argument("labelled_module: unknown kind");
}

inline const std::vector<std::pair<int, int>>& hook_scales() {
    static const std::vector<std::pair<int, int>> scales = {{3, 2}, {5, 2}, {5, 3}};
    return scales;
}

}  // namespace detail_verify

// 1. Every closed Ext table equals the brute-force resolution computation.
inline CriterionResult criterion_formula_vs_oracle(std::ostream* log = nullptr) {
    using namespace detail_verify;
    CriterionResult r{1, "closed Ext tables match the brute-force oracle", false, ""};
    Collector c;
    static const std::vector<std::pair<char, char>> pairs = {
        {'F', 'S'}, {'F', 'F'}, {'S', 'S'}, {'S', 'F'}, {'F', 'W'}, {'S', 'W'}};
    for (auto [p, n] : hook_scales()) {
        progress(log, "scale p=" + std::to_string(p) + " n=" + std::to_string(n));
        SchurAlgebra A(n, p, p);
        HookContext C = hook_context(A);
        const int qmax = 2 * n;
        for (auto [a, b] : pairs) {
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    ExtTable brute =
                        ext_dims(hook_module(C, a, i), hook_module(C, b, j), qmax);
                    ExtTable closed = closed_pair_table(a, b, n, i, j, qmax);
                    std::ostringstream tag;
                    tag << "(" << p << "," << n << ") Ext(" << a << i << "," << b << j << ")";
                    c.check(brute.dims == closed.dims,
                            tag.str() + " brute " + dims_str(brute.dims) + " != closed " +
                                dims_str(closed.dims));
                }
            }
            progress(log, std::string("pair (") + a + "," + b + ") done");
        }
        clear_resolution_cache();
    }
    r.passed = c.ok;
    r.detail = c.detail;
    return r;
}

// 2. Characters: costandard minus the two adjacent simples vanishes.
inline CriterionResult criterion_character_decomposition(std::ostream* log = nullptr) {
    using namespace detail_verify;
    CriterionResult r{2, "standard characters are sums of two consecutive simple characters",
                      false, ""};
    Collector c;
    for (auto [p, n] : hook_scales()) {
        progress(log, "scale p=" + std::to_string(p) + " n=" + std::to_string(n));
        SchurAlgebra A(n, p, p);
        HookContext C = hook_context(A);
        for (int i = 0; i < n; ++i) {
            SymPolynomial lhs = C.W[i].weight_character();
            SymPolynomial rhs = C.F[i].mod.weight_character();
            if (i + 1 < n) rhs = rhs + C.F[i + 1].mod.weight_character();
            std::ostringstream tag;
            tag << "(" << p << "," << n << ") char(W" << i << ")";
            c.check(lhs == rhs, tag.str() + " does not split as the adjacent simples");
            // The same identity for the costandard strand, via Kuhn duality of
            // characters (characters are self-dual, so S and W agree).
            c.check(C.S[i].mod.weight_character() == lhs,
                    tag.str() + " disagrees with the costandard character");
        }
        clear_resolution_cache();
    }
    r.passed = c.ok;
    r.detail = c.detail;
    return r;
}

// 3. Strand differentials: squares vanish, the anticommutator vanishes, and
//    both maps commute with every algebra basis element.
inline CriterionResult criterion_differential_identities(std::ostream* log = nullptr) {
    using namespace detail_verify;
    CriterionResult r{3, "strand differentials square to zero, anticommute, and are equivariant",
                      false, ""};
    Collector c;
    for (auto [p, n] : hook_scales()) {
        progress(log, "scale p=" + std::to_string(p) + " n=" + std::to_string(n));
        SchurAlgebra A(n, p, p);
        HookContext C = hook_context(A);
        const int q = C.qmax;
        for (int i = 0; i + 1 < q; ++i)
            c.check((C.dmat[i + 1] * C.dmat[i]).is_zero(), "d*d nonzero at " + std::to_string(i));
        for (int i = 2; i <= q; ++i)
            c.check((C.kmat[i - 1] * C.kmat[i]).is_zero(), "k*k nonzero at " + std::to_string(i));
        for (int i = 1; i < q; ++i)
            c.check((C.kmat[i + 1] * C.dmat[i] + C.dmat[i - 1] * C.kmat[i]).is_zero(),
                    "kd+dk nonzero at " + std::to_string(i));
        if (q >= 1) {
            c.check((C.kmat[1] * C.dmat[0]).is_zero(), "kd nonzero at the strand bottom");
            c.check((C.dmat[q - 1] * C.kmat[q]).is_zero(), "dk nonzero at the strand top");
        }
        // Equivariance against every algebra basis element.  verify_equivariance
        // is exhaustive over the full basis whenever both module dimensions are
        // at most 200, which holds at every scale used here.
        for (int i = 0; i < q; ++i) {
            c.check(C.omega[i].mod.dim <= 200 && C.omega[i + 1].mod.dim <= 200,
                    "equivariance sample bound exceeded; check is no longer exhaustive");
            try {
                verify_equivariance(C.omega[i].mod, C.omega[i + 1].mod, C.dmat[i]);
            } catch (const std::exception& e) {
                c.fail("d not equivariant at " + std::to_string(i) + ": " + e.what());
            }
            try {
                verify_equivariance(C.omega[i + 1].mod, C.omega[i].mod, C.kmat[i + 1]);
            } catch (const std::exception& e) {
                c.fail("kappa not equivariant at " + std::to_string(i + 1) + ": " + e.what());
            }
        }
        clear_resolution_cache();
    }
    r.passed = c.ok;
    r.detail = c.detail;
    return r;
}

// 4. Resolution suite: the three strand complexes have the stated cohomology
//    and the strand terms are injective in the block.
inline CriterionResult criterion_resolution_suite(std::ostream* log = nullptr) {
    using namespace detail_verify;
    CriterionResult r{4, "strand complexes resolve simples and standards; strand terms are injective",
                      false, ""};
    Collector c;
    static const std::vector<std::pair<int, int>> scales = {{3, 2}, {5, 3}};
    for (auto [p, n] : scales) {
        progress(log, "scale p=" + std::to_string(p) + " n=" + std::to_string(n));
        SchurAlgebra A(n, p, p);
        HookContext C = hook_context(A);
        for (int i = 0; i < n; ++i) {
            std::string at = "(" + std::to_string(p) + "," + std::to_string(n) + ") i=" +
                             std::to_string(i);
            {
                CochainComplex R = build_R(A, i);
                auto H = complex_cohomology(R);
                c.check(!H.empty() && iso_test(H[0], C.F[i].mod),
                        at + " totalization H0 is not the simple");
                for (size_t t = 1; t < H.size(); ++t)
                    c.check(H[t].dim == 0, at + " totalization H" + std::to_string(t) +
                                               " nonzero (dim " + std::to_string(H[t].dim) + ")");
            }
            progress(log, "totalization done at i=" + std::to_string(i));
            {
                CochainComplex K = build_K(A, i);
                auto H = complex_cohomology(K);
                c.check(!H.empty() && iso_test(H[0], C.F[i].mod),
                        at + " costandard complex H0 is not the simple");
                for (size_t t = 1; t < H.size(); ++t)
                    c.check(H[t].dim == 0, at + " costandard complex H" + std::to_string(t) +
                                               " nonzero");
            }
            {
                CochainComplex M = build_M(A, i);
                auto H = complex_cohomology(M);
                c.check(!H.empty() && iso_test(H[0], C.W[i]),
                        at + " strand-term complex H0 is not the standard");
                for (size_t t = 1; t < H.size(); ++t)
                    c.check(H[t].dim == 0, at + " strand-term complex H" + std::to_string(t) +
                                               " nonzero");
            }
        }
        // Injectivity of the strand terms: no first extension from any simple.
        for (const Partition& lam : enum_lambda(A.d, A.n)) {
            AModule F = simple_general(A, lam);
            for (int j = 0; j <= n - 1; ++j) {
                ExtTable t = ext_dims(F, C.omega[j].mod, 1);
                c.check(t.dims[1] == 0, "Ext^1(simple, strand term " + std::to_string(j) +
                                            ") nonzero at (" + std::to_string(p) + "," +
                                            std::to_string(n) + ")");
            }
        }
        progress(log, "injectivity sweep done");
        clear_resolution_cache();
    }
    r.passed = c.ok;
    r.detail = c.detail;
    return r;
}

// 5. Below the characteristic the category is semisimple in low degrees.
inline CriterionResult criterion_semisimplicity(std::ostream* log = nullptr) {
    using namespace detail_verify;
    CriterionResult r{5, "low-degree Ext vanishes between simples below the characteristic",
                      false, ""};
    Collector c;
    static const std::vector<std::tuple<int, int, int>> scales = {
        {2, 3, 2}, {3, 5, 2}, {4, 5, 3}};  // (d, p, n)
    for (auto [d, p, n] : scales) {
        progress(log, "scale d=" + std::to_string(d) + " p=" + std::to_string(p) +
                          " n=" + std::to_string(n));
        SchurAlgebra A(n, d, p);
        std::vector<AModule> simples;
        for (const Partition& lam : enum_lambda(d, n)) simples.push_back(simple_general(A, lam));
        for (const AModule& M : simples) {
            for (const AModule& N : simples) {
                ExtTable t = ext_dims(M, N, 3);
                for (int q = 1; q <= 3; ++q)
                    c.check(t.dims[q] == 0,
                            "Ext^" + std::to_string(q) + "(" + part_str(M.label) + "," +
                                part_str(N.label) + ") nonzero at (d,p,n)=(" + std::to_string(d) +
                                "," + std::to_string(p) + "," + std::to_string(n) + ")");
            }
        }
        clear_resolution_cache();
    }
    r.passed = c.ok;
    r.detail = c.detail;
    return r;
}

// 6. The truncation adjoints embed the small category exactly.
inline CriterionResult criterion_recollement(std::ostream* log = nullptr) {
    using namespace detail_verify;
    CriterionResult r{6, "truncation adjoints preserve standards and costandards and restrict to the identity",
                      false, ""};
    Collector c;
    for (int p : {3, 2}) {
        progress(log, "characteristic " + std::to_string(p));
        SchurAlgebra big(3, 3, p);
        SchurAlgebra small(2, 3, p);
        Recollement R = make_recollement(big, small);
        for (const Partition& lam : enum_lambda(3, 2)) {
            std::string at = "p=" + std::to_string(p) + " lambda=" + part_str(lam);
            AModule Ssm = general_costandard(small, lam);
            AModule Wsm = general_standard(small, lam);
            AModule Sbig = general_costandard(big, lam);
            AModule Wbig = general_standard(big, lam);
            AModule Sp = jlowerstar(R, Ssm).mod;
            AModule Wp = jshriek(R, Wsm);
            c.check(iso_test(Sp, Sbig), at + ": pushforward of the costandard is wrong");
            c.check(iso_test(Wp, Wbig), at + ": extension of the standard is wrong");
            c.check(iso_test(jstar(R, Sp), Ssm), at + ": restriction does not undo pushforward");
            c.check(iso_test(jstar(R, Wp), Wsm), at + ": restriction does not undo extension");
        }
        clear_resolution_cache();
    }
    r.passed = c.ok;
    r.detail = c.detail;
    return r;
}

// 7. Derived pushforward cohomology, the adjunction dimension identity, and
//    the derived Schur-functor tables all match the expected case lists.
inline CriterionResult criterion_derived_functors(std::ostream* log = nullptr) {
    using namespace detail_verify;
    CriterionResult r{7, "derived pushforward and derived Schur-functor cohomology match the tables",
                      false, ""};
    Collector c;
    {
        progress(log, "derived pushforward at (m,n,p)=(3,2,3)");
        SchurAlgebra big(3, 3, 3);
        SchurAlgebra small(2, 3, 3);
        Recollement R = make_recollement(big, small);
        HookContext Cb = hook_context(big);
        HookContext Cs = hook_context(small);
        const int qmax = 3;
        for (char kind : {'F', 'W'}) {
            for (int i = 0; i < 2; ++i) {
                std::string at = std::string("Rj_*(") + kind + std::to_string(i) + ")";
                std::vector<AModule> H =
                    r_jlowerstar_cohomology(R, hook_module(Cs, kind, i), qmax);
                ExpectedCohomology E = rjstar_expected(2, kind, i);
                std::vector<long long> want = expected_dim_vector(E, Cb, qmax);
                for (int q = 0; q <= qmax; ++q) {
                    long long got = q < (int)H.size() ? H[q].dim : 0;
                    c.check(got == want[q], at + " H" + std::to_string(q) + " dim " +
                                                std::to_string(got) + " != " +
                                                std::to_string(want[q]));
                }
                // Identify the cohomology whenever a single labelled module
                // fills a degree.
                for (int q = 0; q <= qmax; ++q) {
                    std::vector<CohEntry> here;
                    for (const CohEntry& e : E.entries)
                        if (e.degree == q) here.push_back(e);
                    if (here.size() == 1 && q < (int)H.size())
                        c.check(iso_test(H[q], hook_module(Cb, here[0].symbol.at(0), here[0].index)),
                                at + " H" + std::to_string(q) + " has the right dimension but " +
                                    "the wrong isomorphism type");
                }
            }
        }
        progress(log, "adjunction dimension identity");
        for (auto [kind, i] : std::vector<std::pair<char, int>>{
                 {'F', 0}, {'F', 1}, {'S', 0}, {'S', 1}, {'W', 0}}) {
            const AModule& N = hook_module(Cs, kind, i);
            c.check(adjunction_ext_side(R, N, qmax) == adjunction_hom_side(R, N, qmax),
                    std::string("adjunction identity fails for ") + kind + std::to_string(i));
        }
        clear_resolution_cache();
    }
    for (auto [p, n] : hook_scales()) {
        progress(log, "derived Schur functor at p=" + std::to_string(p) +
                          " n=" + std::to_string(n));
        SchurAlgebra A(n, p, p);
        HookContext C = hook_context(A);
        for (char kind : {'S', 'F', 'W'}) {
            for (int i = 0; i < n; ++i) {
                std::vector<int> got = rs_dims(hook_module(C, kind, i), n);
                std::vector<long long> want = expected_dim_vector(rs_expected(n, kind, i), p, n);
                bool same = got.size() == want.size();
                if (same)
                    for (size_t q = 0; q < got.size(); ++q)
                        if ((long long)got[q] != want[q]) same = false;
                std::ostringstream tag;
                tag << "Rs(" << kind << i << ") at (" << p << "," << n << ") " << dims_str(got);
                c.check(same, tag.str() + " does not match the expected table");
            }
        }
        clear_resolution_cache();
    }
    if (std::getenv("SCHURKIT_EXTENDED")) {
        progress(log, "extended derived Schur functor at p=5 n=4 (long run)");
        SchurAlgebra A(4, 5, 5);
        HookContext C = hook_context(A);
        for (char kind : {'S', 'F', 'W'}) {
            for (int i = 0; i < 4; ++i) {
                std::vector<int> got = rs_dims(hook_module(C, kind, i), 4);
                std::vector<long long> want = expected_dim_vector(rs_expected(4, kind, i), 5, 4);
                bool same = got.size() == want.size();
                if (same)
                    for (size_t q = 0; q < got.size(); ++q)
                        if ((long long)got[q] != want[q]) same = false;
                c.check(same, std::string("extended Rs(") + kind + std::to_string(i) +
                                  ") mismatch at (5,4)");
            }
        }
        clear_resolution_cache();
        c.note("extended (5,4) run executed");
    } else {
        c.note("extended (5,4) run skipped; set SCHURKIT_EXTENDED=1 to enable");
    }
    r.passed = c.ok;
    r.detail = c.detail;
    return r;
}

// 8. The base-change matrix on the Grothendieck group is unimodular.
inline CriterionResult criterion_k0_unimodular(std::ostream* log = nullptr) {
    using namespace detail_verify;
    CriterionResult r{8, "K-theory base-change matrix is unimodular", false, ""};
    Collector c;
    {
        K0Matrix M = k0_matrix(3);
        c.check(M.unimodular, "p=3 matrix is not unimodular");
        c.check(M.rows == std::vector<std::vector<long long>>{{0, -1}, {1, 1}},
                "p=3 matrix entries changed");
    }
    {
        K0Matrix M = k0_matrix(5);
        c.check(M.unimodular, "p=5 matrix is not unimodular");
        c.check(M.rows == std::vector<std::vector<long long>>{
                              {0, 0, 0, -1}, {1, 0, 0, 1}, {0, 1, 0, -1}, {0, 0, 1, 1}},
                "p=5 matrix entries changed");
    }
    progress(log, "determinants " + std::to_string(k0_matrix(3).det) + " and " +
                      std::to_string(k0_matrix(5).det));
    r.passed = c.ok;
    r.detail = c.detail;
    return r;
}

// 9. The Yoneda algebra presentation: axioms, grading, nilpotency, and the
//    brute-force square of the degree-two generator.
inline CriterionResult criterion_yoneda(std::ostream* log = nullptr) {
    using namespace detail_verify;
    CriterionResult r{9, "Yoneda algebra passes unit, associativity, grading, and nilpotency checks",
                      false, ""};
    Collector c;
    for (int n = 1; n <= 5; ++n) {
        YonedaReport rep = accepted_yoneda_convention(n);
        c.check(rep.any_ok, "no index convention passes the axioms at n=" + std::to_string(n));
        c.check(yoneda_grading_consistent(n),
                "graded dimensions disagree with the self-extension table at n=" +
                    std::to_string(n));
        c.check(yoneda_diag_check(n),
                "diagonal subalgebra is not the expected truncated polynomial ring at n=" +
                    std::to_string(n));
        progress(log, "n=" + std::to_string(n) + " accepted convention: " +
                          yoneda_convention_name(rep.accepted));
    }
    // Brute-force confirmation that the degree-two generator squares to zero
    // in the self-extension algebra of the top simple at the smallest scale.
    {
        SchurAlgebra A(2, 3, 3);
        AModule F0 = hook_simple(A, 0);
        auto basis0 = ext_cocycle_basis(F0, F0, 0);
        auto basis2 = ext_cocycle_basis(F0, F0, 2);
        c.check(basis0.size() == 1 && basis2.size() == 1,
                "self-extension algebra of F0 has unexpected graded dimensions");
        if (basis0.size() == 1 && basis2.size() == 1) {
            std::vector<uint8_t> sq = yoneda_product(F0, basis2[0], 2, basis2[0], 2);
            try {
                ext_class_coords(F0, F0, 4, {}, sq);  // throws unless sq is a coboundary
            } catch (const std::exception&) {
                c.fail("the square of the degree-two generator is not a coboundary");
            }
            std::vector<uint8_t> ux = yoneda_product(F0, basis0[0], 0, basis2[0], 2);
            std::vector<uint8_t> cu = ext_class_coords(F0, F0, 2, {basis2[0]}, ux);
            c.check(cu.size() == 1 && cu[0] != 0,
                    "the unit does not act invertibly on the degree-two generator");
        }
        clear_resolution_cache();
    }
    r.passed = c.ok;
    r.detail = c.detail;
    return r;
}

// 10. Complement duality: character identities exhaustively, brute Ext
//     symmetry on the smallest rectangles, and the worked quotient example.
inline CriterionResult criterion_duality(std::ostream* log = nullptr) {
    using namespace detail_verify;
    CriterionResult r{10, "complement duality preserves characters, Ext tables, and the worked quotient",
                      false, ""};
    Collector c;
    for (int n = 1; n <= 3; ++n) {
        for (int k = 1; k <= 3; ++k) {
            for (int d = 0; d <= n * k; ++d) {
                for (const Partition& lam : enum_lambda_rect(d, n, k)) {
                    c.check(lemma32_check(lam, n, k),
                            "factorization identity fails for " + part_str(lam) + " in " +
                                std::to_string(n) + "x" + std::to_string(k));
                    c.check(sw_character_identity(lam, n, k),
                            "character identity fails for " + part_str(lam) + " in " +
                                std::to_string(n) + "x" + std::to_string(k));
                }
            }
        }
    }
    progress(log, "character identities exhausted for n,k <= 3");
    const int p = 3, qmax = 4;
    for (int d : {1, 2}) {
        const int n = 2, k = 2, dhat = n * k - d;
        progress(log, "brute symmetry at d=" + std::to_string(d) + " vs " + std::to_string(dhat));
        SchurAlgebra A(n, d, p);
        SchurAlgebra Ahat(n, dhat, p);
        auto lams = enum_lambda_rect(d, n, k);
        for (char kind : {'S', 'W', 'F'}) {
            for (const Partition& lam : lams) {
                for (const Partition& mu : lams) {
                    AModule M = labelled_module(A, kind, lam);
                    AModule N = labelled_module(A, kind, mu);
                    AModule Mh = labelled_module(Ahat, kind, hat(lam, n, k));
                    AModule Nh = labelled_module(Ahat, kind, hat(mu, n, k));
                    ExtTable left = ext_dims(M, N, qmax);
                    ExtTable right = ext_dims(Mh, Nh, qmax);
                    c.check(left.dims == right.dims,
                            std::string("duality breaks Ext tables for kind ") + kind + " (" +
                                part_str(lam) + "," + part_str(mu) + ") at d=" +
                                std::to_string(d));
                }
            }
        }
        clear_resolution_cache();
    }
    {
        progress(log, "brute symmetry at the self-complementary scale d=3, n=2, k=3");
        const int n = 2, k = 3, d = 3;
        SchurAlgebra A(n, d, p);
        auto lams = enum_lambda_rect(d, n, k);
        for (char kind : {'S', 'W', 'F'}) {
            for (const Partition& lam : lams) {
                for (const Partition& mu : lams) {
                    AModule M = labelled_module(A, kind, lam);
                    AModule N = labelled_module(A, kind, mu);
                    AModule Mh = labelled_module(A, kind, hat(lam, n, k));
                    AModule Nh = labelled_module(A, kind, hat(mu, n, k));
                    c.check(ext_dims(M, N, qmax).dims == ext_dims(Mh, Nh, qmax).dims,
                            std::string("self-complementary symmetry fails for kind ") + kind +
                                " (" + part_str(lam) + "," + part_str(mu) + ")");
                }
            }
        }
        clear_resolution_cache();
    }
    {
        // Worked example: the costandard module modulo its simple socle is the
        // next simple up the strand.
        SchurAlgebra A(2, 3, 3);
        HookContext C = hook_context(A);
        QuotientModule Q = quotient_module(C.S[0].mod, C.F[0].embed, "simple", Partition{2, 1});
        c.check(iso_test(Q.mod, C.F[1].mod),
                "costandard modulo socle is not the next simple at the smallest scale");
        clear_resolution_cache();
    }
    r.passed = c.ok;
    r.detail = c.detail;
    return r;
}

// 11. Claims that the suite deliberately does not reproduce.
inline CriterionResult criterion_scope_notes(std::ostream* log = nullptr) {
    (void)log;
    CriterionResult r{11, "scope notes for claims outside exact verification", true, ""};
    r.detail =
        "not reproduced by design: formality of the self-extension dg-algebra; the derived "
        "equivalence with the graded module category; the symmetric-group-equivariant "
        "structure on derived Schur-functor cohomology (dimensions only here); and the "
        "comparison with the cohomology of the symmetric group";
    return r;
}

// Run the whole suite in order.  Each criterion is isolated: an unexpected
// exception fails that criterion only, and the resolution cache is flushed
// between criteria so no stale algebra data can leak across.
inline std::vector<CriterionResult> run_acceptance(std::ostream* log = nullptr) {
    using Fn = CriterionResult (*)(std::ostream*);
    static const std::vector<Fn> steps = {
        &criterion_formula_vs_oracle,      &criterion_character_decomposition,
        &criterion_differential_identities, &criterion_resolution_suite,
        &criterion_semisimplicity,         &criterion_recollement,
        &criterion_derived_functors,       &criterion_k0_unimodular,
        &criterion_yoneda,                 &criterion_duality,
        &criterion_scope_notes};
    std::vector<CriterionResult> out;
    for (size_t t = 0; t < steps.size(); ++t) {
        if (log) *log << "[criterion " << (t + 1) << "]" << std::endl;
        CriterionResult r;
        try {
            r = steps[t](log);
        } catch (const std::exception& e) {
            r.number = (int)t + 1;
            r.name = "criterion " + std::to_string(t + 1);
            r.passed = false;
            r.detail = std::string("unexpected exception: ") + e.what();
        }
        clear_resolution_cache();
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace schurkit
