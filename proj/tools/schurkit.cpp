// schurkit: command-line front end for the hook-block homological tables.
//
// Subcommands: blocks, ext, sw, yoneda, rs, rjstar, character, verify.
// stdout carries data only; progress and diagnostics go to stderr.
// Exit codes: 0 success, 1 mathematical mismatch, 2 usage error,
//             3 resource budget exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <schurkit/verify.hpp>

using nlohmann::json;
using namespace schurkit;

namespace {

constexpr const char* kVersion = "schurkit 1.0.0";

// Thrown for argument problems discovered after CLI11 parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Thrown when two tables that must agree do not.
struct MismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    int p = 0;
    int n = 0;
    int d = -1;
    int k = 0;
    int qmax = -1;
    std::string format = "pretty";
    std::string cache_dir;
    long long budget = kDefaultBudget;
    bool dump_full = false;
};

int require_p(const Config& cfg) {
    if (cfg.p < 2) throw UsageError("this command needs a prime -p");
    return cfg.p;
}
int require_n(const Config& cfg) {
    if (cfg.n < 1) throw UsageError("this command needs -n >= 1");
    return cfg.n;
}
int require_k(const Config& cfg) {
    if (cfg.k < 1) throw UsageError("this command needs -k >= 1");
    return cfg.k;
}

// ----- label parsing -------------------------------------------------------

// "2,1" -> {2,1}; "0" -> empty partition.
Partition parse_partition(const std::string& s) {
    if (s == "0" || s == "()") return {};
    Partition out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size() || v <= 0) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw UsageError("cannot parse partition part '" + tok + "' in '" + s + "'");
        }
    }
    if (out.empty()) throw UsageError("empty partition spec '" + s + "' (use 0 for the empty partition)");
    for (size_t i = 1; i < out.size(); ++i)
        if (out[i] > out[i - 1]) throw UsageError("partition parts must be weakly decreasing: " + s);
    return out;
}

// A module label: hook shorthand F0/S1/W2, or KIND:parts e.g. S:2,1.
struct LabelRef {
    char kind = 'F';
    int hook = -1;   // hook strand index, or -1 when lam is used
    Partition lam;

    bool is_hook() const { return hook >= 0; }
    std::string str() const {
        if (is_hook()) return std::string(1, kind) + std::to_string(hook);
        return std::string(1, kind) + part_str(lam);
    }
};

LabelRef parse_label(const std::string& s) {
    if (s.empty()) throw UsageError("empty module label");
    char kind = char(std::toupper(s[0]));
    if (kind != 'F' && kind != 'S' && kind != 'W')
        throw UsageError("module label must start with F, S, or W: '" + s + "'");
    LabelRef ref;
    ref.kind = kind;
    std::string rest = s.substr(1);
    if (!rest.empty() && rest[0] == ':') {
        ref.lam = parse_partition(rest.substr(1));
        return ref;
    }
    try {
        size_t pos = 0;
        int v = std::stoi(rest, &pos);
        if (pos != rest.size() || v < 0) throw std::invalid_argument(rest);
        ref.hook = v;
    } catch (const std::exception&) {
        throw UsageError("cannot parse module label '" + s +
                         "' (use hook shorthand like F0, or KIND:parts like S:2,1)");
    }
    return ref;
}

// The degree a label lives in: p for hooks, |lam| otherwise.
int label_degree(const LabelRef& ref, int p) {
    if (ref.is_hook()) return p;
    return weight(ref.lam);
}

AModule realize_label(const SchurAlgebra& A, const LabelRef& ref) {
    if (ref.is_hook()) {
        if (ref.hook >= A.n)
            throw UsageError("hook index " + std::to_string(ref.hook) + " needs n > " +
                             std::to_string(ref.hook));
        switch (ref.kind) {
            case 'F': return hook_simple(A, ref.hook);
            case 'S': return hook_costandard(A, ref.hook);
            case 'W': return kuhn_dual(hook_costandard(A, ref.hook));
        }
    }
    switch (ref.kind) {
        case 'F': return simple_general(A, ref.lam);
        case 'S': return general_costandard(A, ref.lam);
        case 'W': return general_standard(A, ref.lam);
    }
    throw UsageError("unknown label kind");
}

// ----- serialization helpers ------------------------------------------------

json partition_json(const Partition& a) { return json(a); }

std::string partition_pretty(const Partition& a) {
    if (a.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    return s;
}

json ext_table_json(const std::string& la, const std::string& lb, const ExtTable& t) {
    json dims = json::object();
    for (int q = 0; q < (int)t.dims.size(); ++q)
        if (t.dims[q] != 0) dims[std::to_string(q)] = t.dims[q];
    return json{{"pair", {la, lb}}, {"dims", dims}, {"qmax", t.qmax}};
}

void print_ext_table(std::ostream& os, const Config& cfg, const std::string& la,
                     const std::string& lb, const ExtTable& t) {
    if (cfg.format == "json") {
        os << ext_table_json(la, lb, t).dump(2) << "\n";
        return;
    }
    if (cfg.format == "csv") {
        os << "labelA,labelB,q,dim\n";
        for (int q = 0; q < (int)t.dims.size(); ++q)
            os << la << "," << lb << "," << q << "," << t.dims[q] << "\n";
        return;
    }
    os << "Ext(" << la << "," << lb << ") qmax=" << t.qmax << "\n";
    std::string dense;
    bool any = false;
    for (int q = 0; q < (int)t.dims.size(); ++q) {
        if (q) dense += ",";
        dense += std::to_string(t.dims[q]);
        if (t.dims[q]) any = true;
    }
    os << "dims: " << dense << "\n";
    for (int q = 0; q < (int)t.dims.size(); ++q)
        if (t.dims[q]) os << "q=" << q << ": " << t.dims[q] << "\n";
    if (!any) os << "(zero table)\n";
}

json sympoly_json(const SymPolynomial& f) {
    json terms = json::array();
    for (const auto& [e, c] : f.terms) terms.push_back(json{{"exp", e}, {"coef", c}});
    return json{{"vars", f.n_vars}, {"terms", terms}};
}

void print_sympoly(std::ostream& os, const Config& cfg, const SymPolynomial& f) {
    if (cfg.format == "json") {
        os << sympoly_json(f).dump(2) << "\n";
        return;
    }
    if (cfg.format == "csv") {
        for (int i = 0; i < f.n_vars; ++i) os << "x" << (i + 1) << ",";
        os << "coef\n";
        for (const auto& [e, c] : f.terms) {
            for (int v : e) os << v << ",";
            os << c << "\n";
        }
        return;
    }
    if (f.terms.empty()) {
        os << "0\n";
        return;
    }
    for (const auto& [e, c] : f.terms) {
        os << "(";
        for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
        os << "): " << c << "\n";
    }
}

uint64_t fnv64(const void* data, size_t len, uint64_t h = 1469598103934665603ULL) {
    const uint8_t* b = static_cast<const uint8_t*>(data);
    for (size_t i = 0; i < len; ++i) {
        h ^= b[i];
        h *= 1099511628211ULL;
    }
    return h;
}

std::string matrix_digest(const FpMat& m) {
    uint64_t h = fnv64(&m, 0);
    int shape[3] = {m.rows(), m.cols(), m.modulus()};
    h = fnv64(shape, sizeof shape, h);
    for (int r = 0; r < m.rows(); ++r) h = fnv64(m.row(r), size_t(m.cols()), h);
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

json module_dump_json(const AModule& M, bool full) {
    json j{{"dim", M.dim},
           {"kind", M.kind},
           {"label", partition_json(M.label)},
           {"character", sympoly_json(M.weight_character())}};
    json digests = json::array();
    for (int b = 0; b < M.A->dim; ++b) digests.push_back(matrix_digest(M.act.dense(b)));
    j["act_digests"] = digests;
    if (full) {
        json mats = json::array();
        for (int b = 0; b < M.A->dim; ++b) {
            FpMat m = M.act.dense(b);
            json rows = json::array();
            for (int r = 0; r < m.rows(); ++r) {
                json row = json::array();
                for (int c = 0; c < m.cols(); ++c) row.push_back(int(m.at(r, c)));
                rows.push_back(row);
            }
            mats.push_back(rows);
        }
        j["act_matrices"] = mats;
    }
    return j;
}

// ----- result cache ---------------------------------------------------------

// Replays the stdout of a previous identical invocation.  Keyed by the full
// argument vector and the tool version; safe because every command is
// deterministic given its flags.
struct ResultCache {
    std::string dir;
    std::string key;

    static std::string make_key(int argc, char** argv) {
        uint64_t h = fnv64(kVersion, std::string(kVersion).size());
        for (int i = 1; i < argc; ++i) {
            std::string a = argv[i];
            if (a == "--cache-dir") {  // the cache location must not key the cache
                ++i;
                continue;
            }
            h = fnv64(a.data(), a.size(), h);
            h = fnv64("\x1f", 1, h);
        }
        std::ostringstream os;
        os << std::hex << h;
        return os.str();
    }

    std::optional<std::pair<std::string, int>> lookup() const {
        if (dir.empty()) return std::nullopt;
        std::ifstream in(dir + "/" + key + ".json");
        if (!in) return std::nullopt;
        try {
            json j = json::parse(in);
            return std::make_pair(j.at("stdout").get<std::string>(), j.at("exit").get<int>());
        } catch (const std::exception&) {
            return std::nullopt;  // unreadable entries are ignored, not fatal
        }
    }

    void store(const std::string& out, int code) const {
        if (dir.empty()) return;
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        if (ec) return;
        std::ofstream f(dir + "/" + key + ".json");
        if (!f) return;
        f << json{{"stdout", out}, {"exit", code}}.dump() << "\n";
    }
};

// ----- subcommand payloads ---------------------------------------------------

int cmd_blocks(std::ostream& out, const Config& cfg) {
    int p = require_p(cfg);
    int n = require_n(cfg);
    if (cfg.d < 0) throw UsageError("blocks needs -d");
    auto bl = blocks(cfg.d, n, p);
    auto alpha_str = [&](const Partition& lam) -> std::string {
        int a = alpha(lam, p, n);
        return a == alpha_unconstrained ? "unconstrained" : std::to_string(a);
    };
    if (cfg.format == "json") {
        json j = json::array();
        for (const auto& block : bl) {
            json members = json::array();
            for (const auto& lam : block) members.push_back(partition_json(lam));
            int a = alpha(block[0], p, n);
            json aj = a == alpha_unconstrained ? json("unconstrained") : json(a);
            j.push_back(json{{"core", partition_json(p_core(block[0], p))},
                             {"alpha", aj},
                             {"members", members}});
        }
        out << j.dump(2) << "\n";
        return 0;
    }
    if (cfg.format == "csv") {
        out << "block,member,core,alpha\n";
        for (size_t b = 0; b < bl.size(); ++b)
            for (const auto& lam : bl[b])
                out << b << "," << partition_pretty(lam) << "," << partition_pretty(p_core(lam, p))
                    << "," << alpha_str(lam) << "\n";
        return 0;
    }
    out << bl.size() << " block(s) of Lambda(" << cfg.d << "," << n << ") at p=" << p << "\n";
    for (size_t b = 0; b < bl.size(); ++b) {
        out << "block " << b << " [core " << part_str(p_core(bl[b][0], p)) << ", alpha "
            << alpha_str(bl[b][0]) << "]:";
        for (const auto& lam : bl[b]) out << " " << part_str(lam);
        out << "\n";
    }
    return 0;
}

ExtTable closed_hook_table(char a, char b, int n, int i, int j, int qmax) {
    if (a == 'F' && b == 'S') return ext_FS(n, i, j, qmax);
    if (a == 'F' && b == 'F') return ext_FF(n, i, j, qmax);
    if (a == 'S' && b == 'S') return ext_SS(n, i, j, qmax);
    if (a == 'S' && b == 'F') return ext_SF(n, i, j, qmax);
    if (a == 'F' && b == 'W') return ext_FW(n, i, j, qmax);
    if (a == 'S' && b == 'W') return ext_SW(n, i, j, qmax);
    throw UsageError(std::string("no closed table for the pair (") + a + "," + b +
                     "); closed tables cover FS, FF, SS, SF, FW, SW");
}

int cmd_ext(std::ostream& out, const Config& cfg, const std::string& mode, const LabelRef& la,
            const LabelRef& lb, bool compare) {
    int n = require_n(cfg);
    int qmax = cfg.qmax >= 0 ? cfg.qmax : 2 * n;
    std::optional<ExtTable> closed, brute;
    if (compare || mode == "closed") {
        if (!la.is_hook() || !lb.is_hook())
            throw UsageError("closed tables take hook labels (like F0, S1, W2)");
        if (la.hook >= n || lb.hook >= n) throw UsageError("hook index out of range for -n");
        closed = closed_hook_table(la.kind, lb.kind, n, la.hook, lb.hook, qmax);
    }
    if (compare || mode == "brute") {
        int p = require_p(cfg);
        int da = label_degree(la, p), db = label_degree(lb, p);
        if (da != db)
            throw UsageError("labels live in different degrees (" + std::to_string(da) + " vs " +
                             std::to_string(db) + ")");
        if (cfg.d >= 0 && cfg.d != da)
            throw UsageError("-d disagrees with the labels' degree " + std::to_string(da));
        SchurAlgebra A(n, da, p);
        AModule M = realize_label(A, la);
        AModule N = realize_label(A, lb);
        std::cerr << "resolving " << la.str() << " to length " << (qmax + 1) << " over S(" << n
                  << "," << da << ") at p=" << p << " ..." << std::endl;
        brute = ext_dims(M, N, qmax, cfg.budget);
        clear_resolution_cache();
    }
    if (compare) {
        bool match = closed->dims == brute->dims;
        if (cfg.format == "json") {
            json j{{"closed", ext_table_json(la.str(), lb.str(), *closed)},
                   {"brute", ext_table_json(la.str(), lb.str(), *brute)},
                   {"match", match}};
            out << j.dump(2) << "\n";
        } else {
            print_ext_table(out, cfg, la.str(), lb.str(), *brute);
            out << (match ? "MATCH" : "MISMATCH") << "\n";
        }
        return match ? 0 : 1;
    }
    print_ext_table(out, cfg, la.str(), lb.str(), mode == "closed" ? *closed : *brute);
    return 0;
}

int cmd_sw_hat(std::ostream& out, const Config& cfg, const Partition& lam) {
    int n = require_n(cfg), k = require_k(cfg);
    Partition h = hat(lam, n, k);
    if (cfg.format == "json")
        out << json{{"lambda", partition_json(lam)}, {"hat", partition_json(h)}}.dump(2) << "\n";
    else if (cfg.format == "csv")
        out << "lambda,hat\n" << partition_pretty(lam) << "," << partition_pretty(h) << "\n";
    else
        out << partition_pretty(h) << "\n";
    return 0;
}

int cmd_sw_lr(std::ostream& out, const Config& cfg, const Partition& lam) {
    int n = require_n(cfg), k = require_k(cfg);
    Partition rect(k, n);
    auto exp = lr_expand_skew(rect, lam);
    Partition target = hat(lam, n, k);
    if (cfg.format == "json") {
        json j = json::array();
        for (const auto& [mu, c] : exp)
            j.push_back(json{{"mu", partition_json(mu)},
                             {"coef", c},
                             {"columns_le_n", mu.empty() || mu[0] <= n},
                             {"is_complement", mu == target}});
        out << j.dump(2) << "\n";
        return 0;
    }
    if (cfg.format == "csv") {
        out << "mu,coef,columns_le_n,is_complement\n";
        for (const auto& [mu, c] : exp)
            out << partition_pretty(mu) << "," << c << "," << (mu.empty() || mu[0] <= n) << ","
                << (mu == target) << "\n";
        return 0;
    }
    out << "rectangle " << n << "x" << k << " skew " << part_str(lam) << ":\n";
    for (const auto& [mu, c] : exp) {
        out << "  " << part_str(mu) << "  x" << c;
        if (!mu.empty() && mu[0] > n) out << "  (more than " << n << " columns)";
        if (mu == target) out << "  <- complement";
        out << "\n";
    }
    return 0;
}

int cmd_sw_char(std::ostream& out, const Config& cfg, const Partition& lam) {
    int n = require_n(cfg), k = require_k(cfg);
    bool lr_ok = lemma32_check(lam, n, k);
    bool ch_ok = sw_character_identity(lam, n, k);
    if (cfg.format == "json")
        out << json{{"lambda", partition_json(lam)},
                    {"factorization", lr_ok},
                    {"character_identity", ch_ok}}
                   .dump(2)
            << "\n";
    else
        out << "factorization: " << (lr_ok ? "OK" : "FAIL") << "\n"
            << "character identity: " << (ch_ok ? "OK" : "FAIL") << "\n";
    return lr_ok && ch_ok ? 0 : 1;
}

int cmd_sw_ext(std::ostream& out, const Config& cfg, char kind, const Partition& lam,
               const Partition& mu, bool run_brute) {
    int n = require_n(cfg), k = require_k(cfg), p = require_p(cfg);
    int qmax = cfg.qmax >= 0 ? cfg.qmax : 2 * n;
    SWQuery q = sw_ext_symmetry_expected(lam, mu, n, k, std::string(1, kind), p, qmax);
    json j{{"kind", std::string(1, kind)},
           {"n", n},
           {"k", k},
           {"p", p},
           {"d", q.d},
           {"d_hat", q.dhat},
           {"lambda", partition_json(q.lam)},
           {"mu", partition_json(q.mu)},
           {"lambda_hat", partition_json(q.lam_hat)},
           {"mu_hat", partition_json(q.mu_hat)}};
    if (q.left_closed)
        j["closed_left"] =
            ext_table_json(kind + part_str(q.lam), kind + part_str(q.mu), q.left_expected);
    if (q.right_closed)
        j["closed_right"] =
            ext_table_json(kind + part_str(q.lam_hat), kind + part_str(q.mu_hat), q.right_expected);
    std::optional<bool> match;
    json jl, jr;
    if (run_brute) {
        LabelRef refa{kind, -1, q.lam}, refb{kind, -1, q.mu};
        LabelRef refah{kind, -1, q.lam_hat}, refbh{kind, -1, q.mu_hat};
        SchurAlgebra A(n, q.d, p);
        AModule M = realize_label(A, refa), N = realize_label(A, refb);
        std::cerr << "resolving over S(" << n << "," << q.d << ") ..." << std::endl;
        ExtTable left = ext_dims(M, N, qmax, cfg.budget);
        clear_resolution_cache();
        SchurAlgebra Ah(n, q.dhat, p);
        AModule Mh = realize_label(Ah, refah), Nh = realize_label(Ah, refbh);
        std::cerr << "resolving over S(" << n << "," << q.dhat << ") ..." << std::endl;
        ExtTable right = ext_dims(Mh, Nh, qmax, cfg.budget);
        clear_resolution_cache();
        match = left.dims == right.dims;
        if (q.left_closed && left.dims != q.left_expected.dims) match = false;
        if (q.right_closed && right.dims != q.right_expected.dims) match = false;
        jl = ext_table_json(refa.str(), refb.str(), left);
        jr = ext_table_json(refah.str(), refbh.str(), right);
        j["brute_left"] = jl;
        j["brute_right"] = jr;
        j["match"] = *match;
    }
    if (cfg.format == "json") {
        out << j.dump(2) << "\n";
    } else {
        out << "duality pair at n=" << n << " k=" << k << ": degree " << q.d << " <-> " << q.dhat
            << "\n";
        out << "  " << kind << part_str(q.lam) << " -> " << kind << part_str(q.lam_hat) << "\n";
        out << "  " << kind << part_str(q.mu) << " -> " << kind << part_str(q.mu_hat) << "\n";
        if (q.left_closed) {
            out << "closed table (left):\n";
            print_ext_table(out, cfg, kind + part_str(q.lam), kind + part_str(q.mu),
                            q.left_expected);
        }
        if (match) out << (*match ? "MATCH" : "MISMATCH") << "\n";
    }
    return match && !*match ? 1 : 0;
}

int cmd_yoneda(std::ostream& out, const Config& cfg, bool table, const std::string& conv_flag) {
    int n = require_n(cfg);
    if (n > 40) throw UsageError("yoneda: n too large for a printable table");
    YonedaReport rep = accepted_yoneda_convention(n);
    YonedaConvention conv = rep.accepted;
    if (conv_flag == "verbatim") conv = YonedaConvention::verbatim;
    else if (conv_flag == "swapped") conv = YonedaConvention::swapped;
    else if (!conv_flag.empty()) throw UsageError("--convention must be verbatim or swapped");
    YonedaB B = yoneda_B(n, conv);
    auto sym_str = [](const YonedaB::Sym& s) {
        return "b^" + std::to_string(s.t) + "[" + std::to_string(s.j) + "," + std::to_string(s.i) +
               "]";
    };
    if (cfg.format == "json") {
        json basis = json::array();
        for (const auto& s : B.basis) basis.push_back(json{{"t", s.t}, {"j", s.j}, {"i", s.i}});
        json j{{"n", n},
               {"convention", yoneda_convention_name(conv)},
               {"axioms_ok", rep.any_ok},
               {"dim", B.dim()},
               {"basis", basis}};
        if (table) {
            json prods = json::array();
            for (int x = 0; x < B.dim(); ++x)
                for (int y = 0; y < B.dim(); ++y)
                    if (B.mult[x][y] >= 0)
                        prods.push_back(json{{"left", x}, {"right", y}, {"result", B.mult[x][y]}});
            j["products"] = prods;
        }
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "self-extension algebra basis at n=" << n << " (" << B.dim() << " elements, "
        << yoneda_convention_name(conv) << " convention)\n";
    for (int x = 0; x < B.dim(); ++x) out << "  [" << x << "] " << sym_str(B.basis[x]) << "\n";
    if (table) {
        out << "nonzero products:\n";
        for (int x = 0; x < B.dim(); ++x)
            for (int y = 0; y < B.dim(); ++y)
                if (B.mult[x][y] >= 0)
                    out << "  " << sym_str(B.basis[x]) << " * " << sym_str(B.basis[y]) << " = "
                        << sym_str(B.basis[B.mult[x][y]]) << "\n";
    }
    return 0;
}

int cmd_rs(std::ostream& out, const Config& cfg, const LabelRef& ref, bool run_brute) {
    int n = require_n(cfg), p = require_p(cfg);
    if (!ref.is_hook()) throw UsageError("rs takes a hook label like F0, S1, W2");
    if (ref.hook >= n) throw UsageError("hook index out of range for -n");
    int qmax = cfg.qmax >= 0 ? cfg.qmax : n;
    ExpectedCohomology E = rs_expected(n, ref.kind, ref.hook);
    std::vector<long long> want = expected_dim_vector(E, p, qmax);
    json entries = json::array();
    for (const auto& e : E.entries)
        entries.push_back(json{{"degree", e.degree}, {"symbol", e.symbol}, {"index", e.index}});
    std::optional<std::vector<int>> got;
    if (run_brute) {
        SchurAlgebra A(n, p, p);
        HookContext C = hook_context(A);
        std::cerr << "resolving the tensor power over S(" << n << "," << p << ") ..." << std::endl;
        got = rs_dims(detail_verify::hook_module(C, ref.kind, ref.hook), qmax, cfg.budget);
        clear_resolution_cache();
    }
    bool match = true;
    if (got) {
        match = got->size() == want.size();
        if (match)
            for (size_t q = 0; q < want.size(); ++q)
                if ((long long)(*got)[q] != want[q]) match = false;
    }
    if (cfg.format == "json") {
        json j{{"label", ref.str()}, {"entries", entries}, {"expected_dims", want}};
        if (got) {
            j["brute_dims"] = *got;
            j["match"] = match;
        }
        out << j.dump(2) << "\n";
    } else {
        out << "derived Schur-functor cohomology of " << ref.str() << " at p=" << p << " n=" << n
            << "\n";
        for (const auto& e : E.entries)
            out << "  degree " << e.degree << ": " << e.symbol << e.index << "\n";
        out << "expected dims:";
        for (long long v : want) out << " " << v;
        out << "\n";
        if (got) {
            out << "computed dims:";
            for (int v : *got) out << " " << v;
            out << "\n" << (match ? "MATCH" : "MISMATCH") << "\n";
        }
    }
    return match ? 0 : 1;
}

int cmd_rjstar(std::ostream& out, const Config& cfg, const LabelRef& ref, int big_n,
               bool run_brute) {
    int n = require_n(cfg);
    if (!ref.is_hook()) throw UsageError("rjstar takes a hook label like F0 or W1");
    if (ref.kind == 'S') throw UsageError("rjstar tables cover the F and W strands");
    if (ref.hook >= n) throw UsageError("hook index out of range for -n");
    ExpectedCohomology E = rjstar_expected(n, ref.kind, ref.hook);
    json entries = json::array();
    for (const auto& e : E.entries)
        entries.push_back(json{{"degree", e.degree}, {"symbol", e.symbol}, {"index", e.index}});
    std::optional<std::vector<long long>> got;
    std::optional<std::vector<long long>> want;
    bool match = true;
    if (run_brute) {
        int p = require_p(cfg);
        int m = big_n > 0 ? big_n : n + 1;
        if (m <= n) throw UsageError("--big-n must exceed -n");
        int qmax = cfg.qmax >= 0 ? cfg.qmax : 2 * n - 1;
        SchurAlgebra big(m, p, p), small(n, p, p);
        Recollement R = make_recollement(big, small);
        HookContext Cb = hook_context(big), Cs = hook_context(small);
        std::cerr << "computing derived pushforward over S(" << m << "," << p << ") ..."
                  << std::endl;
        auto H = r_jlowerstar_cohomology(R, detail_verify::hook_module(Cs, ref.kind, ref.hook),
                                         qmax, cfg.budget);
        got = std::vector<long long>{};
        for (const auto& Hq : H) got->push_back(Hq.dim);
        want = expected_dim_vector(E, Cb, qmax);
        // The cohomology vector may be shorter than the degree window; missing
        // top degrees are zero.
        size_t width = std::max(got->size(), want->size());
        got->resize(width, 0);
        want->resize(width, 0);
        match = *got == *want;
        clear_resolution_cache();
    }
    if (cfg.format == "json") {
        json j{{"label", ref.str()}, {"entries", entries}};
        if (got) {
            j["expected_dims"] = *want;
            j["brute_dims"] = *got;
            j["match"] = match;
        }
        out << j.dump(2) << "\n";
    } else {
        out << "derived pushforward cohomology of " << ref.str() << " from n=" << n << "\n";
        for (const auto& e : E.entries)
            out << "  degree " << e.degree << ": " << e.symbol << e.index << "\n";
        if (got) {
            out << "expected dims:";
            for (long long v : *want) out << " " << v;
            out << "\ncomputed dims:";
            for (long long v : *got) out << " " << v;
            out << "\n" << (match ? "MATCH" : "MISMATCH") << "\n";
        }
    }
    return match ? 0 : 1;
}

int cmd_character(std::ostream& out, const Config& cfg, const LabelRef& ref) {
    int n = require_n(cfg);
    SymPolynomial f;
    std::optional<AModule> M;
    std::optional<SchurAlgebra> A;
    if (ref.kind != 'F' && !ref.is_hook() && cfg.p < 2) {
        // Standard and costandard characters do not depend on the characteristic.
        if (!ref.lam.empty() && ref.lam[0] > n)
            throw UsageError("label has more than n columns");
        f = char_costandard(ref.lam, n);
    } else {
        int p = require_p(cfg);
        int d = label_degree(ref, p);
        if (cfg.d >= 0 && cfg.d != d)
            throw UsageError("-d disagrees with the label's degree " + std::to_string(d));
        A.emplace(n, d, p);
        M = realize_label(*A, ref);
        f = M->weight_character();
    }
    if (cfg.dump_full) {
        if (!M) throw UsageError("--dump-full needs -p to realize the module");
        json j{{"label", ref.str()}, {"module", module_dump_json(*M, true)}};
        out << j.dump(2) << "\n";
        return 0;
    }
    print_sympoly(out, cfg, f);
    return 0;
}

int cmd_verify(std::ostream& out, const Config& cfg, const std::string& suite) {
    (void)cfg;
    std::vector<CriterionResult> results;
    auto run_scale = [&](int p, int n) {
        std::cerr << "oracle suite at p=" << p << " n=" << n << std::endl;
        CriterionResult r{1, "closed Ext tables match the brute-force oracle at p=" +
                                 std::to_string(p) + " n=" + std::to_string(n),
                          false, ""};
        detail_verify::Collector c;
        SchurAlgebra A(n, p, p);
        HookContext C = hook_context(A);
        const int qmax = 2 * n;
        static const std::vector<std::pair<char, char>> pairs = {
            {'F', 'S'}, {'F', 'F'}, {'S', 'S'}, {'S', 'F'}, {'F', 'W'}, {'S', 'W'}};
        for (auto [a, b] : pairs)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    ExtTable brute = ext_dims(detail_verify::hook_module(C, a, i),
                                              detail_verify::hook_module(C, b, j), qmax);
                    ExtTable closed = detail_verify::closed_pair_table(a, b, n, i, j, qmax);
                    c.check(brute.dims == closed.dims,
                            std::string("Ext(") + a + std::to_string(i) + "," + b +
                                std::to_string(j) + ") disagrees");
                }
        clear_resolution_cache();
        r.passed = c.ok;
        r.detail = c.detail;
        results.push_back(r);
    };
    if (suite.empty() || suite == "all") {
        results = run_acceptance(&std::cerr);
    } else if (suite == "quick") {
        for (auto fn : {&criterion_character_decomposition, &criterion_differential_identities,
                        &criterion_semisimplicity, &criterion_recollement, &criterion_k0_unimodular,
                        &criterion_yoneda, &criterion_duality, &criterion_scope_notes})
            results.push_back(fn(&std::cerr));
        clear_resolution_cache();
    } else if (suite.size() > 2 && suite[0] == 'p' && suite.find('n') != std::string::npos) {
        size_t at = suite.find('n');
        int p = 0, n = 0;
        try {
            p = std::stoi(suite.substr(1, at - 1));
            n = std::stoi(suite.substr(at + 1));
        } catch (const std::exception&) {
            throw UsageError("cannot parse suite scale '" + suite + "' (expected like p3n2)");
        }
        if (p < 2 || n < 1) throw UsageError("suite scale out of range");
        run_scale(p, n);
    } else {
        // Comma-separated criterion numbers.
        static const std::vector<CriterionResult (*)(std::ostream*)> all = {
            &criterion_formula_vs_oracle,       &criterion_character_decomposition,
            &criterion_differential_identities, &criterion_resolution_suite,
            &criterion_semisimplicity,          &criterion_recollement,
            &criterion_derived_functors,        &criterion_k0_unimodular,
            &criterion_yoneda,                  &criterion_duality,
            &criterion_scope_notes};
        std::stringstream ss(suite);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            int num = 0;
            try {
                num = std::stoi(tok);
            } catch (const std::exception&) {
                throw UsageError("suite must be all, quick, a scale like p3n2, or criterion numbers");
            }
            if (num < 1 || num > (int)all.size())
                throw UsageError("criterion number out of range: " + tok);
            results.push_back(all[num - 1](&std::cerr));
            clear_resolution_cache();
        }
        if (results.empty()) throw UsageError("empty suite selection");
    }
    bool all_ok = true;
    if (cfg.format == "json") {
        json j = json::array();
        for (const auto& r : results) {
            j.push_back(json{{"number", r.number},
                             {"name", r.name},
                             {"passed", r.passed},
                             {"detail", r.detail}});
            all_ok = all_ok && r.passed;
        }
        out << j.dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            out << (r.passed ? "[PASS]" : "[FAIL]") << " criterion " << r.number << ": " << r.name;
            if (!r.detail.empty()) out << " -- " << r.detail;
            out << "\n";
            all_ok = all_ok && r.passed;
        }
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact homological tables for hook blocks of Schur algebras"};
    app.set_version_flag("--version", kVersion);
    app.fallthrough();
    app.require_subcommand(1);

    Config cfg;
    app.add_option("-p", cfg.p, "characteristic (prime)");
    app.add_option("-n", cfg.n, "number of variables / truncation size");
    app.add_option("-d", cfg.d, "polynomial degree (defaults to the labels' degree)");
    app.add_option("-k", cfg.k, "row bound of the duality rectangle");
    app.add_option("--qmax", cfg.qmax, "largest cohomological degree");
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"pretty", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--cache-dir", cfg.cache_dir, "replay cache directory (env SCHURKIT_CACHE)")
        ->envname("SCHURKIT_CACHE");
    app.add_option("--budget", cfg.budget, "resource budget in matrix entries")
        ->capture_default_str();
    app.add_flag("--dump-full", cfg.dump_full, "include full matrices in module dumps");

    // blocks
    auto* sc_blocks = app.add_subcommand("blocks", "block partition of the weight poset");

    // ext
    auto* sc_ext = app.add_subcommand("ext", "Ext tables between labelled modules");
    std::string ext_mode;
    std::vector<std::string> ext_labels;
    bool ext_compare = false;
    sc_ext->add_option("mode", ext_mode, "closed or brute (optional with --compare)");
    sc_ext->add_option("labels", ext_labels, "two module labels")->expected(0, 2);
    sc_ext->add_flag("--compare", ext_compare, "run both backends and diff");

    // sw
    auto* sc_sw = app.add_subcommand("sw", "complement duality queries");
    std::string sw_mode;
    std::vector<std::string> sw_args;
    bool sw_brute = false;
    sc_sw->add_option("mode", sw_mode, "hat, lr, char, or ext")->required();
    sc_sw->add_option("args", sw_args, "partition(s) / kind and partitions")->expected(0, 3);
    sc_sw->add_flag("--brute", sw_brute, "also run the brute-force tables (sw ext)");

    // yoneda
    auto* sc_yoneda = app.add_subcommand("yoneda", "self-extension algebra of the simple strand");
    bool yoneda_table = false;
    std::string yoneda_conv;
    sc_yoneda->add_flag("--table", yoneda_table, "print the full product table");
    sc_yoneda->add_option("--convention", yoneda_conv, "index convention: verbatim or swapped");

    // rs
    auto* sc_rs = app.add_subcommand("rs", "derived Schur-functor cohomology of a hook module");
    std::string rs_label;
    bool rs_brute = false;
    sc_rs->add_option("label", rs_label, "hook label (F0, S1, W2)")->required();
    sc_rs->add_flag("--brute", rs_brute, "compute by resolution and compare");

    // rjstar
    auto* sc_rjstar = app.add_subcommand("rjstar", "derived pushforward cohomology of a hook module");
    std::string rjstar_label;
    int rjstar_big = 0;
    bool rjstar_brute = false;
    sc_rjstar->add_option("label", rjstar_label, "hook label (F0 or W1)")->required();
    sc_rjstar->add_option("--big-n", rjstar_big, "target truncation size (default n+1)");
    sc_rjstar->add_flag("--brute", rjstar_brute, "compute by resolution and compare");

    // character
    auto* sc_character = app.add_subcommand("character", "weight character of a labelled module");
    std::string character_label;
    sc_character->add_option("label", character_label, "module label (F0 or S:2,1)")->required();

    // verify
    auto* sc_verify = app.add_subcommand("verify", "run the acceptance suite");
    std::string verify_suite;
    sc_verify->add_option("--suite", verify_suite,
                          "all, quick, a scale like p3n2, or criterion numbers like 1,4");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        app.exit(e);
        return 2;
    }

    ResultCache cache;
    cache.dir = cfg.cache_dir;
    cache.key = ResultCache::make_key(argc, argv);
    if (auto hit = cache.lookup()) {
        std::cerr << "replaying cached result" << std::endl;
        std::cout << hit->first;
        return hit->second;
    }

    std::ostringstream captured;
    int code = 0;
    try {
        if (*sc_blocks) {
            code = cmd_blocks(captured, cfg);
        } else if (*sc_ext) {
            if (!ext_compare && ext_mode != "closed" && ext_mode != "brute") {
                if (ext_mode.empty())
                    throw UsageError("ext needs a mode (closed or brute) or --compare");
                // With --compare absent, a non-mode first token is a stray label.
                throw UsageError("unknown ext mode '" + ext_mode + "' (use closed or brute)");
            }
            std::vector<std::string> labels = ext_labels;
            if (ext_compare && !ext_mode.empty() && ext_mode != "closed" && ext_mode != "brute") {
                labels.insert(labels.begin(), ext_mode);  // mode slot swallowed a label
                ext_mode.clear();
            }
            if (labels.size() != 2) throw UsageError("ext needs exactly two module labels");
            code = cmd_ext(captured, cfg, ext_mode, parse_label(labels[0]), parse_label(labels[1]),
                           ext_compare);
        } else if (*sc_sw) {
            if (sw_mode == "hat" || sw_mode == "lr" || sw_mode == "char") {
                if (sw_args.size() != 1)
                    throw UsageError("sw " + sw_mode + " needs exactly one partition");
                Partition lam = parse_partition(sw_args[0]);
                code = sw_mode == "hat"  ? cmd_sw_hat(captured, cfg, lam)
                       : sw_mode == "lr" ? cmd_sw_lr(captured, cfg, lam)
                                         : cmd_sw_char(captured, cfg, lam);
            } else if (sw_mode == "ext") {
                if (sw_args.size() != 3)
                    throw UsageError("sw ext needs KIND LAMBDA MU (e.g. S 2,1 1,1)");
                if (sw_args[0].size() != 1 ||
                    (sw_args[0] != "S" && sw_args[0] != "W" && sw_args[0] != "F"))
                    throw UsageError("sw ext kind must be S, W, or F");
                code = cmd_sw_ext(captured, cfg, sw_args[0][0], parse_partition(sw_args[1]),
                                  parse_partition(sw_args[2]), sw_brute);
            } else {
                throw UsageError("sw mode must be hat, lr, char, or ext");
            }
        } else if (*sc_yoneda) {
            code = cmd_yoneda(captured, cfg, yoneda_table, yoneda_conv);
        } else if (*sc_rs) {
            code = cmd_rs(captured, cfg, parse_label(rs_label), rs_brute);
        } else if (*sc_rjstar) {
            code = cmd_rjstar(captured, cfg, parse_label(rjstar_label), rjstar_big, rjstar_brute);
        } else if (*sc_character) {
            code = cmd_character(captured, cfg, parse_label(character_label));
        } else if (*sc_verify) {
            code = cmd_verify(captured, cfg, verify_suite);
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << std::endl;
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << std::endl;
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "usage error: " << e.what() << std::endl;
        return 2;
    } catch (const ResourceGuardError& e) {
        std::cerr << "resource budget exceeded: " << e.what() << std::endl;
        return 3;
    } catch (const MismatchError& e) {
        std::cerr << "mismatch: " << e.what() << std::endl;
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    }

    std::cout << captured.str();
    cache.store(captured.str(), code);
    return code;
}
