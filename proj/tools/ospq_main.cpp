// ospq: exact modular data and surgery invariants for osp(1|2n) at even
// roots of unity.  Subcommands: tables, invariant, verify.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "ospq/errors.hpp"
#include "ospq/invariant.hpp"
#include "ospq/serialize.hpp"

namespace fs = std::filesystem;
using namespace ospq;

namespace {

struct Config {
    int n = 1;
    int k = 2;
    std::string out;
    std::string format = "json";
    int workers = 1;
    long long max_cells = 10'000'000;
    long long max_colorings = 10'000'000;
};

void add_common(CLI::App* cmd, Config& cfg) {
    cmd->add_option("--n", cfg.n, "rank n >= 1")->check(CLI::PositiveNumber);
    cmd->add_option("--k", cfg.k, "level parameter k >= 1; N = 2(2k+1)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--out", cfg.out, "output file (default: stdout)");
    cmd->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--workers", cfg.workers, "parallel workers for the coloring sum")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-cells", cfg.max_cells, "table cell budget");
    cmd->add_option("--max-colorings", cfg.max_colorings, "coloring budget");
}

void emit(const Config& cfg, const std::string& payload) {
    if (cfg.out.empty()) {
        std::cout << payload << "\n";
    } else {
        std::ofstream f(cfg.out);
        if (!f) throw std::runtime_error("cannot open output file " + cfg.out);
        f << payload << "\n";
    }
}

std::string cyclo_brief(const CycloNumber& v) {
    auto z = v.embed();
    std::ostringstream os;
    os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
    return os.str();
}

fs::path cache_path(int n, int k) {
    const char* dir = std::getenv("OSPQ_TABLES_CACHE");
    if (!dir || !*dir) return {};
    return fs::path(dir) / ("tables_n" + std::to_string(n) + "_k" + std::to_string(k) + ".json");
}

ModularTables obtain_tables(const Config& cfg) {
    fs::path cached = cache_path(cfg.n, cfg.k);
    if (!cached.empty() && fs::exists(cached)) {
        std::ifstream f(cached);
        Json j = Json::parse(f);
        return tables_from_json(j);
    }
    ModularTables t = build_tables(cfg.n, cfg.k, cfg.max_cells);
    if (!cached.empty()) {
        fs::create_directories(cached.parent_path());
        std::ofstream f(cached);
        f << to_json(t).dump(2) << "\n";
    }
    return t;
}

int run_tables(const Config& cfg) {
    ModularTables t;
    try {
        t = build_tables(cfg.n, cfg.k, cfg.max_cells);
    } catch (const ValidationFailure& e) {
        std::cerr << "validation failed: " << e.what() << "\n";
        return 4;
    } catch (const BudgetExceeded& e) {
        std::cerr << e.what() << "\n";
        return 5;
    }
    if (t.index_set.size() == 1)
        std::cerr << "warning: index set is {0}; the invariant theory is trivial at k = "
                  << cfg.k << "\n";
    fs::path cached = cache_path(cfg.n, cfg.k);
    if (!cached.empty()) {
        fs::create_directories(cached.parent_path());
        std::ofstream f(cached);
        f << to_json(t).dump(2) << "\n";
    }
    if (cfg.format == "text") {
        std::ostringstream os;
        os << "n=" << t.n << " k=" << t.k << " N=" << t.N << "\n"
           << "|index set| = " << t.index_set.size() << "\n"
           << "zeta = " << cyclo_brief(t.zeta) << "\n"
           << "z    = " << cyclo_brief(t.z);
        emit(cfg, os.str());
    } else {
        emit(cfg, to_json(t).dump(2));
    }
    std::cerr << "|index set| = " << t.index_set.size() << ", z = " << cyclo_brief(t.z)
              << ", zeta = " << cyclo_brief(t.zeta) << "\n";
    return 0;
}

int run_invariant(const Config& cfg, const std::string& graph_path) {
    std::ifstream f(graph_path);
    if (!f) {
        std::cerr << "cannot open " << graph_path << "\n";
        return 2;
    }
    std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    PlumbingGraph g;
    try {
        if (graph_path.size() > 5 && graph_path.substr(graph_path.size() - 5) == ".json")
            g = graph_from_json(Json::parse(text));
        else
            g = parse_graph(text);
        g.validate();
    } catch (const CycleDetected& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    }
    ModularTables t;
    try {
        t = obtain_tables(cfg);
    } catch (const ValidationFailure& e) {
        std::cerr << "tables validation failed: " << e.what() << "\n";
        return 4;
    }
    try {
        InvariantReport r = invariant_report(g, t, cfg.max_colorings, cfg.workers);
        if (cfg.format == "text") {
            std::ostringstream os;
            os << "F(M_L) = " << cyclo_brief(r.value) << "\n"
               << "sigma = " << r.sigma << ", colorings = " << r.coloring_count << ", "
               << r.seconds << " s";
            emit(cfg, os.str());
        } else {
            emit(cfg, to_json(r).dump(2));
        }
    } catch (const CycleDetected& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const BudgetExceeded& e) {
        std::cerr << e.what() << "\n";
        return 5;
    }
    return 0;
}

struct SuiteResult {
    Json checks = Json::array();
    bool all_pass = true;

    void record(const std::string& name, bool pass, const std::string& witness = "") {
        Json c;
        c["check"] = name;
        c["pass"] = pass;
        if (!pass && !witness.empty()) c["witness"] = witness;
        checks.push_back(std::move(c));
        all_pass = all_pass && pass;
    }
};

void suite_gauss(const Config& cfg, SuiteResult& out) {
    long N = 2L * (2 * cfg.k + 1);
    for (long long m = 1; m <= 2 * cfg.n - 1; m += 2) {
        CycloNumber direct = gauss_sum(N, m);
        CycloNumber closed = gauss_sum_closed_form(N, m);
        out.record("gauss_closed_form N=" + std::to_string(N) + " m=" + std::to_string(m),
                   direct == closed,
                   "direct " + cyclo_brief(direct) + " vs closed " + cyclo_brief(closed));
    }
    // lattice sum against the Gauss-sum product
    CycloNumber inv_c = coeff_c(cfg.n, N).inverse();
    CycloNumber prod = CycloNumber::one(4 * N);
    for (int i = 0; i < cfg.n; ++i) prod *= gauss_sum(N, 2 * i + 1);
    out.record("lattice_sum_equals_product n=" + std::to_string(cfg.n) + " N=" + std::to_string(N),
               inv_c == prod, "sum " + cyclo_brief(inv_c) + " vs product " + cyclo_brief(prod));
}

void suite_conditioniv(const ModularTables& t, SuiteResult& out) {
    for (const Weight& mu : t.index_set) {
        CheckResult r = verify_condition_iv(t, mu);
        out.record("condition_iv", r.pass, r.witness);
    }
}

void suite_boundary(const ModularTables& t, SuiteResult& out) {
    CheckResult r = verify_boundary_vanishing(t);
    out.record("boundary_vanishing", r.pass, r.witness);
}

void suite_hopf(const ModularTables& t, SuiteResult& out) {
    bool ok = true;
    std::string witness;
    for (const Weight& a : t.index_set) {
        for (const Weight& b : t.index_set) {
            if (t.hopf.at({a, b}) * t.sdim.at(b) != t.hopf.at({b, a}) * t.sdim.at(a)) {
                ok = false;
                witness = "hopf symmetry fails";
            }
        }
    }
    out.record("hopf_symmetry", ok, witness);
}

void suite_kirby(const Config& cfg, const ModularTables& t, SuiteResult& out) {
    auto check_graph = [&](const PlumbingGraph& g, const std::string& tag) {
        CycloNumber base = rt_invariant(g, t, cfg.max_colorings, cfg.workers);
        for (int s : {+1, -1}) {
            CycloNumber up = rt_invariant(blow_up(g, s), t, cfg.max_colorings, cfg.workers);
            out.record("kirby_disjoint_blowup " + tag + " sign=" + std::to_string(s), up == base);
        }
        if (!g.vertices.empty()) {
            int site = g.vertices.begin()->first;
            for (int s : {+1, -1}) {
                PlumbingGraph up = blow_up(g, s, site);
                out.record("kirby_leaf_blowup " + tag + " sign=" + std::to_string(s),
                           rt_invariant(up, t, cfg.max_colorings, cfg.workers) == base);
            }
        }
    };
    check_graph({}, "empty");
    check_graph(lens_chain(3, 1), "lens(3,1)");
    check_graph(lens_chain(5, 2), "lens(5,2)");
    for (int s : {+1, -1}) {
        PlumbingGraph unknot;
        unknot.add_vertex(1, s);
        out.record("s3_unknot sign=" + std::to_string(s),
                   rt_invariant(unknot, t, cfg.max_colorings, cfg.workers) ==
                       CycloNumber::one(t.order()));
    }
}

int run_verify(const Config& cfg, const std::string& suite) {
    SuiteResult out;
    try {
        if (suite == "gauss" || suite == "all") suite_gauss(cfg, out);
        if (suite == "conditioniv" || suite == "boundary" || suite == "kirby" ||
            suite == "hopf" || suite == "all") {
            ModularTables t = build_tables(cfg.n, cfg.k, cfg.max_cells);
            if (suite == "conditioniv" || suite == "all") suite_conditioniv(t, out);
            if (suite == "boundary" || suite == "all") suite_boundary(t, out);
            if (suite == "hopf" || suite == "all") suite_hopf(t, out);
            if (suite == "kirby" || suite == "all") suite_kirby(cfg, t, out);
        }
    } catch (const ValidationFailure& e) {
        out.record("build_tables", false, e.what());
    }
    Json j;
    j["suite"] = suite;
    j["n"] = cfg.n;
    j["k"] = cfg.k;
    j["pass"] = out.all_pass;
    j["checks"] = std::move(out.checks);
    if (cfg.format == "text") {
        std::ostringstream os;
        for (const auto& c : j["checks"])
            os << (c["pass"].get<bool>() ? "PASS " : "FAIL ") << c["check"].get<std::string>()
               << "\n";
        os << (out.all_pass ? "all checks passed" : "SOME CHECKS FAILED");
        emit(cfg, os.str());
    } else {
        emit(cfg, j.dump(2));
    }
    return out.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact modular data and Reshetikhin-Turaev surgery invariants "
                 "for osp(1|2n) at q = exp(2*pi*i/N), N = 2(2k+1)"};
    app.require_subcommand(1);
    Config cfg;

    auto* tables_cmd = app.add_subcommand("tables", "build and emit the modular data tables");
    add_common(tables_cmd, cfg);

    std::string graph_path;
    auto* inv_cmd = app.add_subcommand("invariant", "evaluate F(M_L) for a plumbing forest");
    add_common(inv_cmd, cfg);
    inv_cmd->add_option("graph", graph_path, "path to a .plumb or .json graph file")->required();

    std::string suite = "all";
    auto* verify_cmd = app.add_subcommand("verify", "run the exact-identity verification suites");
    add_common(verify_cmd, cfg);
    verify_cmd->add_option("--suite", suite, "which suite to run")
        ->check(CLI::IsMember({"all", "gauss", "conditioniv", "boundary", "kirby", "hopf"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (tables_cmd->parsed()) return run_tables(cfg);
        if (inv_cmd->parsed()) return run_invariant(cfg, graph_path);
        if (verify_cmd->parsed()) return run_verify(cfg, suite);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 10;
    }
    return 0;
}
