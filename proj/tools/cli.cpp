#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "fracdecomp/audit.hpp"
#include "fracdecomp/cliques.hpp"
#include "fracdecomp/errors.hpp"
#include "fracdecomp/generators.hpp"
#include "fracdecomp/io.hpp"
#include "fracdecomp/oracle.hpp"
#include "fracdecomp/parallel.hpp"
#include "fracdecomp/pipeline.hpp"
#include "fracdecomp/rational.hpp"

namespace fracdecomp::cli {

namespace fs = std::filesystem;

namespace {

constexpr const char* kCsvHeader = "# fracdecomp summary v1";
constexpr const char* kCsvColumns = "instance,driver,r,n,k,edges,delta,k_r,kappa,feasible,max_residual,min_weight,max_weight,timings";

struct Common {
    int threads = 0;
    std::size_t clique_cap = 0;
};

struct GenArgs {
    GenSpec spec;
    std::string delta = "1/10";
    std::string out, manifest;
};

struct DecomposeArgs {
    std::string input, out, csv;
    int r = 3;
    std::string pipeline = "auto", regime = "strict", delta;
    bool force_full = false, fold = false;
};

struct VerifyArgs {
    std::string input, certificate;
    int r = 3;
};

struct OracleArgs {
    std::string input, out;
    int r = 3;
    std::size_t cap = 100000;
};

struct AuditArgs {
    std::vector<std::string> inputs;
    std::vector<int> rs{3};
    std::string out;
};

struct BenchArgs {
    std::vector<std::size_t> ns{8, 10, 12};
    int r = 3, k = 2;
    std::string mode = "exact";
    std::string out;
};

struct Instance {
    std::string name;
    Hypergraph g;
};

void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") out << text;
    else write_file(path, text);
}

// Corpus manifest: {"instances": [{"path": ...} | generator fields]}, paths relative to the manifest.
std::vector<Instance> load_corpus(const std::vector<std::string>& inputs) {
    std::vector<Instance> out;
    for (const auto& in : inputs) {
        fs::path p(in);
        if (p.extension() != ".json") {
            out.push_back({in, load_file(p)});
            continue;
        }
        auto j = nlohmann::json::parse(read_file(p));
        const auto& list = j.contains("instances") ? j["instances"] : j;
        if (!list.is_array()) throw InvalidArgument(in + ": expected an array of instances");
        for (const auto& e : list) {
            if (e.contains("path")) {
                fs::path q = p.parent_path() / e["path"].get<std::string>();
                out.push_back({e.value("name", q.string()), load_file(q)});
                continue;
            }
            GenSpec s;
            s.family = e.at("family").get<std::string>();
            s.n = e.value("n", std::size_t{0});
            s.k = e.value("k", 2);
            s.r = e.value("r", 3);
            s.s = e.value("s", 1);
            s.delta = parse_rational(e.value("delta", std::string("1/10")));
            s.seed = e.value("seed", std::uint64_t{0});
            std::string name = e.value("name", s.family + "-" + std::to_string(s.n) + "-" + std::to_string(s.seed));
            out.push_back({name, generate(s)});
        }
    }
    return out;
}

// stage:seconds pairs joined by ';'.
std::string timing_field(const PipelineResult& res) {
    std::string out;
    for (const auto& [stage, secs] : res.timings) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%s%s:%.6f", out.empty() ? "" : ";", stage.c_str(), secs);
        out += buf;
    }
    return out;
}

std::string csv_row(const std::string& name, const Hypergraph& g, const PipelineResult& res) {
    const auto& c = res.certificate;
    return name + "," + res.driver + "," + std::to_string(c.r) + "," + std::to_string(g.n()) + "," +
           std::to_string(g.k()) + "," + std::to_string(g.edge_count()) + "," + to_string(res.delta) + "," + to_string(res.k_r) + "," +
           to_string(res.kappa) + "," +
           (c.feasible ? "1" : "0") + "," + to_string(c.max_residual) + "," + to_string(c.min_weight) + "," +
           to_string(c.max_weight) + "," + timing_field(res) + "\n";
}

void append_csv(const std::string& path, const std::string& row) {
    bool fresh = !fs::exists(path) || fs::file_size(path) == 0;
    std::ofstream f(path, std::ios::app);
    if (!f) throw Error("cannot open " + path);
    if (fresh) f << kCsvHeader << "\n" << kCsvColumns << "\n";
    f << row;
}

int cmd_gen(GenArgs& a, std::ostream& out) {
    a.spec.delta = parse_rational(a.delta);
    auto g = generate(a.spec);
    emit(a.out, save_text(g), out);
    if (!a.manifest.empty()) write_file(a.manifest, manifest(a.spec, g).dump(2) + "\n");
    return 0;
}

int cmd_decompose(const DecomposeArgs& a, const Common& c, std::ostream& out, std::ostream& err) {
    auto g = load_file(a.input);
    PipelineOptions opt;
    opt.regime = parse_regime(a.regime);
    opt.threads = c.threads;
    opt.force_full_machinery = a.force_full;
    opt.fold_vertex_terms = a.fold;
    if (!a.delta.empty()) opt.delta = parse_rational(a.delta);
    PipelineResult res;
    if (a.pipeline == "auto") res = decompose_auto(g, a.r, opt);
    else if (a.pipeline == "hypergraph") res = decompose_hypergraph(g, a.r, opt);
    else if (a.pipeline == "r2") res = decompose_r2(g, a.r, opt);
    else if (a.pipeline == "r32") res = decompose_r32(g, a.r, opt);
    else throw InvalidArgument("unknown pipeline '" + a.pipeline + "'");
    emit(a.out, to_json(res).dump(2) + "\n", out);
    if (!a.csv.empty()) append_csv(a.csv, csv_row(a.input, g, res));
    if (!res.certificate.feasible) {
        err << "certificate not feasible: max residual " << to_string(res.certificate.max_residual)
            << ", min weight " << to_string(res.certificate.min_weight) << "\n";
        return 1;
    }
    return 0;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    auto g = load_file(a.input);
    auto j = nlohmann::json::parse(read_file(a.certificate));
    if (j.contains("certificate")) j = j["certificate"];
    auto w = weighting_from_json(j.contains("weighting") ? j["weighting"] : j);
    auto cert = verify(g, a.r, w);
    out << to_json(cert).dump(2) << "\n";
    return cert.feasible ? 0 : 1;
}

int cmd_oracle(const OracleArgs& a, std::ostream& out) {
    auto g = load_file(a.input);
    auto res = lp_feasible(g, a.r, {a.cap});
    emit(a.out, to_json(g, res).dump(2) + "\n", out);
    return res.feasible ? 0 : 1;
}

int cmd_audit(const AuditArgs& a, std::ostream& out, std::ostream& err) {
    auto corpus = load_corpus(a.inputs);
    nlohmann::json all = nlohmann::json::array();
    std::size_t failed = 0;
    out << "instance\tr\tcheck\tstatus\n";
    for (const auto& inst : corpus)
        for (int r : a.rs) {
            auto rep = audit_instance(inst.g, r);
            for (const auto& ch : rep.checks) {
                out << inst.name << "\t" << r << "\t" << ch.name << "\t" << to_string(ch.status) << "\n";
                if (ch.status == AuditStatus::failed) {
                    err << "FAIL " << inst.name << " r=" << r << " " << ch.name << ": " << ch.detail << "\n";
                    ++failed;
                }
            }
            all.push_back({{"instance", inst.name}, {"r", r}, {"report", to_json(rep)}});
        }
    if (!a.out.empty()) write_file(a.out, all.dump(2) + "\n");
    return failed ? 1 : 0;
}

int cmd_bench(const BenchArgs& a, const Common& c, std::ostream& out) {
    if (a.mode != "exact" && a.mode != "float") throw InvalidArgument("mode must be exact or float");
    std::string csv = "instance,stage,seconds\n";
    for (auto n : a.ns) {
        auto g = gen_complete(n, a.k);
        std::string name = "complete-n" + std::to_string(n) + "-k" + std::to_string(a.k);
        auto t0 = std::chrono::steady_clock::now();
        auto fam = enumerate_cliques(g, a.r, {c.clique_cap, c.threads});
        auto t1 = std::chrono::steady_clock::now();
        csv += name + ",enumerate," + std::to_string(std::chrono::duration<double>(t1 - t0).count()) + "\n";
        if (a.mode == "float") {
            auto s0 = std::chrono::steady_clock::now();
            decompose_hypergraph_float(g, a.r, c.threads);
            auto s1 = std::chrono::steady_clock::now();
            csv += name + ",float-decompose," + std::to_string(std::chrono::duration<double>(s1 - s0).count()) + "\n";
            continue;
        }
        PipelineOptions opt;
        opt.threads = c.threads;
        auto res = decompose_auto(g, a.r, opt);
        for (const auto& [stage, secs] : res.timings) csv += name + "," + stage + "," + std::to_string(secs) + "\n";
    }
    emit(a.out, csv, out);
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fractional clique decompositions with exact certificates"};
    app.require_subcommand(1);
    Common common;
    app.add_option("--threads", common.threads, "Worker threads (0: hardware)")->check(CLI::NonNegativeNumber);
    app.add_option("--clique-cap", common.clique_cap, "Clique enumeration cap (0: FRACDECOMP_CLIQUE_CAP or default)");

    GenArgs ga;
    auto* gen = app.add_subcommand("gen", "Generate an instance");
    gen->add_option("family", ga.spec.family, "complete | lower-bound | random | k4-minus-edge | complete-minus-matching")
        ->required();
    gen->add_option("--n", ga.spec.n);
    gen->add_option("--k", ga.spec.k);
    gen->add_option("--r", ga.spec.r);
    gen->add_option("--s", ga.spec.s);
    gen->add_option("--delta", ga.delta, "p/q");
    gen->add_option("--seed", ga.spec.seed);
    gen->add_option("-o,--out", ga.out);
    gen->add_option("--manifest", ga.manifest);

    DecomposeArgs da;
    auto* dec = app.add_subcommand("decompose", "Run a decomposition pipeline and write a certificate");
    dec->add_option("input", da.input)->required();
    dec->add_option("--r", da.r)->required();
    dec->add_option("--pipeline", da.pipeline)->check(CLI::IsMember({"auto", "hypergraph", "r2", "r32"}));
    dec->add_option("--regime", da.regime)->check(CLI::IsMember({"strict", "relaxed"}));
    dec->add_option("--delta", da.delta, "Working delta as p/q (default: observed)");
    dec->add_flag("--force-full", da.force_full, "r32: never delegate to the hypergraph driver");
    dec->add_flag("--fold-vertex-terms", da.fold, "r32: correct vertex terms with edge gadgets");
    dec->add_option("-o,--out", da.out);
    dec->add_option("--csv", da.csv, "Append a summary row");

    VerifyArgs va;
    auto* ver = app.add_subcommand("verify", "Check a certificate against an instance");
    ver->add_option("input", va.input)->required();
    ver->add_option("certificate", va.certificate)->required();
    ver->add_option("--r", va.r)->required();

    OracleArgs oa;
    auto* ora = app.add_subcommand("oracle", "Decide feasibility with the exact LP");
    ora->add_option("input", oa.input)->required();
    ora->add_option("--r", oa.r)->required();
    ora->add_option("--cap", oa.cap, "Maximum clique variables");
    ora->add_option("-o,--out", oa.out);

    AuditArgs aa;
    auto* aud = app.add_subcommand("audit", "Check the counting inequalities on a corpus");
    aud->add_option("inputs", aa.inputs, "Instance files or corpus manifests (.json)")->required();
    aud->add_option("--r", aa.rs)->expected(1, -1);
    aud->add_option("-o,--out", aa.out, "JSON report");

    BenchArgs ba;
    auto* ben = app.add_subcommand("bench", "Time enumeration and pipeline stages on complete hosts");
    ben->add_option("--n", ba.ns)->expected(1, -1);
    ben->add_option("--r", ba.r);
    ben->add_option("--k", ba.k);
    ben->add_option("--mode", ba.mode)->check(CLI::IsMember({"exact", "float"}));
    ben->add_option("-o,--out", ba.out);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (common.clique_cap) set_default_clique_cap(common.clique_cap);
        if (common.threads) set_default_threads(common.threads);
        if (*gen) return cmd_gen(ga, out);
        if (*dec) return cmd_decompose(da, common, out, err);
        if (*ver) return cmd_verify(va, out);
        if (*ora) return cmd_oracle(oa, out);
        if (*aud) return cmd_audit(aa, out, err);
        if (*ben) return cmd_bench(ba, common, out);
    } catch (const StageError& e) {
        err << "stage error in " << e.what() << "\n";
        return *dec ? 1 : 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace fracdecomp::cli
