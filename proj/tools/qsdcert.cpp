// qsdcert: verification toolchain for the nonexistence certificates of the
// quasi-symmetric 2-(56,12,9) / 2-(57,12,11) designs and the quasi-3
// 2-(267,57,12) / 2-(149,37,9) designs.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qsd/certify.hpp"
#include "qsd/cliques.hpp"
#include "qsd/codes.hpp"
#include "qsd/design.hpp"
#include "qsd/incidence_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitDataIntegrity = 2;
constexpr int kExitInconclusive = 3;

qsd::IncidenceStructure load(const std::string& path) { return qsd::load_incidence(path); }

int cmd_verify(const std::string& file, std::size_t t) {
    auto d = load(file);
    auto chk = qsd::verify_t_design(d, t);
    if (chk.ok) {
        std::cout << chk.signature.to_string() << " with b=" << chk.signature.b
                  << " r=" << chk.signature.r << "\n";
        return kExitOk;
    }
    switch (chk.failure) {
        case qsd::TDesignCheck::Failure::empty_block:
            std::cout << "not a design: block " << chk.block_a << " is empty\n";
            break;
        case qsd::TDesignCheck::Failure::unequal_block_sizes:
            std::cout << "not a design: blocks " << chk.block_a << " and " << chk.block_b
                      << " have different sizes\n";
            break;
        case qsd::TDesignCheck::Failure::nonconstant_lambda: {
            std::cout << "not a " << t << "-design: subset {";
            for (std::size_t i = 0; i < chk.witness_subset.size(); i++)
                std::cout << (i ? "," : "") << chk.witness_subset[i];
            std::cout << "} lies in " << chk.witness_count << " blocks, expected "
                      << chk.expected_count << "\n";
            break;
        }
        default:
            std::cout << "verification failed\n";
    }
    return kExitDataIntegrity;
}

int cmd_rank(const std::string& file, int p) {
    auto d = load(file);
    std::cout << qsd::rank_mod_p(d.matrix_mod(p)) << "\n";
    return kExitOk;
}

int cmd_mindist(const std::string& file, int p, std::size_t claim) {
    auto d = load(file);
    qsd::LinearCodeView code(d.matrix_mod(p));
    auto verdict = qsd::verify_min_distance(code, claim);
    using Kind = qsd::MinDistanceVerdict::Kind;
    switch (verdict.kind) {
        case Kind::confirmed:
            std::cout << "confirmed: minimum distance " << claim << " (witness weight "
                      << verdict.found_weight << ", lower bound " << verdict.lower_bound
                      << " from " << verdict.sets.size() << " information sets at t="
                      << verdict.enumerated_up_to << ")\n";
            return kExitOk;
        case Kind::smaller_with_witness:
            std::cout << "refuted: found a codeword of weight " << verdict.found_weight << " < "
                      << claim << "\n";
            return kExitOk;
        case Kind::larger_than_claimed:
            std::cout << "refuted: all codewords have weight > " << claim
                      << " (lightest found: " << verdict.found_weight << ")\n";
            return kExitOk;
        case Kind::inconclusive:
            std::cout << "inconclusive: enumeration budget exhausted\n";
            return kExitInconclusive;
    }
    return kExitError;
}

int cmd_enum01(const std::string& file, int p, std::size_t weight, const std::string& out,
               std::size_t budget_mib) {
    auto d = load(file);
    qsd::LinearCodeView code(d.matrix_mod(p));
    qsd::EnumerationOptions opts;
    opts.memory_budget_bytes = budget_mib << 20;
    auto supports = qsd::enumerate_01_dual_codewords(code, weight, opts);
    std::cout << supports.size() << " weight-" << weight << " {0,1} dual codewords\n";
    if (!out.empty()) {
        std::ofstream os(out);
        if (!os) {
            std::cerr << "cannot open " << out << "\n";
            return kExitError;
        }
        qsd::write_supports(os, supports);
        std::cout << "wrote " << out << "\n";
    }
    return kExitOk;
}

int cmd_clique(const std::string& supports_file, const std::string& allowed_csv,
               long long below, const std::string& graph_in, const std::string& graph_out) {
    qsd::CompatibilityGraph g;
    if (supports_file.empty() && graph_in.empty()) {
        std::cerr << "need a support list or --graph-in\n";
        return kExitError;
    }
    if (!graph_in.empty()) {
        std::ifstream is(graph_in);
        if (!is) {
            std::cerr << "cannot open " << graph_in << "\n";
            return kExitError;
        }
        g = qsd::read_graph(is);
    } else {
        std::ifstream is(supports_file);
        if (!is) {
            std::cerr << "cannot open " << supports_file << "\n";
            return kExitError;
        }
        auto supports = qsd::read_supports(is);
        std::set<std::size_t> allowed;
        std::stringstream ss(allowed_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) allowed.insert(std::stoull(tok));
        g = qsd::build_compatibility_graph(supports, allowed);
    }
    std::cout << "graph: " << g.n << " vertices, " << g.edge_count() << " edges\n";
    if (!graph_out.empty()) {
        std::ofstream os(graph_out);
        if (!os) {
            std::cerr << "cannot open " << graph_out << "\n";
            return kExitError;
        }
        qsd::write_graph(os, g);
        std::cout << "wrote " << graph_out << "\n";
    }
    if (below > 0) {
        auto [is_below, result] = qsd::clique_below(g, std::size_t(below));
        if (is_below)
            std::cout << "maximum clique " << result.size << " < " << below << " (exhaustive)\n";
        else
            std::cout << "found clique of size " << result.size << " >= " << below << "\n";
    } else {
        auto result = qsd::max_clique(g);
        std::cout << "maximum clique: " << result.size << "\nwitness:";
        for (auto v : result.witness) std::cout << " " << v;
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_certify_biplane(const std::string& file, std::size_t budget_mib) {
    qsd::CertifyOptions opts;
    opts.memory_budget_bytes = budget_mib << 20;
    auto d = load(file);
    auto cert = qsd::certify_biplane(d, opts);
    std::cout << "biplane:        " << cert.biplane_id << "\n"
              << "design:         " << cert.design_check.to_string() << "\n"
              << "code dimension: " << cert.code_dimension << "\n"
              << "min distance:   "
              << (cert.min_distance.kind == qsd::MinDistanceVerdict::Kind::confirmed
                      ? "11 confirmed"
                      : "NOT confirmed")
              << "\n"
              << "|S| (w=12):     " << cert.s_count << "\n";
    if (cert.clique)
        std::cout << "clique:         " << cert.clique->size
                  << (cert.clique_exhaustive ? " (exact)" : " (early exit)") << "\n";
    std::cout << "eliminated:     " << (cert.eliminated ? "yes" : "no") << " ("
              << cert.elimination_reason << ")\n"
              << "table match:    " << (cert.table_match ? "yes" : "no") << "\n";
    return cert.table_match && cert.eliminated ? kExitOk : kExitDataIntegrity;
}

int cmd_certify_all(const std::string& data_dir, const std::string& report_path,
                    std::size_t threads, std::size_t budget_mib) {
    std::vector<std::string> paths;
    for (int i = 1; i <= 5; i++)
        paths.push_back(data_dir + "/B" + std::to_string(i) + ".inc");
    qsd::CertifyOptions opts;
    opts.threads = threads;
    opts.memory_budget_bytes = budget_mib << 20;
    auto report = qsd::certify_all(paths, opts);
    std::string doc = qsd::emit_report(report);
    if (!report_path.empty()) {
        std::ofstream os(report_path);
        if (!os) {
            std::cerr << "cannot open " << report_path << "\n";
            return kExitError;
        }
        os << doc;
        std::cout << "report written to " << report_path << "\n";
    } else {
        std::cout << doc;
    }
    for (const auto& v : report.verdicts)
        std::cout << "verdict: " << v.claim << " " << v.statement << "\n";
    for (const auto& g : report.gaps) std::cout << "gap: " << g << "\n";
    return report.verdicts.size() == 4 && report.gaps.empty() ? kExitOk : kExitDataIntegrity;
}

int cmd_premises() {
    for (const auto& p : qsd::premise_registry()) {
        std::cout << p.id << "\n  " << p.statement << "\n  [" << p.source << "]\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qsdcert: certified nonexistence computations for quasi-symmetric designs"};
    app.require_subcommand(1);

    std::string file, out, data_dir = "data/biplanes", report_path, allowed = "0,3";
    std::size_t t = 2, weight = 12, claim = 11, threads = 1, budget_mib = 4096;
    int p = 3;
    long long below = 0;

    auto* verify = app.add_subcommand("verify", "verify a t-design and print its signature");
    verify->add_option("file", file)->required();
    verify->add_option("--t", t, "strength to verify")->capture_default_str();

    auto* rank = app.add_subcommand("rank", "p-rank of the incidence matrix");
    rank->add_option("file", file)->required();
    rank->add_option("--p", p, "prime modulus")->capture_default_str();

    auto* mindist = app.add_subcommand("mindist", "verify a claimed minimum distance");
    mindist->add_option("file", file)->required();
    mindist->add_option("--p", p)->capture_default_str();
    mindist->add_option("--claim", claim)->capture_default_str();

    auto* enum01 = app.add_subcommand("enum01", "enumerate {0,1} dual codewords of fixed weight");
    enum01->add_option("file", file)->required();
    enum01->add_option("--p", p)->capture_default_str();
    enum01->add_option("--weight", weight)->capture_default_str();
    enum01->add_option("--out", out, "write supports to this file");
    enum01->add_option("--budget-mib", budget_mib, "table memory budget")->capture_default_str();

    std::string graph_in, graph_out;
    auto* clique = app.add_subcommand("clique", "clique bound of the compatibility graph");
    clique->add_option("supports", file, "codeword support list");
    clique->add_option("--allowed", allowed, "allowed intersection sizes")->capture_default_str();
    clique->add_option("--below", below, "test whether the maximum clique is below this bound");
    clique->add_option("--graph-in", graph_in, "read an edge list instead of building the graph");
    clique->add_option("--graph-out", graph_out, "write the graph as an edge list");

    auto* certify = app.add_subcommand("certify", "run the certification pipeline");
    certify->require_subcommand(1);
    auto* cb = certify->add_subcommand("biplane", "certify one biplane file");
    cb->add_option("file", file)->required();
    cb->add_option("--budget-mib", budget_mib)->capture_default_str();
    auto* ca = certify->add_subcommand("all", "certify all five biplanes and emit the report");
    ca->add_option("--data-dir", data_dir)->capture_default_str();
    ca->add_option("--report", report_path, "write the JSON report here");
    ca->add_option("--threads", threads)->capture_default_str();
    ca->add_option("--budget-mib", budget_mib)->capture_default_str();

    auto* premises = app.add_subcommand("premises", "external premises");
    premises->add_subcommand("list", "list the registered premises");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) return cmd_verify(file, t);
        if (*rank) return cmd_rank(file, p);
        if (*mindist) return cmd_mindist(file, p, claim);
        if (*enum01) return cmd_enum01(file, p, weight, out, budget_mib);
        if (*clique) return cmd_clique(file, allowed, below, graph_in, graph_out);
        if (*cb) return cmd_certify_biplane(file, budget_mib);
        if (*ca) return cmd_certify_all(data_dir, report_path, threads, budget_mib);
        if (*premises) return cmd_premises();
    } catch (const qsd::DataIntegrityError& e) {
        std::cerr << "data integrity error: " << e.what() << "\n";
        return kExitDataIntegrity;
    } catch (const qsd::EnumerationBudgetError& e) {
        std::cerr << "resource budget exceeded: " << e.what() << "\n";
        return kExitInconclusive;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
