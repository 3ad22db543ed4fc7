#include "qsd/certify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <set>
#include <thread>

#include <json.hpp>

#include "qsd/incidence_io.hpp"

namespace qsd {

using ordered_json = nlohmann::ordered_json;

const std::vector<Premise>& premise_registry() {
    static const std::vector<Premise> registry = {
        {"hall-connor",
         "Every 2-(45,9,2) design is the residual design of a 2-(56,11,2) biplane with respect "
         "to a block.",
         "M. Hall Jr. and W. S. Connor, An embedding theorem for balanced incomplete block "
         "designs, Canad. J. Math. 6 (1954) 35-41."},
        {"five-biplanes",
         "Up to isomorphism there are exactly five 2-(56,11,2) biplanes.",
         "P. Kaski and P. R. J. Ostergard, There are exactly five biplanes with k = 11, "
         "J. Combin. Des. 16 (2008) 117-127."},
        {"hmt-37-9-8",
         "A quasi-symmetric 2-(37,9,8) design with block intersection numbers 1 and 3 does not "
         "exist.",
         "M. Harada, A. Munemasa and V. D. Tonchev, Self-dual codes and the nonexistence of a "
         "quasi-symmetric 2-(37,9,8) design with intersection numbers 1 and 3, J. Combin. Des. "
         "25 (2017) 469-476."},
    };
    return registry;
}

const Premise& premise(const std::string& id) {
    for (const auto& p : premise_registry())
        if (p.id == id) return p;
    throw std::out_of_range("unknown premise id: " + id);
}

const std::vector<BiplaneReference>& biplane_reference_table() {
    static const std::vector<BiplaneReference> table = {
        {"B1", 20, 80640, 11, 2100}, {"B2", 22, 288, 11, 516}, {"B3", 26, 144, 11, 84},
        {"B4", 24, 64, 11, 148},     {"B5", 26, 24, 11, 20},
    };
    return table;
}

std::optional<std::string> identify_biplane(std::size_t dimension, std::size_t w12_count) {
    for (const auto& row : biplane_reference_table())
        if (row.dimension == dimension && row.w12_count == w12_count) return row.id;
    return std::nullopt;
}

std::vector<SupportSet> filter_S_B(const std::vector<SupportSet>& s, std::size_t b) {
    std::vector<SupportSet> out;
    for (const auto& sup : s) {
        if (b >= sup.length) throw std::out_of_range("filter_S_B: coordinate out of range");
        if (!std::binary_search(sup.coordinates.begin(), sup.coordinates.end(), b))
            out.push_back(sup);
    }
    return out;
}

namespace {

constexpr std::size_t kRequiredVectors = 165;  // blocks of the hypothetical residual 1-design

std::string signature_text(const DesignSignature& s) { return s.to_string(); }

}  // namespace

BiplaneCertificate certify_biplane(const IncidenceStructure& d, const CertifyOptions& opts) {
    BiplaneCertificate cert;

    auto chk = verify_t_design(d, 2);
    if (!chk.ok) {
        std::string why;
        switch (chk.failure) {
            case TDesignCheck::Failure::empty_block:
                why = "block " + std::to_string(chk.block_a) + " is empty";
                break;
            case TDesignCheck::Failure::unequal_block_sizes:
                why = "blocks " + std::to_string(chk.block_a) + " and " +
                      std::to_string(chk.block_b) + " differ in size";
                break;
            case TDesignCheck::Failure::nonconstant_lambda: {
                why = "pair {";
                for (std::size_t i = 0; i < chk.witness_subset.size(); i++)
                    why += (i ? "," : "") + std::to_string(chk.witness_subset[i]);
                why += "} lies in " + std::to_string(chk.witness_count) +
                       " blocks, expected " + std::to_string(chk.expected_count);
                break;
            }
            default:
                why = "verification failed";
        }
        throw DataIntegrityError("input is not a 2-design: " + why);
    }
    const auto& sig = chk.signature;
    if (sig.v != 56 || sig.k != 11 || sig.lam != 2 || sig.b != 56)
        throw DataIntegrityError("input verifies as " + signature_text(sig) +
                                 ", expected 2-(56,11,2) with 56 blocks");
    cert.design_check = sig;

    GFMatrix m3 = d.matrix_mod(3);
    LinearCodeView code(m3);
    cert.code_dimension = code.dimension();

    // embedding facts used by the dual-code argument
    {
        bool all_two = true;
        for (std::size_t j = 0; j < m3.cols() && all_two; j++) {
            int colsum = 0;
            for (std::size_t i = 0; i < m3.rows(); i++) colsum += m3.at(i, j);
            if (colsum % 3 != 2) all_two = false;
        }
        cert.row_sum_all_two = all_two;

        GFVector ones(3, std::vector<int>(m3.cols(), 1));
        cert.all_ones_in_row_space = row_space_contains(m3, ones);

        bool emb = true;
        for (std::size_t j = 0; j < d.b() && emb; j++)
            emb = linear_embeddability_check(d, j, 3).holds;
        cert.embeddability_all_blocks = emb;
    }

    cert.min_distance = verify_min_distance(code, 11);
    if (cert.min_distance.kind == MinDistanceVerdict::Kind::inconclusive)
        throw EnumerationBudgetError(
            "minimum distance verification exhausted its enumeration budget");

    EnumerationOptions eopts;
    eopts.memory_budget_bytes = opts.memory_budget_bytes;
    std::vector<SupportSet> s = enumerate_01_dual_codewords(code, 12, eopts);
    cert.s_count = s.size();

    if (opts.per_block_counts) {
        cert.per_block_counts.resize(d.b());
        for (std::size_t j = 0; j < d.b(); j++)
            cert.per_block_counts[j] = filter_S_B(s, j).size();
    }

    if (cert.s_count < kRequiredVectors) {
        cert.eliminated = true;
        cert.elimination_reason = "count-below-165";
    } else {
        CompatibilityGraph g = build_compatibility_graph(s, {0, 3});
        auto [below, result] = clique_below(g, kRequiredVectors);
        if (!verify_clique(g, result.witness))
            throw DataIntegrityError("clique witness failed adjacency re-check");
        cert.clique = result;
        cert.clique_exhaustive = below;
        if (below) {
            cert.eliminated = true;
            cert.elimination_reason = "clique-below-165";
        }
    }

    auto id = identify_biplane(cert.code_dimension, cert.s_count);
    bool dist_ok = cert.min_distance.kind == MinDistanceVerdict::Kind::confirmed &&
                   cert.min_distance.found_weight == 11;
    if (id && dist_ok) {
        cert.biplane_id = *id;
        cert.table_match = true;
    } else {
        cert.biplane_id = "unknown";
        cert.table_match = false;
    }
    return cert;
}

MainTheoremResult certify_main_theorem(const std::vector<BiplaneCertificate>& certs) {
    MainTheoremResult out;

    if (certs.size() != 5) {
        out.gaps.push_back("expected 5 biplane certificates, got " +
                           std::to_string(certs.size()));
        return out;
    }
    std::set<std::string> ids;
    for (const auto& c : certs) ids.insert(c.biplane_id);
    if (ids != std::set<std::string>{"B1", "B2", "B3", "B4", "B5"}) {
        out.gaps.push_back("certificates do not cover the five biplanes B1..B5 exactly");
        return out;
    }

    for (const auto& c : certs) {
        std::string tag = "certificate " + c.biplane_id + ": ";
        if (!c.table_match) out.gaps.push_back(tag + "fingerprint mismatch with reference table");
        if (!c.row_sum_all_two) out.gaps.push_back(tag + "row-sum invariant failed");
        if (!c.all_ones_in_row_space) out.gaps.push_back(tag + "all-ones membership failed");
        if (!c.embeddability_all_blocks)
            out.gaps.push_back(tag + "linear embeddability failed for some block");
        if (c.min_distance.kind != MinDistanceVerdict::Kind::confirmed ||
            c.min_distance.found_weight != 11)
            out.gaps.push_back(tag + "minimum distance 11 not confirmed");
        // re-derive elimination from the raw values; reject tampered records
        bool count_route = c.s_count < kRequiredVectors;
        bool clique_route = c.clique.has_value() && c.clique_exhaustive &&
                            c.clique->size < kRequiredVectors;
        if (!c.eliminated) {
            out.gaps.push_back(tag + "not eliminated");
        } else if (c.elimination_reason == "count-below-165") {
            if (!count_route) out.gaps.push_back(tag + "claims count-below-165 but |S| >= 165");
        } else if (c.elimination_reason == "clique-below-165") {
            if (!clique_route)
                out.gaps.push_back(tag + "claims clique-below-165 without an exhaustive bound");
        } else {
            out.gaps.push_back(tag + "unknown elimination reason");
        }
    }
    if (!out.gaps.empty()) return out;

    // hypothetical quasi-symmetric 2-(56,12,9): derived/residual arithmetic
    auto hyp = make_signature(2, 56, 12, 9);
    auto lam1 = hyp ? lambda_s(*hyp, 1) : std::nullopt;
    if (!hyp || !lam1 || *lam1 != 45 || hyp->b != 210) {
        out.gaps.push_back("parameter arithmetic for 2-(56,12,9) failed");
        return out;
    }

    Verdict v1;
    v1.claim_id = "QS-2-(56,12,9)-x0y3";
    v1.claim = "quasi-symmetric 2-(56,12,9) design with block intersection numbers 0 and 3";
    v1.statement = "does not exist";
    v1.premise_ids = {"hall-connor", "five-biplanes"};
    v1.reasoning = {
        "point-derived design of the hypothetical design is a 1-(55,11,9) design with r = 45 "
        "blocks whose dual is a 2-(45,9,2) design",
        "point-residual design is a 1-(55,12,36) design with b - r = 210 - 45 = 165 blocks, "
        "pairwise disjoint or meeting in 3 points, lying in the dual ternary code",
        "by the Hall-Connor premise every 2-(45,9,2) design is a block residual of one of the "
        "five biplanes (five-biplanes premise)",
        "B3, B4, B5: the dual codes carry 84, 148, 20 < 165 weight-12 {0,1} codewords",
        "B1, B2: the compatibility graphs on all 2100 and 516 weight-12 {0,1} codewords have "
        "maximum cliques 22 and 18 < 165 (computed over all of S; every per-block subset S_B "
        "is an induced subgraph, so its clique number is bounded by the same value)",
    };
    out.verdicts.push_back(v1);

    // 2-(57,12,11): its point residual is a quasi-symmetric 2-(56,12,9)
    auto three_design = make_signature(3, 57, 12, 2);
    auto res = three_design ? point_residual_signature(*three_design) : std::nullopt;
    auto direct = make_signature(2, 57, 12, 11);
    if (!res || res->v != 56 || res->k != 12 || res->lam != 9 || !direct || direct->r != 56 ||
        direct->b != 266) {
        out.gaps.push_back("parameter arithmetic for 2-(57,12,11) failed");
        out.verdicts.clear();
        return out;
    }
    Verdict v2;
    v2.claim_id = "QS-2-(57,12,11)-x0y3";
    v2.claim = "quasi-symmetric 2-(57,12,11) design with block intersection numbers 0 and 3";
    v2.statement = "does not exist";
    v2.premise_ids = {"hall-connor", "five-biplanes"};
    v2.reasoning = {
        "the residual design with respect to a point of a quasi-symmetric 2-(57,12,11) design "
        "with intersection numbers 0,3 is a quasi-symmetric 2-(56,12,9) design with "
        "intersection numbers 0,3 (266 - 56 = 210 blocks)",
        "equivalently: such a design is a 3-(57,12,2) design and the point residual arithmetic "
        "gives 2-(56,12,9) since lambda_2 - lambda_3 = 11 - 2 = 9",
        "no quasi-symmetric 2-(56,12,9) design with intersection numbers 0,3 exists "
        "(verdict QS-2-(56,12,9)-x0y3)",
    };
    out.verdicts.push_back(v2);
    return out;
}

std::optional<DesignSignature> quasi3_block_derived_signature(long long v, long long k,
                                                              long long lam) {
    auto sig = make_signature(2, v, k, lam);
    if (!sig || sig->b != sig->v) return std::nullopt;  // must be symmetric
    return block_derived_signature(*sig);
}

Quasi3Result derive_quasi3_implications(const std::vector<Verdict>& main_verdicts) {
    Quasi3Result out;

    auto find_verdict = [&](const std::string& claim_id) -> const Verdict* {
        for (const auto& v : main_verdicts)
            if (v.claim_id == claim_id) return &v;
        return nullptr;
    };

    // 2-(267,57,12), triple intersection numbers 0 and 3
    {
        auto derived = quasi3_block_derived_signature(267, 57, 12);
        const Verdict* dep = find_verdict("QS-2-(57,12,11)-x0y3");
        if (!derived || derived->v != 57 || derived->k != 12 || derived->lam != 11) {
            out.gaps.push_back("block-derived arithmetic for 2-(267,57,12) failed");
        } else if (!dep) {
            out.gaps.push_back(
                "quasi-3 2-(267,57,12): missing dependency verdict QS-2-(57,12,11)-x0y3");
        } else {
            Verdict v;
            v.claim_id = "quasi3-2-(267,57,12)-x0y3";
            v.claim = "quasi-3 2-(267,57,12) design with triple intersection numbers 0 and 3";
            v.statement = "does not exist";
            v.premise_ids = dep->premise_ids;
            v.reasoning = {
                "a symmetric design is quasi-3 exactly when every block-derived "
                "2-(k,lambda,lambda-1) design is quasi-symmetric with the triple intersection "
                "numbers as block intersection numbers",
                "the block-derived design of a symmetric 2-(267,57,12) design is a "
                "2-(57,12,11) design",
                "no quasi-symmetric 2-(57,12,11) design with intersection numbers 0,3 exists "
                "(verdict QS-2-(57,12,11)-x0y3)",
            };
            out.verdicts.push_back(v);
        }
    }

    // 2-(149,37,9), triple intersection numbers 1 and 3
    {
        auto derived = quasi3_block_derived_signature(149, 37, 9);
        if (!derived || derived->v != 37 || derived->k != 9 || derived->lam != 8) {
            out.gaps.push_back("block-derived arithmetic for 2-(149,37,9) failed");
        } else {
            Verdict v;
            v.claim_id = "quasi3-2-(149,37,9)-x1y3";
            v.claim = "quasi-3 2-(149,37,9) design with triple intersection numbers 1 and 3";
            v.statement = "does not exist";
            v.premise_ids = {"hmt-37-9-8"};
            v.reasoning = {
                "the block-derived design of a symmetric 2-(149,37,9) design is a 2-(37,9,8) "
                "design, quasi-symmetric with block intersection numbers 1 and 3",
                "no such design exists by the registered premise hmt-37-9-8",
            };
            out.verdicts.push_back(v);
        }
    }
    return out;
}

namespace {

std::string toolchain_string() {
    return std::string("qsdcert 1.0.0; compiler ") +
#if defined(__VERSION__)
           __VERSION__
#else
           "unknown"
#endif
        ;
}

}  // namespace

CertificateReport certify_all(const std::vector<std::string>& biplane_paths,
                              const CertifyOptions& opts) {
    auto t_start = std::chrono::steady_clock::now();
    CertificateReport report;
    report.toolchain = toolchain_string();

    std::vector<BiplaneCertificate> certs(biplane_paths.size());
    std::vector<double> seconds(biplane_paths.size(), 0.0);
    std::vector<std::exception_ptr> errors(biplane_paths.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= biplane_paths.size()) return;
            auto t0 = std::chrono::steady_clock::now();
            try {
                IncidenceStructure d = load_incidence(biplane_paths[i]);
                certs[i] = certify_biplane(d, opts);
            } catch (...) {
                errors[i] = std::current_exception();
            }
            seconds[i] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                             .count();
        }
    };
    std::size_t nthreads = std::max<std::size_t>(1, opts.threads);
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < nthreads; t++) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (std::size_t i = 0; i < errors.size(); i++)
        if (errors[i]) std::rethrow_exception(errors[i]);

    // deterministic merge in input order
    report.biplanes = std::move(certs);
    for (std::size_t i = 0; i < biplane_paths.size(); i++)
        report.per_stage_seconds.push_back({report.biplanes[i].biplane_id, seconds[i]});

    auto main = certify_main_theorem(report.biplanes);
    report.verdicts = main.verdicts;
    report.gaps = main.gaps;
    auto quasi3 = derive_quasi3_implications(main.verdicts);
    for (auto& v : quasi3.verdicts) report.verdicts.push_back(v);
    for (auto& g : quasi3.gaps) report.gaps.push_back(g);

    std::set<std::string> premise_ids;
    for (const auto& v : report.verdicts)
        for (const auto& pid : v.premise_ids) premise_ids.insert(pid);
    for (const auto& pid : premise_ids) report.premises_used.push_back(premise(pid));

    report.annotations = {
        "The clique bound is computed over the whole codeword set S of each biplane; every "
        "per-block subset S_B induces a subgraph, so its clique number is bounded by the same "
        "value. The per-block counts |S_B| are recorded for auditors.",
        "Alternate route for the 2-(57,12,11) verdict, recorded but not re-proved here: such a "
        "design is necessarily a 3-(57,12,2) design (Neumaier, Proposition 12; see also "
        "Calderbank), and the nonexistence of a 3-(57,12,2) design is known (Kaski and "
        "Ostergard, Corollary 2).",
        "The five biplane matrices bundled with this tool are validated at load time: design "
        "parameters, GF(3) dimension, minimum distance, and weight-12 dual codeword counts "
        "must all match the reference table.",
    };

    report.total_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return report;
}

// ---------------------------------------------------------------------------
// serialization

namespace {

ordered_json to_json(const Premise& p) {
    return ordered_json{{"id", p.id}, {"statement", p.statement}, {"source", p.source}};
}

ordered_json to_json(const DesignSignature& s) {
    return ordered_json{{"t", s.t}, {"v", s.v},      {"k", s.k},
                        {"lambda", s.lam}, {"b", s.b}, {"r", s.r}};
}

std::string mindist_kind_name(MinDistanceVerdict::Kind k) {
    switch (k) {
        case MinDistanceVerdict::Kind::confirmed: return "confirmed";
        case MinDistanceVerdict::Kind::smaller_with_witness: return "smaller-with-witness";
        case MinDistanceVerdict::Kind::larger_than_claimed: return "larger-than-claimed";
        case MinDistanceVerdict::Kind::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

MinDistanceVerdict::Kind mindist_kind_from(const std::string& s) {
    if (s == "confirmed") return MinDistanceVerdict::Kind::confirmed;
    if (s == "smaller-with-witness") return MinDistanceVerdict::Kind::smaller_with_witness;
    if (s == "larger-than-claimed") return MinDistanceVerdict::Kind::larger_than_claimed;
    return MinDistanceVerdict::Kind::inconclusive;
}

ordered_json to_json(const MinDistanceVerdict& v) {
    ordered_json sets = ordered_json::array();
    for (const auto& s : v.sets)
        sets.push_back(ordered_json{{"columns", s.columns},
                                    {"fresh_rank", s.fresh_rank},
                                    {"deficiency", s.deficiency}});
    std::vector<int> witness(v.witness.e.begin(), v.witness.e.end());
    return ordered_json{{"kind", mindist_kind_name(v.kind)},
                        {"claimed", v.claimed},
                        {"found_weight", v.found_weight},
                        {"witness", witness},
                        {"information_sets", sets},
                        {"enumerated_up_to", v.enumerated_up_to},
                        {"lower_bound", v.lower_bound}};
}

ordered_json to_json(const CliqueResult& c) {
    return ordered_json{
        {"size", c.size},
        {"witness", c.witness},
        {"proof_mode", c.proof_mode == CliqueResult::ProofMode::exact_maximum
                           ? "exact-maximum"
                           : "early-exit-at-bound"}};
}

ordered_json to_json(const BiplaneCertificate& c) {
    ordered_json j{{"id", c.biplane_id},
                   {"design", to_json(c.design_check)},
                   {"code_dimension", c.code_dimension},
                   {"min_distance", to_json(c.min_distance)},
                   {"s_count", c.s_count},
                   {"per_block_counts", c.per_block_counts},
                   {"row_sum_all_two", c.row_sum_all_two},
                   {"all_ones_in_row_space", c.all_ones_in_row_space},
                   {"embeddability_all_blocks", c.embeddability_all_blocks},
                   {"table_match", c.table_match},
                   {"eliminated", c.eliminated},
                   {"elimination_reason", c.elimination_reason}};
    if (c.clique) {
        j["clique"] = to_json(*c.clique);
        j["clique_exhaustive"] = c.clique_exhaustive;
    } else {
        j["clique"] = nullptr;
        j["clique_exhaustive"] = false;
    }
    return j;
}

ordered_json to_json(const Verdict& v) {
    return ordered_json{{"claim_id", v.claim_id},
                        {"claim", v.claim},
                        {"statement", v.statement},
                        {"premises", v.premise_ids},
                        {"reasoning", v.reasoning}};
}

ordered_json reference_table_json() {
    ordered_json arr = ordered_json::array();
    for (const auto& r : biplane_reference_table())
        arr.push_back(ordered_json{{"id", r.id},
                                   {"dimension", r.dimension},
                                   {"aut_order", r.aut_order},
                                   {"min_distance", r.min_distance},
                                   {"w12_count", r.w12_count}});
    return arr;
}

ordered_json report_to_json(const CertificateReport& r) {
    ordered_json j;
    j["schema"] = r.schema;
    j["toolchain"] = r.toolchain;
    ordered_json prem = ordered_json::array();
    for (const auto& p : r.premises_used) prem.push_back(to_json(p));
    j["premises"] = prem;
    j["reference_table"] = reference_table_json();
    ordered_json bip = ordered_json::array();
    for (const auto& c : r.biplanes) bip.push_back(to_json(c));
    j["biplanes"] = bip;
    ordered_json ver = ordered_json::array();
    for (const auto& v : r.verdicts) ver.push_back(to_json(v));
    j["verdicts"] = ver;
    j["gaps"] = r.gaps;
    j["annotations"] = r.annotations;
    ordered_json stages = ordered_json::object();
    for (const auto& [name, secs] : r.per_stage_seconds) stages[name] = secs;
    j["timing"] = ordered_json{{"total_seconds", r.total_seconds}, {"stages", stages}};
    return j;
}

}  // namespace

std::string emit_report(const CertificateReport& report) {
    return report_to_json(report).dump(2) + "\n";
}

std::string emit_report_without_timing(const CertificateReport& report) {
    ordered_json j = report_to_json(report);
    j.erase("timing");
    return j.dump(2) + "\n";
}

CertificateReport parse_report(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    CertificateReport r;
    r.schema = j.at("schema").get<std::string>();
    r.toolchain = j.at("toolchain").get<std::string>();
    for (const auto& pj : j.at("premises"))
        r.premises_used.push_back(Premise{pj.at("id").get<std::string>(),
                                          pj.at("statement").get<std::string>(),
                                          pj.at("source").get<std::string>()});
    for (const auto& cj : j.at("biplanes")) {
        BiplaneCertificate c;
        c.biplane_id = cj.at("id").get<std::string>();
        const auto& dj = cj.at("design");
        c.design_check = DesignSignature{dj.at("t").get<long long>(), dj.at("v").get<long long>(),
                                         dj.at("k").get<long long>(),
                                         dj.at("lambda").get<long long>(),
                                         dj.at("b").get<long long>(), dj.at("r").get<long long>()};
        c.code_dimension = cj.at("code_dimension").get<std::size_t>();
        const auto& mj = cj.at("min_distance");
        c.min_distance.kind = mindist_kind_from(mj.at("kind").get<std::string>());
        c.min_distance.claimed = mj.at("claimed").get<std::size_t>();
        c.min_distance.found_weight = mj.at("found_weight").get<std::size_t>();
        auto wit = mj.at("witness").get<std::vector<int>>();
        c.min_distance.witness = GFVector(3, wit);
        for (const auto& sj : mj.at("information_sets"))
            c.min_distance.sets.push_back(
                InformationSetAccount{sj.at("columns").get<std::vector<std::size_t>>(),
                                      sj.at("fresh_rank").get<std::size_t>(),
                                      sj.at("deficiency").get<std::size_t>()});
        c.min_distance.enumerated_up_to = mj.at("enumerated_up_to").get<std::size_t>();
        c.min_distance.lower_bound = mj.at("lower_bound").get<long long>();
        c.s_count = cj.at("s_count").get<std::size_t>();
        c.per_block_counts = cj.at("per_block_counts").get<std::vector<std::size_t>>();
        c.row_sum_all_two = cj.at("row_sum_all_two").get<bool>();
        c.all_ones_in_row_space = cj.at("all_ones_in_row_space").get<bool>();
        c.embeddability_all_blocks = cj.at("embeddability_all_blocks").get<bool>();
        c.table_match = cj.at("table_match").get<bool>();
        c.eliminated = cj.at("eliminated").get<bool>();
        c.elimination_reason = cj.at("elimination_reason").get<std::string>();
        if (!cj.at("clique").is_null()) {
            CliqueResult cr;
            cr.size = cj.at("clique").at("size").get<std::size_t>();
            cr.witness = cj.at("clique").at("witness").get<std::vector<std::size_t>>();
            cr.proof_mode = cj.at("clique").at("proof_mode").get<std::string>() == "exact-maximum"
                                ? CliqueResult::ProofMode::exact_maximum
                                : CliqueResult::ProofMode::early_exit_at_bound;
            c.clique = cr;
            c.clique_exhaustive = cj.at("clique_exhaustive").get<bool>();
        }
        r.biplanes.push_back(std::move(c));
    }
    for (const auto& vj : j.at("verdicts")) {
        Verdict v;
        v.claim_id = vj.at("claim_id").get<std::string>();
        v.claim = vj.at("claim").get<std::string>();
        v.statement = vj.at("statement").get<std::string>();
        v.premise_ids = vj.at("premises").get<std::vector<std::string>>();
        v.reasoning = vj.at("reasoning").get<std::vector<std::string>>();
        r.verdicts.push_back(std::move(v));
    }
    r.gaps = j.at("gaps").get<std::vector<std::string>>();
    r.annotations = j.at("annotations").get<std::vector<std::string>>();
    if (j.contains("timing")) {
        r.total_seconds = j.at("timing").at("total_seconds").get<double>();
        for (auto it = j.at("timing").at("stages").begin(); it != j.at("timing").at("stages").end();
             ++it)
            r.per_stage_seconds.push_back({it.key(), it.value().get<double>()});
    }
    return r;
}

}  // namespace qsd
