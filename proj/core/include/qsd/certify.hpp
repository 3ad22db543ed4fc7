#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsd/cliques.hpp"
#include "qsd/codes.hpp"
#include "qsd/design.hpp"

namespace qsd {

/// An external mathematical fact this tool does not re-derive; every verdict
/// lists the premises it depends on.
struct Premise {
    std::string id;
    std::string statement;
    std::string source;
};

const std::vector<Premise>& premise_registry();
const Premise& premise(const std::string& id);  // throws std::out_of_range if unknown

/// Published reference values for the ternary codes of the five biplanes:
/// code dimension, automorphism group order (annotation only), minimum
/// distance, and number of weight-12 {0,1} dual codewords.
struct BiplaneReference {
    std::string id;
    std::size_t dimension;
    long long aut_order;
    std::size_t min_distance;
    std::size_t w12_count;
};

const std::vector<BiplaneReference>& biplane_reference_table();

/// Identify a biplane by the (dimension, weight-12 count) fingerprint; the
/// pair separates all five classes.
std::optional<std::string> identify_biplane(std::size_t dimension, std::size_t w12_count);

/// Raised when bundled data fails validation (not a 2-(56,11,2) design,
/// or invariants inconsistent with the reference table).
class DataIntegrityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct BiplaneCertificate {
    std::string biplane_id;  // "B1".."B5", or "unknown"
    DesignSignature design_check;
    std::size_t code_dimension = 0;
    MinDistanceVerdict min_distance;
    std::size_t s_count = 0;  // |S| = number of weight-12 {0,1} dual codewords
    std::optional<CliqueResult> clique;  // present when the clique route ran
    bool clique_exhaustive = false;      // the clique search proved omega < 165
    std::vector<std::size_t> per_block_counts;  // |S_B| per block coordinate
    bool row_sum_all_two = false;
    bool all_ones_in_row_space = false;
    bool embeddability_all_blocks = false;
    bool table_match = false;   // fingerprint matches a reference row
    bool eliminated = false;
    std::string elimination_reason;  // "count-below-165" or "clique-below-165"
};

struct Verdict {
    std::string claim_id;
    std::string claim;      // human-readable parameter set
    std::string statement;  // always "does not exist" for emitted verdicts
    std::vector<std::string> premise_ids;
    std::vector<std::string> reasoning;  // recorded inference steps
};

struct CertificateReport {
    std::string schema = "qsdcert-report/1";
    std::string toolchain;
    std::vector<Premise> premises_used;
    std::vector<BiplaneCertificate> biplanes;
    std::vector<Verdict> verdicts;
    std::vector<std::string> gaps;         // reasons verdicts were withheld
    std::vector<std::string> annotations;  // documented side notes
    double total_seconds = 0.0;
    std::vector<std::pair<std::string, double>> per_stage_seconds;
};

struct CertifyOptions {
    std::size_t memory_budget_bytes = std::size_t(4) << 30;
    std::size_t threads = 1;
    bool per_block_counts = true;
};

/// Supports with 0 in the coordinate labeled by block B.
std::vector<SupportSet> filter_S_B(const std::vector<SupportSet>& s, std::size_t b);

/// Full per-biplane pipeline: design verification, GF(3) dimension, minimum
/// distance at 11, weight-12 dual enumeration, elimination via the 165-vector
/// necessary condition (count, else clique bound), and the embedding facts.
/// Throws DataIntegrityError when the input is not a 2-(56,11,2) design.
BiplaneCertificate certify_biplane(const IncidenceStructure& d,
                                   const CertifyOptions& opts = {});

struct MainTheoremResult {
    std::vector<Verdict> verdicts;   // empty unless all five certificates pass
    std::vector<std::string> gaps;   // explicit gap report otherwise
};

/// Combine the five certificates into the two quasi-symmetric nonexistence
/// verdicts. Requires five distinct biplane ids, internally consistent
/// certificates, and all five eliminated.
MainTheoremResult certify_main_theorem(const std::vector<BiplaneCertificate>& certs);

/// Parameter arithmetic for the quasi-3 inference: the block-derived design
/// of a symmetric 2-(v,k,lam) design. Empty when (v,k,lam) is inadmissible
/// or not symmetric.
std::optional<DesignSignature> quasi3_block_derived_signature(long long v, long long k,
                                                              long long lam);

struct Quasi3Result {
    std::vector<Verdict> verdicts;
    std::vector<std::string> gaps;
};

/// Nonexistence of the quasi-3 2-(267,57,12) and 2-(149,37,9) designs from
/// the main verdicts plus the registered external premises.
Quasi3Result derive_quasi3_implications(const std::vector<Verdict>& main_verdicts);

/// Full pipeline over the five bundled biplane files (paths in file order).
CertificateReport certify_all(const std::vector<std::string>& biplane_paths,
                              const CertifyOptions& opts = {});

/// Deterministic JSON serialization (stable key order). Timing metadata is
/// confined to the top-level "timing" object.
std::string emit_report(const CertificateReport& report);
CertificateReport parse_report(const std::string& text);

/// Serialization with the "timing" object removed, for byte-identical
/// comparison across runs.
std::string emit_report_without_timing(const CertificateReport& report);

}  // namespace qsd
