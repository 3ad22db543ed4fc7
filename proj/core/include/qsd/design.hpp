#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsd/gf.hpp"

namespace qsd {

/// Labeled points-by-blocks 0/1 incidence structure.
class IncidenceStructure {
public:
    IncidenceStructure(std::size_t v, std::size_t b, std::vector<std::uint8_t> matrix,
                       std::vector<std::string> point_labels = {},
                       std::vector<std::string> block_labels = {});

    std::size_t v() const { return v_; }
    std::size_t b() const { return b_; }
    bool incident(std::size_t point, std::size_t block) const { return m_[point * b_ + block] != 0; }

    const std::vector<std::string>& point_labels() const { return point_labels_; }
    const std::vector<std::string>& block_labels() const { return block_labels_; }

    std::vector<std::size_t> block_points(std::size_t block) const;
    std::vector<std::size_t> point_blocks(std::size_t point) const;
    std::size_t block_size(std::size_t block) const;

    /// Incidence matrix as a GF(p) matrix (v rows, b columns).
    GFMatrix matrix_mod(int p) const;

    bool operator==(const IncidenceStructure&) const = default;

private:
    std::size_t v_, b_;
    std::vector<std::uint8_t> m_;  // row-major, v x b
    std::vector<std::string> point_labels_, block_labels_;
};

/// Parameters of a t-(v,k,lambda) design together with the derived
/// quantities b (block count) and r (replication number, lambda_1).
struct DesignSignature {
    long long t = 0, v = 0, k = 0, lam = 0, b = 0, r = 0;
    bool operator==(const DesignSignature&) const = default;
    std::string to_string() const;
};

/// Signature from (t,v,k,lambda) alone. Empty when the parameters are
/// inadmissible (b or r not integral, or out of range).
std::optional<DesignSignature> make_signature(long long t, long long v, long long k, long long lam);

/// lambda_s = lambda * C(v-s, t-s) / C(k-s, t-s); empty when the division
/// is not exact (inadmissible parameters) or s is out of range.
std::optional<long long> lambda_s(const DesignSignature& sig, long long s);

struct TDesignCheck {
    enum class Failure {
        none,
        empty_block,
        unequal_block_sizes,
        nonconstant_lambda,
        strength_exceeds_block_size  // t > k: no t-subset fits in any block
    };

    bool ok = false;
    DesignSignature signature;  // valid when ok
    Failure failure = Failure::none;
    // witness for unequal_block_sizes: two block indices with different sizes
    std::size_t block_a = 0, block_b = 0;
    // witness for nonconstant_lambda: a t-subset with a deviant block count
    std::vector<std::size_t> witness_subset;
    long long witness_count = 0;
    long long expected_count = 0;
};

/// Exhaustive verification that D is a t-design: all blocks share one size k
/// and every t-subset of points lies in a constant number of blocks.
TDesignCheck verify_t_design(const IncidenceStructure& d, std::size_t t);

IncidenceStructure dual(const IncidenceStructure& d);

/// Derived design with respect to a block: points of B, blocks B ∩ B_j (j != B).
/// Empty intersections are retained unless strip_empty is set.
IncidenceStructure block_derived(const IncidenceStructure& d, std::size_t block,
                                 bool strip_empty = false);

/// Residual design with respect to a block: points X \ B, blocks B_j \ B (j != B).
IncidenceStructure block_residual(const IncidenceStructure& d, std::size_t block);

/// Blocks through x with x removed.
IncidenceStructure point_derived(const IncidenceStructure& d, std::size_t point);

/// Blocks avoiding x.
IncidenceStructure point_residual(const IncidenceStructure& d, std::size_t point);

/// (t-1)-(v-1, k-1, lambda): parameter arithmetic only.
std::optional<DesignSignature> point_derived_signature(const DesignSignature& sig);

/// (t-1)-(v-1, k, lambda_{t-1} - lambda): parameter arithmetic only.
std::optional<DesignSignature> point_residual_signature(const DesignSignature& sig);

/// Symmetric designs only: derived-of-block is a 2-(k, lambda, lambda-1) design.
std::optional<DesignSignature> block_derived_signature(const DesignSignature& sig);

/// Symmetric designs only: residual-of-block is a 2-(v-k, k-lambda, lambda) design.
std::optional<DesignSignature> block_residual_signature(const DesignSignature& sig);

/// Multiset of pairwise block intersection sizes.
struct IntersectionProfile {
    std::map<std::size_t, std::size_t> sizes;  // size -> multiplicity
};

IntersectionProfile intersection_profile(const IncidenceStructure& d);

struct QuasiSymmetry {
    std::size_t x = 0, y = 0;  // x <= y
    bool single_value = false; // all pairwise intersections equal (symmetric-like)
};

/// The two block intersection numbers when the profile has exactly two
/// distinct values; single-value profiles are reported with the flag set.
/// Empty when three or more distinct intersection sizes occur.
std::optional<QuasiSymmetry> is_quasi_symmetric(const IncidenceStructure& d);

struct EmbeddabilityCheck {
    bool holds = false;           // rank_p(full) == rank_p(residual) + 1
    std::size_t rank_full = 0;
    std::size_t rank_residual = 0;
};

/// Linear embeddability of the block residual over GF(p): the p-rank of the
/// full incidence matrix must exceed the residual's p-rank by exactly one.
EmbeddabilityCheck linear_embeddability_check(const IncidenceStructure& d, std::size_t block, int p);

}  // namespace qsd
