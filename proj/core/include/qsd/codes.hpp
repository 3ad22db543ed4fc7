#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qsd/gf.hpp"

namespace qsd {

/// Support of a fixed-weight {0,1} vector: the coordinate indices that are 1.
struct SupportSet {
    std::vector<std::size_t> coordinates;  // strictly increasing
    std::size_t length = 0;                // ambient length

    std::size_t weight() const { return coordinates.size(); }
    GFVector as_vector(int p) const;
    bool operator==(const SupportSet&) const = default;
    auto operator<=>(const SupportSet&) const = default;
};

/// A linear code presented by a spanning set of rows; the reduced basis and
/// dimension are computed once and cached.
class LinearCodeView {
public:
    explicit LinearCodeView(GFMatrix generator);

    int p() const { return generator_.p(); }
    std::size_t length() const { return generator_.cols(); }
    std::size_t dimension() const { return basis_.rows(); }
    const GFMatrix& generator() const { return generator_; }
    /// RREF basis of the row space, dimension() rows.
    const GFMatrix& basis() const { return basis_; }

private:
    GFMatrix generator_;
    GFMatrix basis_;
};

struct EnumerationOptions {
    std::size_t memory_budget_bytes = std::size_t(4) << 30;  // 4 GiB
};

/// The enumeration would overshoot its memory budget even after pass
/// partitioning; never raised silently.
class EnumerationBudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// All supports S with |S| = w such that the {0,1} indicator of S is
/// orthogonal to every row of the generator (i.e. lies in the dual code).
/// Exhaustive meet-in-the-middle over a coordinate split; output sorted
/// lexicographically by coordinate list.
std::vector<SupportSet> enumerate_01_dual_codewords(const LinearCodeView& c, std::size_t w,
                                                    const EnumerationOptions& opts = {});

struct InformationSetAccount {
    std::vector<std::size_t> columns;  // the k columns of this set
    std::size_t fresh_rank = 0;        // pivots among previously unused columns
    std::size_t deficiency = 0;        // dimension minus fresh_rank
};

struct MinDistanceOptions {
    long long max_enumerated_messages = 400'000'000;  // across all levels
};

/// Outcome of information-set minimum distance verification. The sets and
/// the enumeration depth are recorded so the lower-bound argument can be
/// audited: every codeword not enumerated has weight at least lower_bound.
struct MinDistanceVerdict {
    enum class Kind {
        confirmed,             // weight-d codeword found, none smaller possible
        smaller_with_witness,  // a nonzero codeword of weight < d was found
        larger_than_claimed,   // all codewords proved heavier than d
        inconclusive           // enumeration budget exhausted
    };
    Kind kind = Kind::inconclusive;
    std::size_t claimed = 0;
    std::size_t found_weight = 0;  // least nonzero codeword weight seen
    GFVector witness;              // codeword of weight found_weight
    std::vector<InformationSetAccount> sets;
    std::size_t enumerated_up_to = 0;  // message weight enumerated per set
    long long lower_bound = 0;         // bound on unenumerated codewords
};

/// Verify a claimed minimum distance by Brouwer-Zimmermann style
/// information-set enumeration. Throws std::invalid_argument on a zero code.
MinDistanceVerdict verify_min_distance(const LinearCodeView& c, std::size_t claimed,
                                       const MinDistanceOptions& opts = {});

/// Encode a message against the cached RREF basis and report its weight.
std::pair<GFVector, std::size_t> weight_of(const LinearCodeView& c, const GFVector& message);

/// Codeword-list text format: one support per line, space-separated 0-based
/// indices, lines sorted. First line: "<length> <weight> <count>".
void write_supports(std::ostream& os, const std::vector<SupportSet>& supports);
std::vector<SupportSet> read_supports(std::istream& is);

}  // namespace qsd
