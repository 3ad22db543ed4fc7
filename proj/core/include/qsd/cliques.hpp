#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <vector>

#include "qsd/codes.hpp"

namespace qsd {

/// Fixed-size bitset over dynamically chosen universe, used for adjacency
/// rows and candidate sets in the clique search.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t universe() const { return n_; }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    std::size_t count() const;
    bool empty() const;
    bool intersects(const VertexSet& o) const;

    VertexSet& operator&=(const VertexSet& o);
    VertexSet& operator|=(const VertexSet& o);
    void subtract(const VertexSet& o);  // this &= ~o

    /// Index of the lowest set bit at or after `from`; npos when none.
    static constexpr std::size_t npos = std::size_t(-1);
    std::size_t next(std::size_t from = 0) const;

    bool operator==(const VertexSet&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

/// Graph on codeword supports; vertices are adjacent when their support
/// intersection size lies in the allowed set ({0,3} for the designs here).
struct CompatibilityGraph {
    std::size_t n = 0;
    std::vector<VertexSet> adjacency;       // n rows, symmetric, no loops
    std::vector<SupportSet> vertex_payload; // may be empty for imported graphs

    bool adjacent(std::size_t i, std::size_t j) const { return adjacency[i].test(j); }
    std::size_t degree(std::size_t i) const { return adjacency[i].count(); }
    std::size_t edge_count() const;
};

CompatibilityGraph build_compatibility_graph(const std::vector<SupportSet>& supports,
                                             const std::set<std::size_t>& allowed = {0, 3});

/// Build a graph directly from an edge list (0-based, no loops).
CompatibilityGraph graph_from_edges(std::size_t n,
                                    const std::vector<std::pair<std::size_t, std::size_t>>& edges);

struct CliqueResult {
    enum class ProofMode { exact_maximum, early_exit_at_bound };
    std::size_t size = 0;
    std::vector<std::size_t> witness;  // pairwise adjacent, sorted ascending
    ProofMode proof_mode = ProofMode::exact_maximum;
};

/// Exact maximum clique via branch and bound: vertices ordered by
/// non-increasing degree (ties by index), incremental subset bounds in the
/// style of Ostergard's cliquer, greedy-coloring pruning. The witness is the
/// lexicographically least maximum clique in original vertex numbering.
CliqueResult max_clique(const CompatibilityGraph& g);

/// True iff the maximum clique size is strictly below `bound`; in that case
/// the search was exhaustive and the result carries the exact maximum.
/// Otherwise false with a witness clique of size >= bound.
std::pair<bool, CliqueResult> clique_below(const CompatibilityGraph& g, std::size_t bound);

/// Re-check a witness: pairwise adjacency and distinctness.
bool verify_clique(const CompatibilityGraph& g, const std::vector<std::size_t>& witness);

/// Number of classes of a greedy partition of G[u] into independent sets;
/// a sound upper bound on the clique number of G[u].
std::size_t greedy_coloring_bound(const CompatibilityGraph& g, const VertexSet& u);

/// Edge-list text format: header "n m", then one "i j" line per edge,
/// 0-based, i < j, sorted.
void write_graph(std::ostream& os, const CompatibilityGraph& g);
CompatibilityGraph read_graph(std::istream& is);

}  // namespace qsd
