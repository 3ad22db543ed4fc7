#include "qsd/cliques.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace qsd {

std::size_t VertexSet::count() const {
    std::size_t c = 0;
    for (auto w : w_) c += std::size_t(__builtin_popcountll(w));
    return c;
}

bool VertexSet::empty() const {
    for (auto w : w_)
        if (w) return false;
    return true;
}

bool VertexSet::intersects(const VertexSet& o) const {
    std::size_t m = std::min(w_.size(), o.w_.size());
    for (std::size_t i = 0; i < m; i++)
        if (w_[i] & o.w_[i]) return true;
    return false;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < w_.size(); i++) w_[i] &= o.w_[i];
    return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < w_.size(); i++) w_[i] |= o.w_[i];
    return *this;
}

void VertexSet::subtract(const VertexSet& o) {
    for (std::size_t i = 0; i < w_.size(); i++) w_[i] &= ~o.w_[i];
}

std::size_t VertexSet::next(std::size_t from) const {
    if (from >= n_) return npos;
    std::size_t wi = from >> 6;
    std::uint64_t cur = w_[wi] & (~std::uint64_t(0) << (from & 63));
    while (true) {
        if (cur) return (wi << 6) + std::size_t(__builtin_ctzll(cur));
        if (++wi >= w_.size()) return npos;
        cur = w_[wi];
    }
}

std::size_t CompatibilityGraph::edge_count() const {
    std::size_t total = 0;
    for (const auto& row : adjacency) total += row.count();
    return total / 2;
}

CompatibilityGraph build_compatibility_graph(const std::vector<SupportSet>& supports,
                                             const std::set<std::size_t>& allowed) {
    CompatibilityGraph g;
    g.n = supports.size();
    g.vertex_payload = supports;
    g.adjacency.assign(g.n, VertexSet(g.n));
    if (g.n == 0) return g;
    const std::size_t length = supports.front().length;
    for (const auto& s : supports)
        if (s.length != length)
            throw std::invalid_argument("build_compatibility_graph: mixed ambient lengths");

    // support masks for word-parallel intersection counting
    const std::size_t words = (length + 63) / 64;
    std::vector<std::uint64_t> masks(g.n * words, 0);
    for (std::size_t i = 0; i < g.n; i++)
        for (auto c : supports[i].coordinates)
            masks[i * words + (c >> 6)] |= std::uint64_t(1) << (c & 63);

    for (std::size_t i = 0; i < g.n; i++) {
        for (std::size_t j = i + 1; j < g.n; j++) {
            std::size_t common = 0;
            for (std::size_t w = 0; w < words; w++)
                common += std::size_t(
                    __builtin_popcountll(masks[i * words + w] & masks[j * words + w]));
            if (allowed.count(common)) {
                g.adjacency[i].set(j);
                g.adjacency[j].set(i);
            }
        }
    }
    return g;
}

CompatibilityGraph graph_from_edges(std::size_t n,
                                    const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    CompatibilityGraph g;
    g.n = n;
    g.adjacency.assign(n, VertexSet(n));
    for (auto [i, j] : edges) {
        if (i == j || i >= n || j >= n)
            throw std::invalid_argument("graph_from_edges: bad edge");
        g.adjacency[i].set(j);
        g.adjacency[j].set(i);
    }
    return g;
}

bool verify_clique(const CompatibilityGraph& g, const std::vector<std::size_t>& witness) {
    for (std::size_t a = 0; a < witness.size(); a++) {
        if (witness[a] >= g.n) return false;
        for (std::size_t b = a + 1; b < witness.size(); b++)
            if (witness[a] == witness[b] || !g.adjacent(witness[a], witness[b])) return false;
    }
    return true;
}

std::size_t greedy_coloring_bound(const std::vector<VertexSet>& adjacency, const VertexSet& u) {
    VertexSet uncolored = u;
    std::size_t bound = 0;
    while (!uncolored.empty()) {
        bound++;
        // one greedy independent class
        VertexSet avail = uncolored;
        std::size_t v = avail.next();
        while (v != VertexSet::npos) {
            uncolored.reset(v);
            avail.reset(v);
            avail.subtract(adjacency[v]);
            v = avail.next(v + 1);
        }
    }
    return bound;
}

std::size_t greedy_coloring_bound(const CompatibilityGraph& g, const VertexSet& u) {
    return greedy_coloring_bound(g.adjacency, u);
}

namespace {

/// Branch and bound in the style of Ostergard's cliquer: vertices relabeled
/// by non-increasing degree (ties by index), subsets S_i = {i..n-1} solved
/// from the back, c[i] = omega(G[S_i]) reused as a pruning bound, plus a
/// greedy-coloring bound on larger candidate sets.
struct CliqueSearch {
    std::size_t n;
    std::vector<std::size_t> order;  // position -> original vertex
    std::vector<VertexSet> adj;      // position space
    std::vector<std::size_t> c;
    std::size_t best = 0;
    std::vector<std::size_t> best_positions;
    std::vector<std::size_t> stack;
    std::size_t target;  // stop once a clique this large is on record
    bool stopped = false;
    bool found = false;  // improved within the current round
    std::vector<VertexSet> pool;

    CliqueSearch(const CompatibilityGraph& g, std::size_t stop_at) : n(g.n), target(stop_at) {
        order.resize(n);
        for (std::size_t i = 0; i < n; i++) order[i] = i;
        std::vector<std::size_t> deg(n);
        for (std::size_t i = 0; i < n; i++) deg[i] = g.degree(i);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return deg[a] != deg[b] ? deg[a] > deg[b] : a < b;
        });
        std::vector<std::size_t> pos(n);
        for (std::size_t i = 0; i < n; i++) pos[order[i]] = i;
        adj.assign(n, VertexSet(n));
        for (std::size_t a = 0; a < n; a++)
            for (std::size_t b = g.adjacency[a].next(); b != VertexSet::npos;
                 b = g.adjacency[a].next(b + 1))
                adj[pos[a]].set(pos[b]);
        c.assign(n + 1, 0);
        pool.assign(n + 2, VertexSet(n));
    }

    void record() {
        best = stack.size();
        best_positions = stack;
        found = true;
        if (best >= target) stopped = true;
    }

    void expand(VertexSet& u, std::size_t depth) {
        if (stopped) return;
        if (u.empty()) {
            if (stack.size() > best) record();
            return;
        }
        std::size_t cnt = u.count();
        if (stack.size() + cnt <= best) return;
        if (cnt >= 8 && stack.size() + greedy_coloring_bound(adj, u) <= best) return;
        while (true) {
            std::size_t v = u.next();
            if (v == VertexSet::npos) return;
            if (stack.size() + c[v] <= best) return;  // u ⊆ S_v, so c[v] caps the extension
            u.reset(v);
            VertexSet& nu = pool[depth];
            nu = u;
            nu &= adj[v];
            stack.push_back(v);
            expand(nu, depth + 1);
            stack.pop_back();
            if (stopped || found) return;  // omega(S_i) <= omega(S_{i+1}) + 1
            if (stack.size() + u.count() <= best) return;
        }
    }

    void run() {
        for (std::size_t i = n; i-- > 0;) {
            found = false;
            VertexSet u = adj[i];
            for (std::size_t v = u.next(); v != VertexSet::npos && v <= i; v = u.next(v + 1))
                u.reset(v);
            stack.assign(1, i);
            if (stack.size() > best) record();
            if (!stopped) expand(u, 0);
            stack.clear();
            if (stopped) return;
            c[i] = best;
        }
    }

    std::vector<std::size_t> witness_original() const {
        std::vector<std::size_t> w;
        w.reserve(best_positions.size());
        for (auto p : best_positions) w.push_back(order[p]);
        std::sort(w.begin(), w.end());
        return w;
    }
};

// decision search: does G[u] contain a clique on `need` vertices?
bool exists_clique(const std::vector<VertexSet>& adj, VertexSet u, std::size_t need) {
    while (true) {
        if (need == 0) return true;
        if (u.count() < need) return false;
        if (greedy_coloring_bound(adj, u) < need) return false;
        std::size_t v = u.next();
        u.reset(v);
        VertexSet taken = u;
        taken &= adj[v];
        if (exists_clique(adj, taken, need - 1)) return true;
        // else drop v and continue with the rest
    }
}

// lexicographically least clique of the given size, original numbering
std::vector<std::size_t> lex_least_clique(const CompatibilityGraph& g, std::size_t size) {
    std::vector<std::size_t> chosen;
    VertexSet candidates(g.n);
    for (std::size_t i = 0; i < g.n; i++) candidates.set(i);
    while (chosen.size() < size) {
        bool advanced = false;
        for (std::size_t v = candidates.next(); v != VertexSet::npos;
             v = candidates.next(v + 1)) {
            VertexSet rest = candidates;
            rest &= g.adjacency[v];
            for (std::size_t w = rest.next(); w != VertexSet::npos && w <= v; w = rest.next(w + 1))
                rest.reset(w);
            if (exists_clique(g.adjacency, rest, size - chosen.size() - 1)) {
                chosen.push_back(v);
                candidates = rest;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;  // unreachable when a clique of `size` exists
    }
    return chosen;
}

}  // namespace

CliqueResult max_clique(const CompatibilityGraph& g) {
    CliqueResult res;
    if (g.n == 0) return res;
    CliqueSearch s(g, g.n + 1);  // unreachable target: fully exact search
    s.run();
    res.size = s.best;
    res.proof_mode = CliqueResult::ProofMode::exact_maximum;
    res.witness = lex_least_clique(g, res.size);
    return res;
}

std::pair<bool, CliqueResult> clique_below(const CompatibilityGraph& g, std::size_t bound) {
    if (bound < 1) throw std::invalid_argument("clique_below: bound must be >= 1");
    CliqueResult res;
    if (g.n == 0) return {true, res};
    CliqueSearch s(g, bound);
    s.run();
    res.size = s.best;
    if (s.stopped) {
        res.proof_mode = CliqueResult::ProofMode::early_exit_at_bound;
        res.witness = s.witness_original();
        return {false, res};
    }
    res.proof_mode = CliqueResult::ProofMode::exact_maximum;
    res.witness = lex_least_clique(g, res.size);
    return {res.size < bound, res};
}

void write_graph(std::ostream& os, const CompatibilityGraph& g) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < g.n; i++)
        for (std::size_t j = g.adjacency[i].next(i + 1); j != VertexSet::npos;
             j = g.adjacency[i].next(j + 1))
            edges.push_back({i, j});
    std::sort(edges.begin(), edges.end());
    os << g.n << " " << edges.size() << "\n";
    for (auto [i, j] : edges) os << i << " " << j << "\n";
}

CompatibilityGraph read_graph(std::istream& is) {
    std::size_t n = 0, m = 0;
    if (!(is >> n >> m)) throw std::invalid_argument("read_graph: bad header");
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    edges.reserve(m);
    for (std::size_t e = 0; e < m; e++) {
        std::size_t i = 0, j = 0;
        if (!(is >> i >> j)) throw std::invalid_argument("read_graph: truncated edge list");
        if (i >= j) throw std::invalid_argument("read_graph: edges must satisfy i < j");
        edges.push_back({i, j});
    }
    return graph_from_edges(n, edges);
}

}  // namespace qsd
