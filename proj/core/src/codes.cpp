#include "qsd/codes.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace qsd {

GFVector SupportSet::as_vector(int p) const {
    GFVector v(p, length);
    for (auto c : coordinates) v.e[c] = 1;
    return v;
}

LinearCodeView::LinearCodeView(GFMatrix generator)
    : generator_(std::move(generator)), basis_(generator_.p(), 0, 0) {
    auto [r, pivots] = rref(generator_);
    // keep only the nonzero rows of the rref
    std::vector<int> rows;
    rows.reserve(pivots.size() * generator_.cols());
    for (std::size_t i = 0; i < pivots.size(); i++)
        for (std::size_t j = 0; j < generator_.cols(); j++)
            rows.push_back(r.at(i, j));
    basis_ = GFMatrix(generator_.p(), pivots.size(), generator_.cols(), std::move(rows));
}

namespace {

// C(n,k) capped; returns cap+1 if the true value exceeds cap.
unsigned long long binom_capped(std::size_t n, std::size_t k, unsigned long long cap) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (std::size_t i = 1; i <= k; i++) {
        acc = acc * (n - k + i) / i;
        if (acc > cap) return cap + 1;
    }
    return (unsigned long long)acc;
}

struct TableEntry {
    std::uint64_t key;
    std::uint64_t mask;
    bool operator<(const TableEntry& o) const {
        return key != o.key ? key < o.key : mask < o.mask;
    }
};

// Meet-in-the-middle state for one code. Syndromes are r base-p digits
// folded into a 64-bit key (requires p^r < 2^64; checked by caller).
struct Mitm {
    int p;
    std::size_t n, r, n_left;
    std::vector<std::uint8_t> col;  // r x n column-major basis columns
    std::vector<std::uint64_t> pw;  // p^i

    std::uint64_t fold(const std::uint8_t* syn) const {
        std::uint64_t k = 0;
        for (std::size_t i = 0; i < r; i++) k += std::uint64_t(syn[i]) * pw[i];
        return k;
    }
    std::uint64_t fold_negated(const std::uint8_t* syn) const {
        std::uint64_t k = 0;
        for (std::size_t i = 0; i < r; i++)
            k += std::uint64_t((p - syn[i]) % p) * pw[i];
        return k;
    }
    void add_col(std::uint8_t* syn, std::size_t j) const {
        const std::uint8_t* c = &col[j * r];
        for (std::size_t i = 0; i < r; i++) {
            std::uint8_t s = syn[i] + c[i];
            syn[i] = s >= p ? s - p : s;
        }
    }
    void sub_col(std::uint8_t* syn, std::size_t j) const {
        const std::uint8_t* c = &col[j * r];
        for (std::size_t i = 0; i < r; i++) {
            std::uint8_t s = syn[i] + p - c[i];
            syn[i] = s >= p ? s - p : s;
        }
    }
};

// enumerate all size-`need` subsets of [start, limit), syndromes updated
// incrementally; calls f(mask, syn) at each leaf. Masks record coordinate
// j as bit (j - mask_base), so each half fits a 64-bit word.
template <typename F>
void walk_subsets(const Mitm& mm, std::uint8_t* syn, std::uint64_t mask, std::size_t mask_base,
                  std::size_t start, std::size_t limit, std::size_t need, F&& f) {
    if (need == 0) {
        f(mask, syn);
        return;
    }
    for (std::size_t j = start; j + need <= limit; j++) {
        mm.add_col(syn, j);
        walk_subsets(mm, syn, mask | (std::uint64_t(1) << (j - mask_base)), mask_base, j + 1,
                     limit, need - 1, f);
        mm.sub_col(syn, j);
    }
}

// same, but restricted to subsets whose smallest element lies in
// [first_lo, first_hi), used for budget-partitioned passes
template <typename F>
void walk_subsets_first_in(const Mitm& mm, std::uint8_t* syn, std::size_t first_lo,
                           std::size_t first_hi, std::size_t limit, std::size_t need, F&& f) {
    if (need == 0) {
        if (first_lo == 0) f(0, syn);  // only the unpartitioned pass emits the empty set
        return;
    }
    for (std::size_t j = first_lo; j < first_hi && j + need <= limit; j++) {
        mm.add_col(syn, j);
        walk_subsets(mm, syn, std::uint64_t(1) << j, 0, j + 1, limit, need - 1, f);
        mm.sub_col(syn, j);
    }
}

}  // namespace

std::vector<SupportSet> enumerate_01_dual_codewords(const LinearCodeView& c, std::size_t w,
                                                    const EnumerationOptions& opts) {
    const std::size_t n = c.length();
    const std::size_t r = c.dimension();
    const int p = c.p();
    if (w > n) throw std::invalid_argument("enumerate_01_dual_codewords: weight exceeds length");
    if (n > 128)
        throw std::invalid_argument("enumerate_01_dual_codewords: lengths above 128 unsupported");
    // key folding needs p^r < 2^64
    {
        long double bits = r * std::log2((long double)p);
        if (bits >= 63.5)
            throw std::invalid_argument("enumerate_01_dual_codewords: dual syndrome too wide");
    }

    Mitm mm;
    mm.p = p;
    mm.n = n;
    mm.r = r;
    mm.n_left = (n + 1) / 2;
    mm.col.assign(n * r, 0);
    const GFMatrix& basis = c.basis();
    for (std::size_t j = 0; j < n; j++)
        for (std::size_t i = 0; i < r; i++)
            mm.col[j * r + i] = basis.at(i, j);
    mm.pw.resize(r + 1);
    mm.pw[0] = 1;
    for (std::size_t i = 1; i <= r; i++) mm.pw[i] = mm.pw[i - 1] * p;

    const std::size_t n_left = mm.n_left;
    const std::size_t n_right = n - n_left;
    const std::size_t entry_bytes = sizeof(TableEntry);
    const unsigned long long max_entries = opts.memory_budget_bytes / entry_bytes;
    if (max_entries == 0) throw EnumerationBudgetError("memory budget below one table entry");

    std::vector<SupportSet> out;
    std::vector<TableEntry> table;

    for (std::size_t a = (w > n_right ? w - n_right : 0); a <= std::min(w, n_left); a++) {
        const std::size_t b = w - a;
        unsigned long long left_count = binom_capped(n_left, a, max_entries);

        // partition the left enumeration by leading coordinate when the
        // whole table would exceed the budget
        std::vector<std::pair<std::size_t, std::size_t>> first_ranges;
        if (left_count <= max_entries) {
            first_ranges.push_back({0, n_left});
        } else {
            if (a == 0) throw EnumerationBudgetError("memory budget too small for empty pass");
            std::size_t lo = 0;
            while (lo + a <= n_left) {
                unsigned long long acc = 0;
                std::size_t hi = lo;
                while (hi + a <= n_left) {
                    // subsets with smallest element exactly hi
                    unsigned long long cnt = binom_capped(n_left - hi - 1, a - 1, max_entries);
                    if (acc && acc + cnt > max_entries) break;
                    acc += cnt;
                    hi++;
                    if (acc > max_entries)
                        throw EnumerationBudgetError(
                            "memory budget too small for a single leading-coordinate class");
                }
                first_ranges.push_back({lo, hi});
                lo = hi;
            }
        }

        for (auto [flo, fhi] : first_ranges) {
            table.clear();
            {
                std::vector<std::uint8_t> syn(std::max<std::size_t>(r, 1), 0);
                auto emit = [&](std::uint64_t mask, const std::uint8_t* s) {
                    table.push_back({mm.fold(s), mask});
                };
                if (a == 0)
                    emit(0, syn.data());
                else if (flo == 0 && fhi == n_left)
                    walk_subsets(mm, syn.data(), 0, 0, 0, n_left, a, emit);
                else
                    walk_subsets_first_in(mm, syn.data(), flo, fhi, n_left, a, emit);
            }
            std::sort(table.begin(), table.end());

            // scan the right side and probe for matching negated syndromes
            std::vector<std::uint8_t> syn(std::max<std::size_t>(r, 1), 0);
            auto probe = [&](std::uint64_t right_mask, const std::uint8_t* s) {
                std::uint64_t key = mm.fold_negated(s);
                auto lo_it = std::lower_bound(table.begin(), table.end(), TableEntry{key, 0});
                for (auto it = lo_it; it != table.end() && it->key == key; ++it) {
                    SupportSet sup;
                    sup.length = n;
                    for (std::size_t j = 0; j < n_left; j++)
                        if ((it->mask >> j) & 1) sup.coordinates.push_back(j);
                    for (std::size_t j = 0; j < n_right; j++)
                        if ((right_mask >> j) & 1) sup.coordinates.push_back(n_left + j);
                    out.push_back(std::move(sup));
                }
            };
            if (b > 0)
                walk_subsets(mm, syn.data(), 0, n_left, n_left, n, b, probe);
            else
                probe(0, syn.data());
        }
    }

    std::sort(out.begin(), out.end(),
              [](const SupportSet& x, const SupportSet& y) { return x.coordinates < y.coordinates; });
    return out;
}

namespace {

struct InfoSet {
    std::vector<std::size_t> columns;
    std::vector<std::uint8_t> gen;  // k x n systematic generator, row-major
    std::size_t fresh_rank = 0;
    std::size_t deficiency = 0;
};

// RREF of the generator with columns considered in the order `order`;
// returns pivot columns (original indices) and the reduced row-major matrix.
std::pair<std::vector<std::size_t>, std::vector<std::uint8_t>> rref_ordered(
    const GFMatrix& g, const std::vector<std::size_t>& order) {
    const int p = g.p();
    const std::size_t rows = g.rows(), cols = g.cols();
    std::vector<std::uint8_t> a = g.entries();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    auto inv_mod = [&](int x) {
        int t = 0, newt = 1, rr = p, newr = x;
        while (newr) {
            int q = rr / newr;
            t -= q * newt;
            std::swap(t, newt);
            rr -= q * newr;
            std::swap(rr, newr);
        }
        return t < 0 ? t + p : t;
    };
    for (std::size_t oc = 0; oc < order.size() && r < rows; oc++) {
        std::size_t cidx = order[oc];
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; i++)
            if (a[i * cols + cidx]) { piv = i; break; }
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; j++) std::swap(a[r * cols + j], a[piv * cols + j]);
        int iv = inv_mod(a[r * cols + cidx]);
        if (iv != 1)
            for (std::size_t j = 0; j < cols; j++)
                a[r * cols + j] = std::uint8_t((a[r * cols + j] * iv) % p);
        for (std::size_t i = 0; i < rows; i++) {
            if (i == r) continue;
            int f = a[i * cols + cidx];
            if (!f) continue;
            for (std::size_t j = 0; j < cols; j++) {
                int v2 = a[i * cols + j] - f * a[r * cols + j];
                a[i * cols + j] = std::uint8_t(((v2 % p) + p) % p);
            }
        }
        pivots.push_back(cidx);
        r++;
    }
    return {std::move(pivots), std::move(a)};
}

}  // namespace

MinDistanceVerdict verify_min_distance(const LinearCodeView& c, std::size_t claimed,
                                       const MinDistanceOptions& opts) {
    const std::size_t k = c.dimension();
    const std::size_t n = c.length();
    const int p = c.p();
    if (k == 0) throw std::invalid_argument("verify_min_distance: zero code");
    if (claimed < 1) throw std::invalid_argument("verify_min_distance: claimed distance must be >= 1");

    MinDistanceVerdict v;
    v.claimed = claimed;
    v.witness = GFVector(p, n);

    // build information sets until no fresh pivots remain
    std::vector<InfoSet> sets;
    std::vector<bool> used(n, false);
    while (true) {
        std::vector<std::size_t> order;
        for (std::size_t j = 0; j < n; j++)
            if (!used[j]) order.push_back(j);
        std::size_t fresh_limit = order.size();
        for (std::size_t j = 0; j < n; j++)
            if (used[j]) order.push_back(j);
        auto [pivots, mat] = rref_ordered(c.basis(), order);
        if (pivots.size() != k) break;  // degenerate; cannot happen for a basis
        std::size_t fresh = 0;
        std::vector<bool> fresh_set(n, false);
        for (std::size_t i = 0; i < fresh_limit; i++) fresh_set[order[i]] = true;
        for (auto col : pivots)
            if (fresh_set[col]) fresh++;
        if (fresh == 0) break;
        InfoSet s;
        s.columns = pivots;
        s.gen = std::move(mat);
        s.fresh_rank = fresh;
        s.deficiency = k - fresh;
        for (auto col : pivots) used[col] = true;
        sets.push_back(std::move(s));
        if (sets.size() > n) break;  // safety
    }

    for (const auto& s : sets)
        v.sets.push_back({s.columns, s.fresh_rank, s.deficiency});

    std::size_t best_weight = n + 1;
    std::vector<std::uint8_t> best_word;
    long long enumerated = 0;
    bool budget_hit = false;

    std::vector<std::uint8_t> acc(n, 0);
    std::vector<std::size_t> pos;

    // enumerate messages of weight exactly t against set s
    auto enumerate_level = [&](const InfoSet& s, std::size_t t) {
        // DFS over support positions and nonzero values
        std::vector<std::size_t> stack;
        std::fill(acc.begin(), acc.end(), 0);
        auto add_row = [&](std::size_t row, int scale) {
            const std::uint8_t* g = &s.gen[row * n];
            for (std::size_t j = 0; j < n; j++) {
                int val = acc[j] + scale * g[j];
                acc[j] = std::uint8_t(((val % p) + p) % p);
            }
        };
        std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start,
                                                                std::size_t need) {
            if (budget_hit) return;
            if (need == 0) {
                enumerated++;
                if (enumerated > opts.max_enumerated_messages) {
                    budget_hit = true;
                    return;
                }
                std::size_t wt = 0;
                for (std::size_t j = 0; j < n; j++) wt += (acc[j] != 0);
                if (wt > 0 && wt < best_weight) {
                    best_weight = wt;
                    best_word.assign(acc.begin(), acc.end());
                }
                return;
            }
            for (std::size_t row = start; row + need <= k; row++) {
                for (int val = 1; val < p; val++) {
                    add_row(row, val);
                    rec(row + 1, need - 1);
                    add_row(row, -val);
                    if (budget_hit) return;
                }
            }
        };
        rec(0, t);
    };

    for (std::size_t t = 1; t <= k; t++) {
        for (const auto& s : sets) {
            enumerate_level(s, t);
            if (budget_hit) break;
        }
        if (budget_hit) break;
        v.enumerated_up_to = t;
        long long lb = 0;
        for (const auto& s : sets)
            lb += std::max<long long>(0, (long long)t + 1 - (long long)s.deficiency);
        v.lower_bound = lb;

        if (best_weight < claimed) {
            v.kind = MinDistanceVerdict::Kind::smaller_with_witness;
            v.found_weight = best_weight;
            v.witness = GFVector(p, std::vector<int>(best_word.begin(), best_word.end()));
            return v;
        }
        if (lb >= (long long)claimed && best_weight == claimed) {
            v.kind = MinDistanceVerdict::Kind::confirmed;
            v.found_weight = best_weight;
            v.witness = GFVector(p, std::vector<int>(best_word.begin(), best_word.end()));
            return v;
        }
        if (lb > (long long)claimed && best_weight > claimed) {
            v.kind = MinDistanceVerdict::Kind::larger_than_claimed;
            v.found_weight = best_weight <= n ? best_weight : 0;
            if (best_weight <= n)
                v.witness = GFVector(p, std::vector<int>(best_word.begin(), best_word.end()));
            return v;
        }
    }

    v.kind = MinDistanceVerdict::Kind::inconclusive;
    v.found_weight = best_weight <= n ? best_weight : 0;
    if (best_weight <= n)
        v.witness = GFVector(p, std::vector<int>(best_word.begin(), best_word.end()));
    return v;
}

std::pair<GFVector, std::size_t> weight_of(const LinearCodeView& c, const GFVector& message) {
    if (message.len() != c.dimension() || message.p != c.p())
        throw std::invalid_argument("weight_of: message length must equal code dimension");
    const int p = c.p();
    const std::size_t n = c.length();
    GFVector word(p, n);
    for (std::size_t i = 0; i < c.dimension(); i++) {
        int m = message.e[i];
        if (!m) continue;
        for (std::size_t j = 0; j < n; j++)
            word.e[j] = std::uint8_t((word.e[j] + m * c.basis().at(i, j)) % p);
    }
    return {word, word.weight()};
}

void write_supports(std::ostream& os, const std::vector<SupportSet>& supports) {
    std::size_t length = supports.empty() ? 0 : supports.front().length;
    std::size_t weight = supports.empty() ? 0 : supports.front().weight();
    os << length << " " << weight << " " << supports.size() << "\n";
    for (const auto& s : supports) {
        for (std::size_t i = 0; i < s.coordinates.size(); i++)
            os << (i ? " " : "") << s.coordinates[i];
        os << "\n";
    }
}

std::vector<SupportSet> read_supports(std::istream& is) {
    std::size_t length = 0, weight = 0, count = 0;
    if (!(is >> length >> weight >> count))
        throw std::invalid_argument("read_supports: bad header");
    std::string line;
    std::getline(is, line);
    std::vector<SupportSet> out;
    out.reserve(count);
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        SupportSet s;
        s.length = length;
        std::istringstream ls(line);
        std::size_t x;
        while (ls >> x) s.coordinates.push_back(x);
        if (s.coordinates.size() != weight)
            throw std::invalid_argument("read_supports: support weight mismatch");
        for (std::size_t i = 0; i + 1 < s.coordinates.size(); i++)
            if (s.coordinates[i] >= s.coordinates[i + 1])
                throw std::invalid_argument("read_supports: coordinates not increasing");
        if (!s.coordinates.empty() && s.coordinates.back() >= length)
            throw std::invalid_argument("read_supports: coordinate out of range");
        out.push_back(std::move(s));
    }
    if (out.size() != count) throw std::invalid_argument("read_supports: count mismatch");
    return out;
}

}  // namespace qsd
