#include "qsd/design.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qsd {

namespace {

std::vector<std::string> default_labels(const char* prefix, std::size_t n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; i++) out.push_back(prefix + std::to_string(i));
    return out;
}

void check_labels_unique(const std::vector<std::string>& labels, const char* what) {
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size())
        throw std::invalid_argument(std::string(what) + " labels not unique");
}

// C(n, k) with overflow guard; empty on overflow.
std::optional<long long> binom(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (long long i = 1; i <= k; i++) {
        acc = acc * (unsigned long long)(n - k + i);
        acc /= (unsigned long long)i;
        if (acc > (unsigned __int128)INT64_MAX) return std::nullopt;
    }
    return (long long)acc;
}

// lambda * C(v-s, t-s) / C(k-s, t-s), exact or empty.
std::optional<long long> lambda_formula(long long lam, long long v, long long k,
                                        long long t, long long s) {
    auto top = binom(v - s, t - s);
    auto bot = binom(k - s, t - s);
    if (!top || !bot || *bot == 0) return std::nullopt;
    unsigned __int128 num = (unsigned __int128)lam * (unsigned long long)*top;
    if (num % (unsigned long long)*bot != 0) return std::nullopt;
    unsigned __int128 q = num / (unsigned long long)*bot;
    if (q > (unsigned __int128)INT64_MAX) return std::nullopt;
    return (long long)q;
}

}  // namespace

IncidenceStructure::IncidenceStructure(std::size_t v, std::size_t b,
                                       std::vector<std::uint8_t> matrix,
                                       std::vector<std::string> point_labels,
                                       std::vector<std::string> block_labels)
    : v_(v), b_(b), m_(std::move(matrix)),
      point_labels_(std::move(point_labels)), block_labels_(std::move(block_labels)) {
    if (m_.size() != v_ * b_)
        throw std::invalid_argument("incidence matrix size mismatch");
    for (auto e : m_)
        if (e > 1) throw std::invalid_argument("incidence entries must be 0/1");
    if (point_labels_.empty()) point_labels_ = default_labels("p", v_);
    if (block_labels_.empty()) block_labels_ = default_labels("B", b_);
    if (point_labels_.size() != v_ || block_labels_.size() != b_)
        throw std::invalid_argument("label count mismatch");
    check_labels_unique(point_labels_, "point");
    check_labels_unique(block_labels_, "block");
}

std::vector<std::size_t> IncidenceStructure::block_points(std::size_t block) const {
    std::vector<std::size_t> pts;
    for (std::size_t i = 0; i < v_; i++)
        if (incident(i, block)) pts.push_back(i);
    return pts;
}

std::vector<std::size_t> IncidenceStructure::point_blocks(std::size_t point) const {
    std::vector<std::size_t> bs;
    for (std::size_t j = 0; j < b_; j++)
        if (incident(point, j)) bs.push_back(j);
    return bs;
}

std::size_t IncidenceStructure::block_size(std::size_t block) const {
    std::size_t k = 0;
    for (std::size_t i = 0; i < v_; i++) k += incident(i, block);
    return k;
}

GFMatrix IncidenceStructure::matrix_mod(int p) const {
    std::vector<int> e(m_.begin(), m_.end());
    return GFMatrix(p, v_, b_, std::move(e));
}

std::string DesignSignature::to_string() const {
    return std::to_string(t) + "-(" + std::to_string(v) + "," + std::to_string(k) + "," +
           std::to_string(lam) + ")";
}

std::optional<DesignSignature> make_signature(long long t, long long v, long long k, long long lam) {
    if (t < 0 || k < t || v < k || lam < 0) return std::nullopt;
    auto b = lambda_formula(lam, v, k, t, 0);
    if (!b) return std::nullopt;
    long long r = 0;
    if (t >= 1) {
        auto r1 = lambda_formula(lam, v, k, t, 1);
        if (!r1) return std::nullopt;
        r = *r1;
    }
    return DesignSignature{t, v, k, lam, *b, r};
}

std::optional<long long> lambda_s(const DesignSignature& sig, long long s) {
    if (s < 0 || s > sig.t) return std::nullopt;
    return lambda_formula(sig.lam, sig.v, sig.k, sig.t, s);
}

TDesignCheck verify_t_design(const IncidenceStructure& d, std::size_t t) {
    TDesignCheck out;
    const std::size_t v = d.v(), b = d.b();
    if (t > v) throw std::invalid_argument("verify_t_design: t > v");

    // uniform nonzero block size first
    std::size_t k = b ? d.block_size(0) : 0;
    for (std::size_t j = 0; j < b; j++) {
        std::size_t kj = d.block_size(j);
        if (kj == 0) {
            out.failure = TDesignCheck::Failure::empty_block;
            out.block_a = j;
            return out;
        }
        if (kj != k) {
            out.failure = TDesignCheck::Failure::unequal_block_sizes;
            out.block_a = 0;
            out.block_b = j;
            return out;
        }
    }
    if (b > 0 && k < t) {
        out.failure = TDesignCheck::Failure::strength_exceeds_block_size;
        return out;
    }

    // walk all t-subsets of points; count containing blocks
    std::vector<std::size_t> idx(t);
    for (std::size_t i = 0; i < t; i++) idx[i] = i;
    long long lam = -1;
    bool first = true;
    auto count_blocks = [&]() {
        long long cnt = 0;
        for (std::size_t j = 0; j < b; j++) {
            bool all = true;
            for (std::size_t i = 0; i < t && all; i++) all = d.incident(idx[i], j);
            cnt += all;
        }
        return cnt;
    };
    if (t == 0) {
        lam = b;
    } else {
        while (true) {
            long long cnt = count_blocks();
            if (first) {
                lam = cnt;
                first = false;
            } else if (cnt != lam) {
                out.failure = TDesignCheck::Failure::nonconstant_lambda;
                out.witness_subset = idx;
                out.witness_count = cnt;
                out.expected_count = lam;
                return out;
            }
            // next t-subset
            std::size_t i = t;
            while (i > 0 && idx[i - 1] == v - t + (i - 1)) i--;
            if (i == 0) break;
            idx[i - 1]++;
            for (std::size_t j2 = i; j2 < t; j2++) idx[j2] = idx[j2 - 1] + 1;
        }
    }

    out.ok = true;
    long long r = 0;
    if (t >= 1) {
        // replication number, constant for t >= 1
        auto r1 = lambda_formula(lam, (long long)v, (long long)k, (long long)t, 1);
        r = r1 ? *r1 : 0;
    }
    out.signature = DesignSignature{(long long)t, (long long)v, (long long)k, lam, (long long)b, r};
    return out;
}

IncidenceStructure dual(const IncidenceStructure& d) {
    std::vector<std::uint8_t> m(d.v() * d.b());
    for (std::size_t i = 0; i < d.v(); i++)
        for (std::size_t j = 0; j < d.b(); j++)
            if (d.incident(i, j)) m[j * d.v() + i] = 1;
    return IncidenceStructure(d.b(), d.v(), std::move(m), d.block_labels(), d.point_labels());
}

IncidenceStructure block_derived(const IncidenceStructure& d, std::size_t block, bool strip_empty) {
    if (block >= d.b()) throw std::out_of_range("block_derived: bad block index");
    auto pts = d.block_points(block);
    std::vector<std::size_t> keep_blocks;
    for (std::size_t j = 0; j < d.b(); j++) {
        if (j == block) continue;
        if (strip_empty) {
            bool nonempty = false;
            for (auto p : pts)
                if (d.incident(p, j)) { nonempty = true; break; }
            if (!nonempty) continue;
        }
        keep_blocks.push_back(j);
    }
    std::vector<std::uint8_t> m(pts.size() * keep_blocks.size(), 0);
    std::vector<std::string> plabels, blabels;
    for (auto p : pts) plabels.push_back(d.point_labels()[p]);
    for (auto j : keep_blocks) blabels.push_back(d.block_labels()[j]);
    for (std::size_t pi = 0; pi < pts.size(); pi++)
        for (std::size_t bj = 0; bj < keep_blocks.size(); bj++)
            if (d.incident(pts[pi], keep_blocks[bj])) m[pi * keep_blocks.size() + bj] = 1;
    return IncidenceStructure(pts.size(), keep_blocks.size(), std::move(m),
                              std::move(plabels), std::move(blabels));
}

IncidenceStructure block_residual(const IncidenceStructure& d, std::size_t block) {
    if (block >= d.b()) throw std::out_of_range("block_residual: bad block index");
    std::vector<std::size_t> pts;
    for (std::size_t i = 0; i < d.v(); i++)
        if (!d.incident(i, block)) pts.push_back(i);
    std::vector<std::size_t> keep_blocks;
    for (std::size_t j = 0; j < d.b(); j++)
        if (j != block) keep_blocks.push_back(j);
    std::vector<std::uint8_t> m(pts.size() * keep_blocks.size(), 0);
    std::vector<std::string> plabels, blabels;
    for (auto p : pts) plabels.push_back(d.point_labels()[p]);
    for (auto j : keep_blocks) blabels.push_back(d.block_labels()[j]);
    for (std::size_t pi = 0; pi < pts.size(); pi++)
        for (std::size_t bj = 0; bj < keep_blocks.size(); bj++)
            if (d.incident(pts[pi], keep_blocks[bj])) m[pi * keep_blocks.size() + bj] = 1;
    return IncidenceStructure(pts.size(), keep_blocks.size(), std::move(m),
                              std::move(plabels), std::move(blabels));
}

IncidenceStructure point_derived(const IncidenceStructure& d, std::size_t point) {
    if (point >= d.v()) throw std::out_of_range("point_derived: bad point index");
    std::vector<std::size_t> pts;
    for (std::size_t i = 0; i < d.v(); i++)
        if (i != point) pts.push_back(i);
    auto blocks = d.point_blocks(point);
    std::vector<std::uint8_t> m(pts.size() * blocks.size(), 0);
    std::vector<std::string> plabels, blabels;
    for (auto p : pts) plabels.push_back(d.point_labels()[p]);
    for (auto j : blocks) blabels.push_back(d.block_labels()[j]);
    for (std::size_t pi = 0; pi < pts.size(); pi++)
        for (std::size_t bj = 0; bj < blocks.size(); bj++)
            if (d.incident(pts[pi], blocks[bj])) m[pi * blocks.size() + bj] = 1;
    return IncidenceStructure(pts.size(), blocks.size(), std::move(m),
                              std::move(plabels), std::move(blabels));
}

IncidenceStructure point_residual(const IncidenceStructure& d, std::size_t point) {
    if (point >= d.v()) throw std::out_of_range("point_residual: bad point index");
    std::vector<std::size_t> pts;
    for (std::size_t i = 0; i < d.v(); i++)
        if (i != point) pts.push_back(i);
    std::vector<std::size_t> blocks;
    for (std::size_t j = 0; j < d.b(); j++)
        if (!d.incident(point, j)) blocks.push_back(j);
    std::vector<std::uint8_t> m(pts.size() * blocks.size(), 0);
    std::vector<std::string> plabels, blabels;
    for (auto p : pts) plabels.push_back(d.point_labels()[p]);
    for (auto j : blocks) blabels.push_back(d.block_labels()[j]);
    for (std::size_t pi = 0; pi < pts.size(); pi++)
        for (std::size_t bj = 0; bj < blocks.size(); bj++)
            if (d.incident(pts[pi], blocks[bj])) m[pi * blocks.size() + bj] = 1;
    return IncidenceStructure(pts.size(), blocks.size(), std::move(m),
                              std::move(plabels), std::move(blabels));
}

std::optional<DesignSignature> point_derived_signature(const DesignSignature& sig) {
    if (sig.t < 1) return std::nullopt;
    return make_signature(sig.t - 1, sig.v - 1, sig.k - 1, sig.lam);
}

std::optional<DesignSignature> point_residual_signature(const DesignSignature& sig) {
    if (sig.t < 1) return std::nullopt;
    auto lam_prev = lambda_s(sig, sig.t - 1);
    if (!lam_prev) return std::nullopt;
    return make_signature(sig.t - 1, sig.v - 1, sig.k, *lam_prev - sig.lam);
}

std::optional<DesignSignature> block_derived_signature(const DesignSignature& sig) {
    if (sig.t != 2 || sig.b != sig.v || sig.lam < 1) return std::nullopt;
    return make_signature(2, sig.k, sig.lam, sig.lam - 1);
}

std::optional<DesignSignature> block_residual_signature(const DesignSignature& sig) {
    if (sig.t != 2 || sig.b != sig.v) return std::nullopt;
    return make_signature(2, sig.v - sig.k, sig.k - sig.lam, sig.lam);
}

IntersectionProfile intersection_profile(const IncidenceStructure& d) {
    if (d.b() < 2) throw std::invalid_argument("intersection_profile: need at least two blocks");
    IntersectionProfile prof;
    std::vector<std::vector<std::size_t>> pts(d.b());
    for (std::size_t j = 0; j < d.b(); j++) pts[j] = d.block_points(j);
    for (std::size_t i = 0; i < d.b(); i++) {
        for (std::size_t j = i + 1; j < d.b(); j++) {
            std::size_t common = 0;
            auto &a = pts[i], &bq = pts[j];
            std::size_t x = 0, y = 0;
            while (x < a.size() && y < bq.size()) {
                if (a[x] == bq[y]) { common++; x++; y++; }
                else if (a[x] < bq[y]) x++;
                else y++;
            }
            prof.sizes[common]++;
        }
    }
    return prof;
}

std::optional<QuasiSymmetry> is_quasi_symmetric(const IncidenceStructure& d) {
    if (d.b() < 2) return std::nullopt;
    auto prof = intersection_profile(d);
    if (prof.sizes.size() == 1) {
        auto s = prof.sizes.begin()->first;
        return QuasiSymmetry{s, s, true};
    }
    if (prof.sizes.size() == 2) {
        auto it = prof.sizes.begin();
        std::size_t x = it->first;
        std::size_t y = std::next(it)->first;
        return QuasiSymmetry{x, y, false};
    }
    return std::nullopt;
}

EmbeddabilityCheck linear_embeddability_check(const IncidenceStructure& d, std::size_t block, int p) {
    if (block >= d.b()) throw std::out_of_range("linear_embeddability_check: bad block index");
    EmbeddabilityCheck out;
    out.rank_full = rank_mod_p(d.matrix_mod(p));
    out.rank_residual = rank_mod_p(block_residual(d, block).matrix_mod(p));
    out.holds = (out.rank_full == out.rank_residual + 1);
    return out;
}

}  // namespace qsd
