#include "qsd/difference_sets.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qsd {

std::size_t GroupSpec::op(std::size_t a, std::size_t b) const {
    switch (kind) {
        case Kind::cyclic:
            return (a + b) % order;
        case Kind::elementary_abelian_16:
            return a ^ b;
    }
    return 0;
}

std::size_t GroupSpec::inverse(std::size_t a) const {
    switch (kind) {
        case Kind::cyclic:
            return (order - a) % order;
        case Kind::elementary_abelian_16:
            return a;  // self-inverse
    }
    return 0;
}

IncidenceStructure develop_difference_set(const DifferenceSetSpec& spec) {
    const std::size_t v = spec.group.order;
    std::set<std::size_t> distinct(spec.elements.begin(), spec.elements.end());
    if (distinct.size() != spec.elements.size())
        throw std::invalid_argument("develop_difference_set: duplicate elements");
    for (auto e : spec.elements)
        if (e >= v) throw std::invalid_argument("develop_difference_set: element outside group");

    std::vector<std::uint8_t> m(v * v, 0);
    for (std::size_t g = 0; g < v; g++)  // block g = {g + d : d in D}
        for (auto d : spec.elements)
            m[spec.group.op(g, d) * v + g] = 1;
    return IncidenceStructure(v, v, std::move(m));
}

std::optional<DifferenceSetSpec> find_difference_set(const GroupSpec& group, std::size_t k,
                                                     std::size_t lam) {
    const std::size_t v = group.order;
    if (v > 16) throw std::invalid_argument("find_difference_set: group order above 16");
    if (k > v) return std::nullopt;

    // D is a (v,k,lam) difference set iff every nonidentity g occurs exactly
    // lam times as a difference d1 - d2
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; i++) idx[i] = i;
    std::vector<std::size_t> diff_count(v);
    while (true) {
        std::fill(diff_count.begin(), diff_count.end(), 0);
        bool good = true;
        for (std::size_t a = 0; a < k && good; a++)
            for (std::size_t b = 0; b < k; b++) {
                if (a == b) continue;
                std::size_t d = group.op(idx[a], group.inverse(idx[b]));
                if (++diff_count[d] > lam) { good = false; break; }
            }
        if (good) {
            for (std::size_t g = 1; g < v && good; g++)
                if (diff_count[g] != lam) good = false;
            if (good) return DifferenceSetSpec{group, idx};
        }
        // next k-subset
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == v - k + (i - 1)) i--;
        if (i == 0) break;
        idx[i - 1]++;
        for (std::size_t j = i; j < k; j++) idx[j] = idx[j - 1] + 1;
    }
    return std::nullopt;
}

}  // namespace qsd
