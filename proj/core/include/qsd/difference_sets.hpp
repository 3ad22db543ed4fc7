#pragma once

#include <optional>
#include <vector>

#include "qsd/design.hpp"

namespace qsd {

/// Groups supported by the test-fixture generator: Z_n and the elementary
/// abelian 2-group of order 16 (Z_2^4).
struct GroupSpec {
    enum class Kind { cyclic, elementary_abelian_16 };
    Kind kind = Kind::cyclic;
    std::size_t order = 0;

    static GroupSpec cyclic(std::size_t n) { return {Kind::cyclic, n}; }
    static GroupSpec elementary_abelian16() { return {Kind::elementary_abelian_16, 16}; }

    std::size_t op(std::size_t a, std::size_t b) const;       // group operation
    std::size_t inverse(std::size_t a) const;
};

struct DifferenceSetSpec {
    GroupSpec group;
    std::vector<std::size_t> elements;  // distinct group elements
};

/// Develop the set through all group translates: blocks g + D for every g.
/// Throws std::invalid_argument on duplicate elements.
IncidenceStructure develop_difference_set(const DifferenceSetSpec& spec);

/// Exhaustive search (group order <= 16) for a k-subset whose development is
/// a symmetric 2-(v,k,lambda) design; first witness in lexicographic order.
std::optional<DifferenceSetSpec> find_difference_set(const GroupSpec& group, std::size_t k,
                                                     std::size_t lam);

}  // namespace qsd
