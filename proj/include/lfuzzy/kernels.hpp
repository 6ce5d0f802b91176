#pragma once

// Enumeration kernels. Each kernel has an OpenMP implementation (used by the
// library) and a serial reference with identical, canonically ordered output.

#include "lfuzzy/element_set.hpp"
#include "lfuzzy/poset.hpp"

#include <cstddef>
#include <vector>

namespace lfuzzy::kernels {

/// A cut family (members in lexicographic order) with the first monotone map
/// (least assignment vector) that realizes it.
struct RealizedFamily {
    std::vector<ElementSet> members;
    std::vector<std::size_t> witness;

    bool operator==(const RealizedFamily&) const = default;
};

/// Canonical order on families: by size, then lexicographically.
bool family_less(const std::vector<ElementSet>& a, const std::vector<ElementSet>& b);

/// Cut family of `assign` : space -> scale, members sorted lexicographically.
std::vector<ElementSet> cut_members(const Poset& space, const Poset& scale,
                                    const std::vector<std::size_t>& assign);

/// Largest carrier for which all labeled partial orders are generated.
inline constexpr std::size_t max_labeled_order_size = 5;

namespace serial {

std::vector<ElementSet> up_sets(const Poset& p, std::size_t cap);
/// Number of monotone maps, saturating at cap + 1.
std::size_t count_monotone_maps(const Poset& space, const Poset& scale, std::size_t cap);
std::vector<RealizedFamily> realizable_families(const Poset& space, const Poset& scale);
/// Principal-filter rows of every partial order on n labeled points.
std::vector<std::vector<ElementSet>> labeled_partial_orders(std::size_t n);

} // namespace serial

namespace parallel {

std::vector<ElementSet> up_sets(const Poset& p, std::size_t cap);
std::size_t count_monotone_maps(const Poset& space, const Poset& scale, std::size_t cap);
std::vector<RealizedFamily> realizable_families(const Poset& space, const Poset& scale);
std::vector<std::vector<ElementSet>> labeled_partial_orders(std::size_t n);

} // namespace parallel

} // namespace lfuzzy::kernels
