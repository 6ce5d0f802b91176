#pragma once

#include "lfuzzy/lattice.hpp"

#include <vector>

namespace lfuzzy {

/// Every partial order on n labeled points named a, b, c, ... (n <= 5).
std::vector<Poset> labeled_posets(std::size_t n);
/// Every partial order on at most n points (including the empty one when `with_empty`).
std::vector<Poset> labeled_posets_up_to(std::size_t n, bool with_empty = false);
/// Every lattice on 1..n labeled points named 0, 1, 2, ... (n <= 5).
std::vector<FiniteLattice> labeled_lattices_up_to(std::size_t n);

} // namespace lfuzzy
