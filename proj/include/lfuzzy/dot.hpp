#pragma once

#include "lfuzzy/closure.hpp"

#include <string>

namespace lfuzzy {

/// Hasse diagram as a DOT digraph: one node per element, one edge per cover
/// pair oriented from the lower element to the upper one.
std::string emit_dot(const Poset& p);
std::string emit_dot(const FiniteLattice& l);
std::string emit_dot(const QuotientPoset& q);

} // namespace lfuzzy
