#pragma once

#include "lfuzzy/upset_quotient.hpp"

#include <string>
#include <vector>

namespace lfuzzy::fixtures {

// Five-point poset with a<c, a<e, b<c, b<d, d<e and the closure sending d to e.
Poset upset_quotient_space();
ClosureOperator upset_quotient_closure();

// Five-point poset with e<a, e<b, d<a, c<b, and the eleven-element lattice
// drawn beside it (labeled 0 q r p s t 1, unlabeled u1..u4).
Poset representability_space();
FiniteLattice representability_scale();
SetFamily representability_s();
SetFamily representability_r();
/// The seven labeled scale elements.
ElementSet representability_labeled();

// Up-sets of upset_quotient_space() and a six-member chain inside them.
FiniteLattice chain_embedding_l1();
SetFamily chain_embedding_u();
FiniteLattice chain_embedding_l2();

// Four-point antichain, the six-cut family of mu0 as the scale, and the subfamily T0.
Poset antichain_space();
FiniteLattice antichain_scale();
FuzzyMap antichain_mu0();
SetFamily antichain_t0();
/// {abcd, ab, a, b, {}} as scale positions.
ElementSet antichain_expected_moore();

struct Check {
    std::string fixture;
    std::string name;
    std::string provenance;  // "published" or "derived"
    bool passed = false;
    std::string detail;
};

/// Loads the bundled documents under `dir` and evaluates every check.
/// Throws fixture_missing when a document is absent.
std::vector<Check> run_fixtures(const std::string& dir);

} // namespace lfuzzy::fixtures
