#pragma once

#include "lfuzzy/fuzzy.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lfuzzy {

enum class RealizationMode {
    characterization,  // cut-like up-set families with an isomorphic Moore family
    oracle,            // cut families of all monotone maps
};

/// Inclusion order on a list of families. Dense, so not bound by the
/// 64-element limit of Poset.
struct InclusionOrder {
    std::vector<std::string> names;
    std::vector<std::vector<bool>> leq;

    std::size_t size() const { return names.size(); }
    InclusionOrder induced(const std::vector<std::size_t>& keep) const;
    /// Throws too_large beyond 64 families.
    Poset as_poset() const;
};

InclusionOrder inclusion_order(const std::vector<SetFamily>& families);
struct BoundGap {
    std::size_t first = 0;
    std::size_t second = 0;
    bool upper = true;  // no least upper bound (else no greatest lower bound)
};

/// First pair without a glb or lub.
std::optional<BoundGap> missing_bound(const InclusionOrder& order);
/// Every pair has a glb and a lub, and the carrier is nonempty.
bool is_complete_lattice(const InclusionOrder& order);
bool is_order_isomorphism(const InclusionOrder& p, const InclusionOrder& q, std::span<const std::size_t> map);

/// How a family was found: a Moore family of the scale, or a monotone map.
struct Realization {
    std::optional<ElementSet> moore_family;
    std::optional<FuzzyMap> witness;
};

/// Cut-equivalence classes of L-fuzzy up-sets on X, one family per class,
/// ordered by inclusion.
struct RealizablePoset {
    Poset space;
    FiniteLattice scale;
    std::vector<SetFamily> families;       // by size, then lexicographically on sorted members
    InclusionOrder order;
    std::vector<Realization> provenance;

    std::optional<std::size_t> find(const std::vector<ElementSet>& sorted_members) const;
};

RealizablePoset enumerate_realizable_families(const Poset& space, const FiniteLattice& scale,
                                              RealizationMode mode = RealizationMode::characterization,
                                              std::size_t cap = default_cap);

/// Sorted member lists of two enumerations agree.
bool same_families(const RealizablePoset& a, const RealizablePoset& b);

struct CompletenessDecision {
    bool complete = false;
    bool single_point_scale = false;
    std::optional<TargetClosure> closure;  // L/C isomorphic to the up-sets of X
    /// Direct all-pairs glb/lub check on the enumerated realizable poset, when verified.
    std::optional<bool> direct;
    /// The pair of families the direct check got stuck on.
    std::optional<std::string> direct_gap;
    std::size_t realizable = 0;
};

/// Whether the cut-equivalence quotient of L-fuzzy up-sets on X is a complete lattice.
CompletenessDecision quotient_is_complete_lattice(const Poset& space, const FiniteLattice& scale, bool verify = false,
                                                  std::size_t cap = default_cap);

/// T -> union of the blocks in T, from the up-sets of X/C into the up-sets of X.
struct EmbeddingReport {
    QuotientPoset quotient;
    SetFamily source;               // up-sets of X/C
    SetFamily image;                // S_T for each T, in source order
    std::vector<std::size_t> map;   // source index -> index in the up-sets of X
    bool injective = false;
    bool order_both_ways = false;
    bool image_up_sets = false;
    bool unions_closed = false;
    bool intersections_closed = false;
    bool empty_to_empty = false;
    bool full_to_full = false;

    bool all_pass() const
    {
        return injective && order_both_ways && image_up_sets && unions_closed && intersections_closed &&
               empty_to_empty && full_to_full;
    }
};

EmbeddingReport embed_upset_quotient(const Poset& space, const ClosureOperator& c, std::size_t cap = default_cap);

/// Closure route to an embedding L2 -> L1: a closure C on M(L1) with M(L1)/C
/// isomorphic to M(L2), carried through both up-set representations.
struct ClosureRoute {
    ClosureOperator closure;
    IsoWitness quotient_iso;  // blocks of M(L1)/C -> M(L2)
    IsoWitness embedding;     // L2 -> L1, not surjective in general
};

struct BirkhoffDriverReport {
    std::optional<ClosureRoute> closure_route;
    std::size_t closures_examined = 0;
    /// Independent search, not implied by the closure route either way.
    std::optional<IsoWitness> direct_embedding;
    /// L2 has one element, so M(L2) is empty.
    bool degenerate = false;
};

/// Throws not_distributive.
BirkhoffDriverReport birkhoff_embedding_driver(const FiniteLattice& l1, const FiniteLattice& l2,
                                               std::size_t cap = default_cap);

struct IntervalReport {
    EmbeddingReport embedding;
    std::optional<FuzzyMap> witness;      // cuts are exactly the image family
    std::vector<SetFamily> interval;      // realizable families between {X} and the image
    InclusionOrder interval_order;
    RealizablePoset quotient_side;        // realizable families on X/C
    std::vector<SetFamily> bridge;        // intersection-closed subfamilies of the image containing X
    std::optional<IsoWitness> iso;        // quotient_side -> interval, G -> {S_T | T in G}
    bool interval_is_bridge = false;
    bool quotient_side_matches_bridge = false;
    std::optional<std::string> counterexample;

    bool verified() const { return iso && interval_is_bridge && quotient_side_matches_bridge && !counterexample; }
};

/// Throws precondition_unmet unless some closure C1 on L has L/C1 isomorphic
/// to the up-sets of X.
IntervalReport interval_isomorphism(const Poset& space, const ClosureOperator& c, const FiniteLattice& scale,
                                    std::size_t cap = default_cap);

} // namespace lfuzzy
