#pragma once

#include "lfuzzy/lattice.hpp"

#include <optional>
#include <span>
#include <variant>

namespace lfuzzy {

struct AxiomWitness {
    std::size_t p = 0;
    std::optional<std::size_t> q;
};

/// Per-axiom result of checking a self-map against the closure axioms:
/// (a) p <= C(p), (b) p <= q implies C(p) <= C(q), (c) C(C(p)) = C(p).
/// Each entry holds the first witness of failure, if any.
struct AxiomReport {
    std::optional<AxiomWitness> inflationary;
    std::optional<AxiomWitness> monotone;
    std::optional<AxiomWitness> idempotent;

    bool all_pass() const { return !inflationary && !monotone && !idempotent; }
    /// 'a', 'b', 'c', or 0 when all pass.
    char first_failure() const;
};

AxiomReport check_closure_axioms(const Poset& carrier, std::span<const std::size_t> map);

class ClosureOperator;
struct ClosureViolation;
std::variant<ClosureOperator, ClosureViolation> validate_closure(const Poset& carrier, std::vector<std::size_t> map);

class ClosureOperator {
public:
    const Poset& carrier() const { return carrier_; }
    const std::vector<std::size_t>& map() const { return map_; }
    std::size_t operator()(std::size_t p) const { return map_[p]; }
    std::size_t size() const { return map_.size(); }
    /// Fixed points.
    ElementSet closed() const;

    bool operator==(const ClosureOperator& other) const = default;

private:
    friend std::variant<ClosureOperator, ClosureViolation> validate_closure(const Poset&, std::vector<std::size_t>);
    ClosureOperator(Poset carrier, std::vector<std::size_t> map) : carrier_(std::move(carrier)), map_(std::move(map)) {}

    Poset carrier_;
    std::vector<std::size_t> map_;
};

struct ClosureViolation {
    char axiom = 0;
    AxiomWitness witness;
};

/// A ClosureOperator iff all three axioms hold, otherwise the first violation.
std::variant<ClosureOperator, ClosureViolation> validate_closure(const Poset& carrier, std::vector<std::size_t> map);
/// As validate_closure, throwing precondition_violated on a violation.
ClosureOperator make_closure(const Poset& carrier, std::vector<std::size_t> map);
ClosureOperator identity_closure(const Poset& carrier);

ElementSet closed_elements(const ClosureOperator& c);

/// Missing top or first pair whose meet escapes s.
std::optional<std::string> moore_family_violation(const FiniteLattice& l, ElementSet s);
bool is_moore_family(const FiniteLattice& l, ElementSet s);
/// p -> meet of {s in S | s >= p}. Throws not_moore_family.
ClosureOperator closure_from_moore_family(const FiniteLattice& l, ElementSet s);

/// Blocks of equal closure value ordered by the order of the closure values.
struct QuotientPoset {
    Poset order;                          // one element per block, named by the block's set
    std::vector<ElementSet> blocks;       // carrier positions, in order of first occurrence
    std::vector<std::size_t> block_of;    // carrier position -> block
    std::vector<std::size_t> block_tops;  // block -> its closed element
    IsoWitness closed_iso;                // block -> position in carrier.induced(closed)
};

QuotientPoset quotient_by_closure(const Poset& p, const ClosureOperator& c);

struct Composition {
    ClosureOperator composite;
    /// L/(C1 o C0) -> (L/C0)/C1, when one exists.
    std::optional<IsoWitness> quotient_iso;
};

/// p -> C1(C0(p)). `c1` must live on the sub-poset of C0-closed elements.
/// Throws carrier_mismatch.
Composition compose_closures(const FiniteLattice& l, const ClosureOperator& c0, const ClosureOperator& c1);

/// How the collection-meet of the restricted family is evaluated.
enum class MeetReading {
    least_containing_union,  // meet in (T, reverse inclusion)
    plain_intersection,      // diagnostic alternative
};

/// The restriction self-map on (F, reverse inclusion) for a subfamily T,
/// together with its axiom report. Validity is reported, not assumed.
struct ClosureCandidate {
    FamilyLattice carrier;
    std::vector<std::size_t> map;
    AxiomReport report;
};

/// For p in T but not meet-irreducible in T: p -> meet_T{q in T, q != 1_T, q strictly inside p};
/// otherwise p -> meet_T{q in T, q != 1_T, q inside p}; an empty collection maps to 1_F.
/// Throws precondition_violated unless T is an intersection-closed subfamily containing X.
ClosureCandidate restriction_closure_candidate(const FamilyLattice& f, const SetFamily& t,
                                               MeetReading reading = MeetReading::least_containing_union);

struct TargetClosure {
    ClosureOperator closure;
    ElementSet moore_family;  // positions in L
    IsoWitness iso;           // L.order().induced(moore_family) -> target
};

/// Closure operator whose closed elements form the lexicographically least
/// Moore family of size |target| order-isomorphic to `target`.
std::optional<TargetClosure> find_closure_for_target(const FiniteLattice& l, const Poset& target,
                                                     std::size_t cap = default_cap);

/// All Moore families, by size then lexicographically.
std::vector<ElementSet> enumerate_moore_families(const FiniteLattice& l, std::size_t cap = default_cap);
/// All closure operators by backtracking over inflationary monotone idempotent maps, in
/// lexicographic map order. `cap` bounds the search nodes visited.
std::vector<ClosureOperator> enumerate_closure_operators(const Poset& p, std::size_t cap = default_cap);
/// All closure operators of a lattice, one per Moore family, in Moore-family order.
std::vector<ClosureOperator> enumerate_closure_operators(const FiniteLattice& l, std::size_t cap = default_cap);

} // namespace lfuzzy
