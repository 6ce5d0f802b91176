#pragma once

#include "lfuzzy/poset.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <variant>

namespace lfuzzy {

/// A finite (hence complete) lattice with tabulated meet and join.
class FiniteLattice {
public:
    FiniteLattice() = default;

    const Poset& order() const { return order_; }
    std::size_t size() const { return order_.size(); }
    const std::string& name(std::size_t i) const { return order_.name(i); }
    std::size_t index(std::string_view n) const { return order_.index(n); }
    bool leq(std::size_t i, std::size_t j) const { return order_.leq(i, j); }

    std::size_t meet(std::size_t i, std::size_t j) const { return meet_[i * size() + j]; }
    std::size_t join(std::size_t i, std::size_t j) const { return join_[i * size() + j]; }
    /// Meet of a subset; the empty meet is the top.
    std::size_t meet(ElementSet s) const;
    /// Join of a subset; the empty join is the bottom.
    std::size_t join(ElementSet s) const;
    std::size_t bottom() const { return bottom_; }
    std::size_t top() const { return top_; }

    bool operator==(const FiniteLattice& other) const { return order_ == other.order_; }

private:
    friend FiniteLattice as_lattice(const Poset& p);

    Poset order_;
    std::vector<std::uint8_t> meet_;
    std::vector<std::uint8_t> join_;
    std::size_t bottom_ = 0;
    std::size_t top_ = 0;
};

/// Throws not_a_lattice naming a pair without glb or lub.
FiniteLattice as_lattice(const Poset& p);
bool is_lattice(const Poset& p);

/// First violation of the tabulated lattice laws, or nullopt. Exhaustive.
std::optional<std::string> check_lattice_laws(const FiniteLattice& l);

/// An intersection-closed family containing the full set, ordered by reverse
/// inclusion. Joins are intersections; the meet of a collection is the least
/// member containing its union.
class FamilyLattice {
public:
    FamilyLattice() = default;

    const SetFamily& family() const { return family_; }
    const FiniteLattice& lattice() const { return lattice_; }
    std::size_t size() const { return family_.size(); }
    ElementSet member(std::size_t i) const { return family_.member(i); }
    std::optional<std::size_t> find(ElementSet s) const { return family_.find(s); }

    /// Least member containing s (the meet of any collection whose union is s).
    std::optional<std::size_t> least_containing(ElementSet s) const;
    std::size_t meet_of(std::span<const std::size_t> members) const;
    std::size_t join_of(std::span<const std::size_t> members) const;
    /// Index of the full set.
    std::size_t bottom() const { return lattice_.bottom(); }
    /// Index of the intersection of all members.
    std::size_t top() const { return lattice_.top(); }

private:
    friend FamilyLattice family_lattice(const SetFamily& f);

    SetFamily family_;
    FiniteLattice lattice_;
};

/// Throws missing_full_set or not_intersection_closed.
FamilyLattice family_lattice(const SetFamily& f);

/// Order (F, reverse inclusion) as a poset whose elements are named by member.
Poset reverse_inclusion_order(const SetFamily& f);

ElementSet meet_irreducibles(const FiniteLattice& l);

struct DistributivityViolation {
    std::array<std::size_t, 3> triple;
};
std::optional<DistributivityViolation> distributivity_violation(const FiniteLattice& l);
bool is_distributive(const FiniteLattice& l);

/// a -> {m in M(L) | m >= a}, an isomorphism L -> (up-sets of M(L), reverse inclusion).
struct BirkhoffRepresentation {
    ElementSet irreducibles;   // positions in L
    Poset irreducible_order;   // M(L) with the order inherited from L
    FamilyLattice up_sets;     // up-sets of irreducible_order
    IsoWitness map;            // L position -> up_sets position
};

/// Throws not_distributive (with the violating triple in the message).
BirkhoffRepresentation birkhoff_representation(const FiniteLattice& l);

/// Lexicographically least injective order embedding sending bottom to
/// bottom and top to top, if any.
std::optional<IsoWitness> find_bound_preserving_embedding(const FiniteLattice& from, const FiniteLattice& into);

} // namespace lfuzzy
