#pragma once

#include "lfuzzy/closure.hpp"

#include <optional>
#include <string>
#include <variant>

namespace lfuzzy {

/// A total map from a space X into a finite lattice L.
class FuzzyMap {
public:
    /// Throws precondition_violated if `assign` is not total or leaves L.
    FuzzyMap(Poset space, FiniteLattice scale, std::vector<std::size_t> assign);
    /// Entries name (x, value); every element of the space must appear exactly once.
    static FuzzyMap from_pairs(Poset space, FiniteLattice scale, const std::vector<NamePair>& pairs);

    const Poset& space() const { return space_; }
    const FiniteLattice& scale() const { return scale_; }
    const std::vector<std::size_t>& assign() const { return assign_; }
    std::size_t operator()(std::size_t x) const { return assign_[x]; }
    std::vector<NamePair> pairs() const;

    bool operator==(const FuzzyMap& other) const = default;

private:
    Poset space_;
    FiniteLattice scale_;
    std::vector<std::size_t> assign_;
};

/// {x | m(x) >= p}.
ElementSet p_cut(const FuzzyMap& m, std::size_t p);
ElementSet p_cut(const FuzzyMap& m, std::string_view p);

struct CutReport {
    SetFamily family;                     // distinct cuts, first occurrence in scale order
    std::vector<std::size_t> cut_of;      // scale position -> member index
    std::vector<std::size_t> class_tops;  // member index -> greatest scale element with that cut
};

CutReport cut_family(const FuzzyMap& m);

struct UpSetCheck {
    bool monotone = false;
    /// Scale position whose cut is not an up-set, from the cross-check.
    std::optional<std::size_t> non_up_set_cut;
    bool cross_checked = false;
    /// Set when the two characterizations disagree.
    std::optional<std::string> internal_error;
};

UpSetCheck is_fuzzy_up_set(const FuzzyMap& m, bool cross_check = true);

struct ApproxQuotient {
    QuotientPoset quotient;  // blocks of equal cuts
    CutReport cuts;
    IsoWitness iso;          // block -> cut member, onto (cuts, reverse inclusion)
};

ApproxQuotient approx_quotient(const FuzzyMap& m);

struct Refutation {
    enum class Reason {
        missing_full_set,
        not_intersection_closed,
        member_not_up_set,
        no_moore_family,
    };
    Reason reason;
    std::string detail;
};

const char* to_string(Refutation::Reason r);

using Representation = std::variant<FuzzyMap, Refutation>;

/// An L-fuzzy up-set on X whose cut family is F, or the condition that fails.
/// Returned witnesses are re-verified by recomputing their cuts.
Representation representable(const SetFamily& f, const Poset& space, const FiniteLattice& scale,
                             std::size_t cap = default_cap);

struct RestrictionResult {
    Representation outcome;
    ClosureCandidate diagnostic;  // restriction self-map on (cuts, reverse inclusion)
};

/// A map with cut family T, for T an intersection-closed subfamily of the cuts
/// of `m` containing X. Throws precondition_violated.
RestrictionResult restrict_cut_family(const FuzzyMap& m, const SetFamily& t, std::size_t cap = default_cap);

/// `m` is monotone and its cut family has exactly the members of `f`.
bool verifies_as_witness(const FuzzyMap& m, const SetFamily& f);

} // namespace lfuzzy
