#pragma once

#include "lfuzzy/element_set.hpp"
#include "lfuzzy/errors.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace lfuzzy {

using NamePair = std::pair<std::string, std::string>;

/// True for nonempty names without whitespace or '#'.
bool is_valid_name(std::string_view name);

/// A finite partially ordered set. Elements are identified by name; positions
/// follow the declared element order and are what every search iterates over.
class Poset {
public:
    Poset();

    /// `up[i]` is the principal filter of element i. Throws unless the
    /// relation is reflexive, antisymmetric and transitive.
    static Poset from_up_sets(std::vector<std::string> names, std::vector<ElementSet> up);

    std::size_t size() const { return up_.size(); }
    bool empty() const { return up_.empty(); }
    const std::vector<std::string>& names() const { return names_->list; }
    const std::string& name(std::size_t i) const { return names_->list[i]; }
    std::optional<std::size_t> find(std::string_view name) const;
    /// Throws unknown_name.
    std::size_t index(std::string_view name) const;
    ElementSet subset(std::span<const std::string> names) const;
    std::vector<std::string> names_of(ElementSet s) const;
    /// "{a,b}" in declared order; "{}" for the empty set.
    std::string set_name(ElementSet s) const;

    bool leq(std::size_t i, std::size_t j) const { return up_[i].contains(j); }
    bool less(std::size_t i, std::size_t j) const { return i != j && leq(i, j); }
    bool comparable(std::size_t i, std::size_t j) const { return leq(i, j) || leq(j, i); }
    ElementSet up(std::size_t i) const { return up_[i]; }
    ElementSet down(std::size_t i) const { return down_[i]; }
    ElementSet all() const { return ElementSet::full(size()); }

    ElementSet upper_covers(std::size_t i) const;
    ElementSet lower_covers(std::size_t i) const;
    /// Cover pairs (lower, upper), sorted.
    std::vector<std::pair<std::size_t, std::size_t>> covers() const;
    std::vector<NamePair> cover_names() const;
    ElementSet minimal() const;
    ElementSet maximal() const;
    /// Upward closure of s.
    ElementSet up_closure(ElementSet s) const;

    /// Induced sub-poset on s; names and relative order are kept.
    Poset induced(ElementSet s) const;
    Poset dual() const;

    bool operator==(const Poset& other) const;

private:
    struct Names {
        std::vector<std::string> list;
        std::unordered_map<std::string, std::size_t> index;
    };
    Poset(std::shared_ptr<const Names> names, std::vector<ElementSet> up);

    std::shared_ptr<const Names> names_;
    std::vector<ElementSet> up_;
    std::vector<ElementSet> down_;
};

/// Reflexive-transitive closure of the given cover pairs (a, b) meaning a < b.
Poset build_poset(std::vector<std::string> elements, const std::vector<NamePair>& covers);
Poset antichain_poset(std::vector<std::string> elements);
Poset chain_poset(std::vector<std::string> elements);

ElementSet principal_filter(const Poset& p, std::string_view x);
bool is_up_set(const Poset& p, ElementSet s);
bool is_up_set(const Poset& p, std::span<const std::string> names);

/// A family of distinct subsets of a base poset (a bare set is an antichain).
class SetFamily {
public:
    SetFamily() = default;
    /// Throws not_a_subset or duplicate_member.
    SetFamily(Poset base, std::vector<ElementSet> members);

    const Poset& base() const { return base_; }
    const std::vector<ElementSet>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    ElementSet member(std::size_t i) const { return members_[i]; }
    std::string member_name(std::size_t i) const { return base_.set_name(members_[i]); }
    std::optional<std::size_t> find(ElementSet s) const;
    bool contains(ElementSet s) const { return find(s).has_value(); }
    bool contains_full() const { return contains(base_.all()); }

    /// First pair (i, j) whose intersection is not a member.
    std::optional<std::pair<std::size_t, std::size_t>> intersection_gap() const;
    bool intersection_closed() const { return !intersection_gap().has_value(); }
    bool cut_like() const { return contains_full() && intersection_closed(); }
    /// First member that is not an up-set of the base.
    std::optional<std::size_t> first_non_up_set() const;

    /// Same members, in lexicographic characteristic-vector order.
    SetFamily sorted() const;
    /// Member-set equality irrespective of order (bases must match).
    bool same_members(const SetFamily& other) const;
    std::vector<ElementSet> sorted_members() const;
    /// "{{},{a}}" over the sorted members.
    std::string name() const;

private:
    Poset base_;
    std::vector<ElementSet> members_;
};

/// A map between carriers (position -> position) together with the
/// structure it was verified to preserve.
struct IsoWitness {
    std::vector<std::size_t> map;
    bool surjective = true;
    bool order = false;
    bool meets = false;
    bool joins = false;
    bool bounds = false;

    IsoWitness inverse() const;
};

/// Injective and x <= y iff map(x) <= map(y).
bool is_order_embedding(const Poset& p, const Poset& q, std::span<const std::size_t> map);
bool is_order_isomorphism(const Poset& p, const Poset& q, std::span<const std::size_t> map);

/// All up-sets (including {} and the full set), lexicographically ordered.
SetFamily enumerate_up_sets(const Poset& p, std::size_t cap = default_cap);

/// Lexicographically least order isomorphism p -> q, if any.
std::optional<IsoWitness> poset_isomorphism(const Poset& p, const Poset& q);

/// Cheap necessary condition for isomorphism (sorted per-element invariants).
bool same_invariants(const Poset& p, const Poset& q);

} // namespace lfuzzy
