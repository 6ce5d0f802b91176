#include "lfuzzy/poset.hpp"

#include "lfuzzy/kernels.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <tuple>

namespace lfuzzy {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::duplicate_element: return "DuplicateElement";
    case ErrorKind::unknown_name: return "UnknownName";
    case ErrorKind::invalid_name: return "InvalidName";
    case ErrorKind::cycle_detected: return "CycleDetected";
    case ErrorKind::too_large: return "TooLarge";
    case ErrorKind::cap_exceeded: return "CapExceeded";
    case ErrorKind::not_a_subset: return "NotASubset";
    case ErrorKind::duplicate_member: return "DuplicateMember";
    case ErrorKind::not_a_lattice: return "NotALattice";
    case ErrorKind::not_intersection_closed: return "NotIntersectionClosed";
    case ErrorKind::missing_full_set: return "MissingFullSet";
    case ErrorKind::not_distributive: return "NotDistributive";
    case ErrorKind::not_moore_family: return "NotMooreFamily";
    case ErrorKind::carrier_mismatch: return "CarrierMismatch";
    case ErrorKind::precondition_violated: return "PreconditionViolated";
    case ErrorKind::precondition_unmet: return "PreconditionUnmet";
    case ErrorKind::fixture_missing: return "FixtureMissing";
    case ErrorKind::syntax_error: return "SyntaxError";
    case ErrorKind::semantic_error: return "SemanticError";
    }
    return "Error";
}

bool is_valid_name(std::string_view name)
{
    if (name.empty())
        return false;
    return std::none_of(name.begin(), name.end(), [](char c) {
        return std::isspace(static_cast<unsigned char>(c)) != 0 || c == '#';
    });
}

Poset::Poset() : names_(std::make_shared<Names>()) {}

Poset::Poset(std::shared_ptr<const Names> names, std::vector<ElementSet> up)
    : names_(std::move(names)), up_(std::move(up)), down_(up_.size())
{
    for (std::size_t i = 0; i < up_.size(); ++i)
        up_[i].for_each([&](std::size_t j) { down_[j].insert(i); });
}

Poset Poset::from_up_sets(std::vector<std::string> names, std::vector<ElementSet> up)
{
    if (names.size() > max_carrier_size)
        throw Error(ErrorKind::too_large, std::to_string(names.size()) + " elements exceeds the carrier limit of " +
                                              std::to_string(max_carrier_size));
    if (up.size() != names.size())
        throw Error(ErrorKind::precondition_violated, "relation rows do not match element count");
    auto table = std::make_shared<Names>();
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!is_valid_name(names[i]))
            throw Error(ErrorKind::invalid_name, "'" + names[i] + "'");
        if (!table->index.emplace(names[i], i).second)
            throw Error(ErrorKind::duplicate_element, names[i]);
    }
    const ElementSet all = ElementSet::full(names.size());
    for (std::size_t i = 0; i < up.size(); ++i) {
        if (!up[i].subset_of(all))
            throw Error(ErrorKind::precondition_violated, "relation row out of range");
        if (!up[i].contains(i))
            throw Error(ErrorKind::precondition_violated, "relation is not reflexive at " + names[i]);
    }
    for (std::size_t i = 0; i < up.size(); ++i) {
        bool ok = true;
        up[i].for_each([&](std::size_t j) {
            if (j != i && up[j].contains(i))
                throw Error(ErrorKind::cycle_detected, names[i] + " and " + names[j]);
            if (!up[j].subset_of(up[i]))
                ok = false;
        });
        if (!ok)
            throw Error(ErrorKind::precondition_violated, "relation is not transitive at " + names[i]);
    }
    table->list = std::move(names);
    return Poset(std::move(table), std::move(up));
}

std::optional<std::size_t> Poset::find(std::string_view name) const
{
    auto it = names_->index.find(std::string(name));
    if (it == names_->index.end())
        return std::nullopt;
    return it->second;
}

std::size_t Poset::index(std::string_view name) const
{
    if (auto i = find(name))
        return *i;
    throw Error(ErrorKind::unknown_name, std::string(name));
}

ElementSet Poset::subset(std::span<const std::string> names) const
{
    ElementSet s;
    for (const auto& n : names)
        s.insert(index(n));
    return s;
}

std::vector<std::string> Poset::names_of(ElementSet s) const
{
    std::vector<std::string> out;
    s.for_each([&](std::size_t i) { out.push_back(name(i)); });
    return out;
}

std::string Poset::set_name(ElementSet s) const
{
    std::string out = "{";
    bool first = true;
    s.for_each([&](std::size_t i) {
        if (!first)
            out += ',';
        out += name(i);
        first = false;
    });
    return out + "}";
}

ElementSet Poset::upper_covers(std::size_t i) const
{
    ElementSet strict = up_[i] - ElementSet::single(i);
    ElementSet out = strict;
    strict.for_each([&](std::size_t j) { out = out - (up_[j] - ElementSet::single(j)); });
    return out;
}

ElementSet Poset::lower_covers(std::size_t i) const
{
    ElementSet strict = down_[i] - ElementSet::single(i);
    ElementSet out = strict;
    strict.for_each([&](std::size_t j) { out = out - (down_[j] - ElementSet::single(j)); });
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::covers() const
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < size(); ++i)
        upper_covers(i).for_each([&](std::size_t j) { out.emplace_back(i, j); });
    return out;
}

std::vector<NamePair> Poset::cover_names() const
{
    std::vector<NamePair> out;
    for (auto [i, j] : covers())
        out.emplace_back(name(i), name(j));
    return out;
}

ElementSet Poset::minimal() const
{
    ElementSet out;
    for (std::size_t i = 0; i < size(); ++i)
        if (down_[i] == ElementSet::single(i))
            out.insert(i);
    return out;
}

ElementSet Poset::maximal() const
{
    ElementSet out;
    for (std::size_t i = 0; i < size(); ++i)
        if (up_[i] == ElementSet::single(i))
            out.insert(i);
    return out;
}

ElementSet Poset::up_closure(ElementSet s) const
{
    ElementSet out;
    s.for_each([&](std::size_t i) { out |= up_[i]; });
    return out;
}

Poset Poset::induced(ElementSet s) const
{
    const auto idx = s.indices();
    std::vector<std::string> names;
    std::vector<ElementSet> up(idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a) {
        names.push_back(name(idx[a]));
        for (std::size_t b = 0; b < idx.size(); ++b)
            if (leq(idx[a], idx[b]))
                up[a].insert(b);
    }
    return from_up_sets(std::move(names), std::move(up));
}

Poset Poset::dual() const { return Poset(names_, down_); }

bool Poset::operator==(const Poset& other) const { return names() == other.names() && up_ == other.up_; }

Poset build_poset(std::vector<std::string> elements, const std::vector<NamePair>& covers)
{
    const std::size_t n = elements.size();
    if (n > max_carrier_size)
        throw Error(ErrorKind::too_large, std::to_string(n) + " elements exceeds the carrier limit of " +
                                              std::to_string(max_carrier_size));
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) {
        if (!is_valid_name(elements[i]))
            throw Error(ErrorKind::invalid_name, "'" + elements[i] + "'");
        if (!index.emplace(elements[i], i).second)
            throw Error(ErrorKind::duplicate_element, elements[i]);
    }
    std::vector<ElementSet> up(n);
    for (std::size_t i = 0; i < n; ++i)
        up[i].insert(i);
    for (const auto& [lo, hi] : covers) {
        auto a = index.find(lo);
        auto b = index.find(hi);
        if (a == index.end())
            throw Error(ErrorKind::unknown_name, lo);
        if (b == index.end())
            throw Error(ErrorKind::unknown_name, hi);
        if (a->second == b->second)
            throw Error(ErrorKind::cycle_detected, lo + " < " + hi);
        up[a->second].insert(b->second);
    }
    // Warshall closure on rows.
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (up[i].contains(k))
                up[i] |= up[k];
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (up[i].contains(j) && up[j].contains(i))
                throw Error(ErrorKind::cycle_detected, elements[i] + " and " + elements[j]);
    return Poset::from_up_sets(std::move(elements), std::move(up));
}

Poset antichain_poset(std::vector<std::string> elements) { return build_poset(std::move(elements), {}); }

Poset chain_poset(std::vector<std::string> elements)
{
    std::vector<NamePair> covers;
    for (std::size_t i = 1; i < elements.size(); ++i)
        covers.emplace_back(elements[i - 1], elements[i]);
    return build_poset(std::move(elements), covers);
}

ElementSet principal_filter(const Poset& p, std::string_view x) { return p.up(p.index(x)); }

bool is_up_set(const Poset& p, ElementSet s) { return p.up_closure(s) == s; }

bool is_up_set(const Poset& p, std::span<const std::string> names) { return is_up_set(p, p.subset(names)); }

SetFamily::SetFamily(Poset base, std::vector<ElementSet> members) : base_(std::move(base)), members_(std::move(members))
{
    const ElementSet all = base_.all();
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (!members_[i].subset_of(all))
            throw Error(ErrorKind::not_a_subset, "member " + std::to_string(i) + " is not a subset of the base");
        for (std::size_t j = 0; j < i; ++j)
            if (members_[j] == members_[i])
                throw Error(ErrorKind::duplicate_member, base_.set_name(members_[i]));
    }
}

std::optional<std::size_t> SetFamily::find(ElementSet s) const
{
    auto it = std::find(members_.begin(), members_.end(), s);
    if (it == members_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - members_.begin());
}

std::optional<std::pair<std::size_t, std::size_t>> SetFamily::intersection_gap() const
{
    for (std::size_t i = 0; i < members_.size(); ++i)
        for (std::size_t j = i + 1; j < members_.size(); ++j)
            if (!contains(members_[i] & members_[j]))
                return std::make_pair(i, j);
    return std::nullopt;
}

std::optional<std::size_t> SetFamily::first_non_up_set() const
{
    for (std::size_t i = 0; i < members_.size(); ++i)
        if (!is_up_set(base_, members_[i]))
            return i;
    return std::nullopt;
}

std::vector<ElementSet> SetFamily::sorted_members() const
{
    auto out = members_;
    std::sort(out.begin(), out.end(), LexLess{});
    return out;
}

SetFamily SetFamily::sorted() const { return SetFamily(base_, sorted_members()); }

bool SetFamily::same_members(const SetFamily& other) const
{
    return base_ == other.base_ && sorted_members() == other.sorted_members();
}

std::string SetFamily::name() const
{
    std::string out = "{";
    bool first = true;
    for (ElementSet s : sorted_members()) {
        if (!first)
            out += ',';
        out += base_.set_name(s);
        first = false;
    }
    return out + "}";
}

IsoWitness IsoWitness::inverse() const
{
    IsoWitness inv = *this;
    inv.map.assign(map.size(), 0);
    for (std::size_t i = 0; i < map.size(); ++i)
        inv.map[map[i]] = i;
    return inv;
}

bool is_order_embedding(const Poset& p, const Poset& q, std::span<const std::size_t> map)
{
    if (map.size() != p.size())
        return false;
    ElementSet used;
    for (std::size_t x : map) {
        if (x >= q.size() || used.contains(x))
            return false;
        used.insert(x);
    }
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j)
            if (p.leq(i, j) != q.leq(map[i], map[j]))
                return false;
    return true;
}

bool is_order_isomorphism(const Poset& p, const Poset& q, std::span<const std::size_t> map)
{
    return p.size() == q.size() && is_order_embedding(p, q, map);
}

SetFamily enumerate_up_sets(const Poset& p, std::size_t cap)
{
    return SetFamily(p, kernels::parallel::up_sets(p, cap));
}

namespace {

using Signature = std::array<std::size_t, 5>;

std::vector<Signature> signatures(const Poset& p)
{
    const std::size_t n = p.size();
    // Positions sorted by down-set size form a linear extension.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::make_pair(p.down(a).size(), a) < std::make_pair(p.down(b).size(), b);
    });
    std::vector<std::size_t> height(n, 0);
    for (std::size_t x : order)
        p.lower_covers(x).for_each([&](std::size_t y) { height[x] = std::max(height[x], height[y] + 1); });
    std::vector<Signature> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = {p.lower_covers(i).size(), p.upper_covers(i).size(), p.up(i).size(), p.down(i).size(), height[i]};
    return out;
}

} // namespace

bool same_invariants(const Poset& p, const Poset& q)
{
    if (p.size() != q.size())
        return false;
    auto a = signatures(p);
    auto b = signatures(q);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

std::optional<IsoWitness> poset_isomorphism(const Poset& p, const Poset& q)
{
    const std::size_t n = p.size();
    if (n != q.size())
        return std::nullopt;
    const auto sp = signatures(p);
    const auto sq = signatures(q);
    {
        auto a = sp;
        auto b = sq;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b)
            return std::nullopt;
    }
    std::vector<ElementSet> candidates(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (sp[i] == sq[j])
                candidates[i].insert(j);

    std::vector<std::size_t> map(n, 0);
    ElementSet used;
    auto extend = [&](auto&& self, std::size_t i) -> bool {
        if (i == n)
            return true;
        const ElementSet options = candidates[i] - used;
        for (std::uint64_t b = options.bits(); b != 0; b &= b - 1) {
            const auto j = static_cast<std::size_t>(std::countr_zero(b));
            bool ok = true;
            for (std::size_t k = 0; k < i && ok; ++k)
                ok = p.leq(k, i) == q.leq(map[k], j) && p.leq(i, k) == q.leq(j, map[k]);
            if (!ok)
                continue;
            map[i] = j;
            used.insert(j);
            if (self(self, i + 1))
                return true;
            used.erase(j);
        }
        return false;
    };
    if (!extend(extend, 0))
        return std::nullopt;
    IsoWitness w;
    w.map = std::move(map);
    w.order = true;
    return w;
}

} // namespace lfuzzy
