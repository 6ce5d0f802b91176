#include "lfuzzy/fuzzy.hpp"

#include <algorithm>
#include <stdexcept>

namespace lfuzzy {

FuzzyMap::FuzzyMap(Poset space, FiniteLattice scale, std::vector<std::size_t> assign)
    : space_(std::move(space)), scale_(std::move(scale)), assign_(std::move(assign))
{
    if (assign_.size() != space_.size())
        throw Error(ErrorKind::precondition_violated, "map is not total on the space");
    for (std::size_t v : assign_)
        if (v >= scale_.size())
            throw Error(ErrorKind::precondition_violated, "map value outside the scale");
}

FuzzyMap FuzzyMap::from_pairs(Poset space, FiniteLattice scale, const std::vector<NamePair>& pairs)
{
    std::vector<std::size_t> assign(space.size(), 0);
    ElementSet seen;
    for (const auto& [x, v] : pairs) {
        const std::size_t i = space.index(x);
        if (seen.contains(i))
            throw Error(ErrorKind::duplicate_element, "map entry for " + x + " given twice");
        seen.insert(i);
        assign[i] = scale.index(v);
    }
    if (seen != space.all())
        throw Error(ErrorKind::precondition_violated,
                    "map is not total; missing " + space.set_name(space.all() - seen));
    return FuzzyMap(std::move(space), std::move(scale), std::move(assign));
}

std::vector<NamePair> FuzzyMap::pairs() const
{
    std::vector<NamePair> out;
    for (std::size_t x = 0; x < space_.size(); ++x)
        out.emplace_back(space_.name(x), scale_.name(assign_[x]));
    return out;
}

ElementSet p_cut(const FuzzyMap& m, std::size_t p)
{
    const ElementSet above = m.scale().order().up(p);
    ElementSet cut;
    for (std::size_t x = 0; x < m.space().size(); ++x)
        if (above.contains(m(x)))
            cut.insert(x);
    return cut;
}

ElementSet p_cut(const FuzzyMap& m, std::string_view p) { return p_cut(m, m.scale().index(p)); }

CutReport cut_family(const FuzzyMap& m)
{
    const FiniteLattice& l = m.scale();
    std::vector<ElementSet> members;
    CutReport r;
    r.cut_of.resize(l.size());
    for (std::size_t p = 0; p < l.size(); ++p) {
        const ElementSet cut = p_cut(m, p);
        auto it = std::find(members.begin(), members.end(), cut);
        r.cut_of[p] = static_cast<std::size_t>(it - members.begin());
        if (it == members.end())
            members.push_back(cut);
    }
    r.class_tops.assign(members.size(), l.bottom());
    for (std::size_t p = 0; p < l.size(); ++p)
        r.class_tops[r.cut_of[p]] = l.join(r.class_tops[r.cut_of[p]], p);
    r.family = SetFamily(m.space(), std::move(members));
    return r;
}

UpSetCheck is_fuzzy_up_set(const FuzzyMap& m, bool cross_check)
{
    UpSetCheck r;
    const Poset& x = m.space();
    const Poset& l = m.scale().order();
    r.monotone = true;
    for (std::size_t a = 0; a < x.size() && r.monotone; ++a)
        for (std::size_t b = 0; b < x.size() && r.monotone; ++b)
            if (x.leq(a, b) && !l.leq(m(a), m(b)))
                r.monotone = false;
    if (!cross_check)
        return r;
    r.cross_checked = true;
    for (std::size_t p = 0; p < l.size() && !r.non_up_set_cut; ++p)
        if (!is_up_set(x, p_cut(m, p)))
            r.non_up_set_cut = p;
    if (r.monotone == r.non_up_set_cut.has_value())
        r.internal_error = r.monotone ? "monotone map has a cut that is not an up-set"
                                      : "non-monotone map has only up-set cuts";
    return r;
}

ApproxQuotient approx_quotient(const FuzzyMap& m)
{
    CutReport cuts = cut_family(m);
    const FiniteLattice& l = m.scale();
    // p -> greatest element with the same cut is a closure operator whose blocks are the classes.
    std::vector<std::size_t> tops(l.size());
    for (std::size_t p = 0; p < l.size(); ++p)
        tops[p] = cuts.class_tops[cuts.cut_of[p]];
    const ClosureOperator c = make_closure(l.order(), std::move(tops));
    QuotientPoset q = quotient_by_closure(l.order(), c);

    IsoWitness iso;
    iso.map.resize(q.blocks.size());
    for (std::size_t b = 0; b < q.blocks.size(); ++b)
        iso.map[b] = cuts.cut_of[q.blocks[b].first()];
    if (!is_order_isomorphism(q.order, reverse_inclusion_order(cuts.family), iso.map))
        throw std::logic_error("cut classes are not isomorphic to the cut family");
    iso.order = true;
    return ApproxQuotient{std::move(q), std::move(cuts), std::move(iso)};
}

const char* to_string(Refutation::Reason r)
{
    switch (r) {
    case Refutation::Reason::missing_full_set: return "missing_full_set";
    case Refutation::Reason::not_intersection_closed: return "not_intersection_closed";
    case Refutation::Reason::member_not_up_set: return "member_not_up_set";
    case Refutation::Reason::no_moore_family: return "no_moore_family";
    }
    return "unknown";
}

bool verifies_as_witness(const FuzzyMap& m, const SetFamily& f)
{
    return is_fuzzy_up_set(m, false).monotone && cut_family(m).family.same_members(f);
}

Representation representable(const SetFamily& f, const Poset& space, const FiniteLattice& scale, std::size_t cap)
{
    if (!(f.base() == space))
        throw Error(ErrorKind::precondition_violated, "family is over a different base than the space");
    using R = Refutation::Reason;
    if (!f.contains_full())
        return Refutation{R::missing_full_set, "family lacks " + space.set_name(space.all())};
    if (auto gap = f.intersection_gap()) {
        const ElementSet meet = f.member(gap->first) & f.member(gap->second);
        return Refutation{R::not_intersection_closed, f.member_name(gap->first) + " and " +
                                                          f.member_name(gap->second) + " intersect in " +
                                                          space.set_name(meet)};
    }
    if (auto bad = f.first_non_up_set())
        return Refutation{R::member_not_up_set, f.member_name(*bad) + " is not an up-set"};

    const FamilyLattice fl = family_lattice(f);
    auto target = find_closure_for_target(scale, fl.lattice().order(), cap);
    if (!target)
        return Refutation{R::no_moore_family, "no Moore family of the scale is order-isomorphic to the family under "
                                              "reverse inclusion (" + std::to_string(f.size()) + " members)"};

    // iso: closed element (rank) -> member; invert to member -> scale position.
    const auto closed = target->moore_family.indices();
    std::vector<std::size_t> position_of_member(f.size());
    for (std::size_t r = 0; r < closed.size(); ++r)
        position_of_member[target->iso.map[r]] = closed[r];

    std::vector<std::size_t> assign(space.size());
    for (std::size_t x = 0; x < space.size(); ++x) {
        ElementSet smallest = space.all();
        for (ElementSet m : f.members())
            if (m.contains(x))
                smallest &= m;
        assign[x] = position_of_member[*f.find(smallest)];
    }
    FuzzyMap witness(space, scale, std::move(assign));
    if (!verifies_as_witness(witness, f))
        throw std::logic_error("synthesized witness does not reproduce the family");
    return witness;
}

RestrictionResult restrict_cut_family(const FuzzyMap& m, const SetFamily& t, std::size_t cap)
{
    if (!is_fuzzy_up_set(m, false).monotone)
        throw Error(ErrorKind::precondition_violated, "map is not an L-fuzzy up-set");
    if (!(t.base() == m.space()))
        throw Error(ErrorKind::precondition_violated, "subfamily is over a different base than the space");
    const CutReport cuts = cut_family(m);
    for (std::size_t i = 0; i < t.size(); ++i)
        if (!cuts.family.contains(t.member(i)))
            throw Error(ErrorKind::precondition_violated, t.member_name(i) + " is not a cut of the map");
    if (!t.contains_full())
        throw Error(ErrorKind::precondition_violated, "subfamily lacks the full set");
    if (auto gap = t.intersection_gap())
        throw Error(ErrorKind::precondition_violated, "subfamily is not intersection-closed at " +
                                                          t.member_name(gap->first) + " and " +
                                                          t.member_name(gap->second));
    ClosureCandidate diagnostic = restriction_closure_candidate(family_lattice(cuts.family), t);
    return RestrictionResult{representable(t, m.space(), m.scale(), cap), std::move(diagnostic)};
}

} // namespace lfuzzy
