#include "lfuzzy/upset_quotient.hpp"

#include "lfuzzy/kernels.hpp"

#include <algorithm>
#include <stdexcept>

namespace lfuzzy {

namespace {

bool family_subset(const std::vector<ElementSet>& a, const std::vector<ElementSet>& b)
{
    return std::all_of(a.begin(), a.end(), [&](ElementSet s) { return std::find(b.begin(), b.end(), s) != b.end(); });
}

bool closed_under_intersection(const std::vector<ElementSet>& members)
{
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (std::find(members.begin(), members.end(), members[i] & members[j]) == members.end())
                return false;
    return true;
}

std::size_t checked_subsets(std::size_t free, std::size_t cap, const char* what)
{
    if (free >= 63 || (std::size_t{1} << free) > cap)
        throw CapExceeded(cap, free >= 63 ? cap + 1 : std::size_t{1} << free, what);
    return std::size_t{1} << free;
}

// Every intersection-closed family of members of `pool` that contains `full`, canonically ordered.
std::vector<std::vector<ElementSet>> cut_like_subfamilies(const std::vector<ElementSet>& pool, ElementSet full,
                                                          std::size_t cap, const char* what)
{
    std::vector<ElementSet> free;
    for (ElementSet s : pool)
        if (s != full)
            free.push_back(s);
    const std::size_t total = checked_subsets(free.size(), cap, what);
    std::vector<std::vector<ElementSet>> out;
    for (std::size_t mask = 0; mask < total; ++mask) {
        std::vector<ElementSet> members{full};
        for (std::size_t i = 0; i < free.size(); ++i)
            if (mask >> i & 1)
                members.push_back(free[i]);
        if (!closed_under_intersection(members))
            continue;
        std::sort(members.begin(), members.end(), LexLess{});
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end(), kernels::family_less);
    return out;
}

struct MooreShape {
    ElementSet members;
    Poset order;
};

} // namespace

InclusionOrder inclusion_order(const std::vector<SetFamily>& families)
{
    InclusionOrder o;
    const std::size_t n = families.size();
    o.leq.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        o.names.push_back(families[i].name());
        for (std::size_t j = 0; j < n; ++j)
            o.leq[i][j] = family_subset(families[i].members(), families[j].members());
    }
    return o;
}

InclusionOrder InclusionOrder::induced(const std::vector<std::size_t>& keep) const
{
    InclusionOrder o;
    o.leq.assign(keep.size(), std::vector<bool>(keep.size(), false));
    for (std::size_t i = 0; i < keep.size(); ++i) {
        o.names.push_back(names[keep[i]]);
        for (std::size_t j = 0; j < keep.size(); ++j)
            o.leq[i][j] = leq[keep[i]][keep[j]];
    }
    return o;
}

Poset InclusionOrder::as_poset() const
{
    if (size() > max_carrier_size)
        throw Error(ErrorKind::too_large, std::to_string(size()) + " families");
    std::vector<ElementSet> up(size());
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j)
            if (leq[i][j])
                up[i].insert(j);
    return Poset::from_up_sets(names, std::move(up));
}

std::optional<BoundGap> missing_bound(const InclusionOrder& order)
{
    const std::size_t n = order.size();
    // A least upper bound is above every upper bound, so it has the most elements above it.
    auto has_extreme = [&](std::size_t i, std::size_t j, bool upward) {
        auto rel = [&](std::size_t a, std::size_t b) { return upward ? order.leq[a][b] : order.leq[b][a]; };
        std::vector<std::size_t> bounds;
        for (std::size_t k = 0; k < n; ++k)
            if (rel(i, k) && rel(j, k))
                bounds.push_back(k);
        if (bounds.empty())
            return false;
        std::size_t best = bounds.front(), best_count = 0;
        for (std::size_t k : bounds) {
            std::size_t count = 0;
            for (std::size_t m = 0; m < n; ++m)
                count += rel(k, m);
            if (count > best_count) {
                best = k;
                best_count = count;
            }
        }
        return std::all_of(bounds.begin(), bounds.end(), [&](std::size_t k) { return rel(best, k); });
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!has_extreme(i, j, true))
                return BoundGap{i, j, true};
            if (!has_extreme(i, j, false))
                return BoundGap{i, j, false};
        }
    return std::nullopt;
}

bool is_complete_lattice(const InclusionOrder& order) { return order.size() > 0 && !missing_bound(order); }

bool is_order_isomorphism(const InclusionOrder& p, const InclusionOrder& q, std::span<const std::size_t> map)
{
    if (p.size() != q.size() || map.size() != p.size())
        return false;
    std::vector<bool> used(q.size(), false);
    for (std::size_t x : map) {
        if (x >= q.size() || used[x])
            return false;
        used[x] = true;
    }
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j)
            if (p.leq[i][j] != q.leq[map[i]][map[j]])
                return false;
    return true;
}

std::optional<std::size_t> RealizablePoset::find(const std::vector<ElementSet>& sorted_members) const
{
    for (std::size_t i = 0; i < families.size(); ++i)
        if (families[i].members() == sorted_members)
            return i;
    return std::nullopt;
}

RealizablePoset enumerate_realizable_families(const Poset& space, const FiniteLattice& scale, RealizationMode mode,
                                              std::size_t cap)
{
    RealizablePoset r{space, scale, {}, {}, {}};
    if (mode == RealizationMode::oracle) {
        const std::size_t maps = kernels::parallel::count_monotone_maps(space, scale.order(), cap);
        if (maps > cap)
            throw CapExceeded(cap, maps, "monotone map enumeration");
        for (auto& found : kernels::parallel::realizable_families(space, scale.order())) {
            r.families.emplace_back(space, std::move(found.members));
            r.provenance.push_back(Realization{std::nullopt, FuzzyMap(space, scale, std::move(found.witness))});
        }
    } else {
        std::vector<MooreShape> shapes;
        for (ElementSet m : enumerate_moore_families(scale, cap))
            shapes.push_back(MooreShape{m, scale.order().induced(m)});
        const auto candidates = cut_like_subfamilies(enumerate_up_sets(space, cap).members(), space.all(), cap,
                                                     "up-set family enumeration");
        for (const auto& members : candidates) {
            SetFamily f(space, members);
            const Poset target = reverse_inclusion_order(f);
            for (const MooreShape& s : shapes) {
                if (s.members.size() != members.size() || !same_invariants(s.order, target))
                    continue;
                if (poset_isomorphism(s.order, target)) {
                    r.families.push_back(std::move(f));
                    r.provenance.push_back(Realization{s.members, std::nullopt});
                    break;
                }
            }
        }
    }
    r.order = inclusion_order(r.families);
    return r;
}

bool same_families(const RealizablePoset& a, const RealizablePoset& b)
{
    if (a.families.size() != b.families.size())
        return false;
    for (std::size_t i = 0; i < a.families.size(); ++i)
        if (a.families[i].members() != b.families[i].members())
            return false;
    return true;
}

CompletenessDecision quotient_is_complete_lattice(const Poset& space, const FiniteLattice& scale, bool verify,
                                                  std::size_t cap)
{
    CompletenessDecision d;
    if (scale.size() == 1) {
        d.single_point_scale = true;
        d.complete = true;
    } else {
        const FamilyLattice fx = family_lattice(enumerate_up_sets(space, cap));
        d.closure = find_closure_for_target(scale, fx.lattice().order(), cap);
        d.complete = d.closure.has_value();
    }
    if (verify) {
        const bool small = kernels::parallel::count_monotone_maps(space, scale.order(), cap) <= cap;
        const RealizablePoset r = enumerate_realizable_families(
            space, scale, small ? RealizationMode::oracle : RealizationMode::characterization, cap);
        d.direct = is_complete_lattice(r.order);
        if (auto gap = missing_bound(r.order))
            d.direct_gap = r.order.names[gap->first] + " and " + r.order.names[gap->second] + " have no " +
                           (gap->upper ? "least upper bound" : "greatest lower bound");
        d.realizable = r.families.size();
    }
    return d;
}

EmbeddingReport embed_upset_quotient(const Poset& space, const ClosureOperator& c, std::size_t cap)
{
    if (!(c.carrier() == space))
        throw Error(ErrorKind::carrier_mismatch, "closure operator lives on a different poset");
    EmbeddingReport r;
    r.quotient = quotient_by_closure(space, c);
    r.source = enumerate_up_sets(r.quotient.order, cap);
    const SetFamily fx = enumerate_up_sets(space, cap);

    std::vector<ElementSet> images;
    for (ElementSet t : r.source.members()) {
        ElementSet s;
        t.for_each([&](std::size_t b) { s |= r.quotient.blocks[b]; });
        images.push_back(s);
    }
    std::vector<ElementSet> distinct;
    for (ElementSet s : images)
        if (std::find(distinct.begin(), distinct.end(), s) == distinct.end())
            distinct.push_back(s);
    r.injective = distinct.size() == images.size();
    r.image = SetFamily(space, distinct);

    r.image_up_sets = true;
    for (ElementSet s : images) {
        const auto idx = fx.find(s);
        r.map.push_back(idx ? *idx : fx.size());
        r.image_up_sets = r.image_up_sets && idx.has_value();
    }

    r.order_both_ways = true;
    for (std::size_t i = 0; i < images.size(); ++i)
        for (std::size_t j = 0; j < images.size(); ++j) {
            const bool source_le = r.source.member(j).subset_of(r.source.member(i));
            const bool image_le = images[j].subset_of(images[i]);
            r.order_both_ways = r.order_both_ways && source_le == image_le;
        }

    r.unions_closed = r.image.contains(ElementSet{});
    r.intersections_closed = r.image.contains(space.all());
    for (ElementSet a : distinct)
        for (ElementSet b : distinct) {
            r.unions_closed = r.unions_closed && r.image.contains(a | b);
            r.intersections_closed = r.intersections_closed && r.image.contains(a & b);
        }

    const auto empty = r.source.find(ElementSet{});
    const auto full = r.source.find(r.quotient.order.all());
    r.empty_to_empty = empty && images[*empty].empty();
    r.full_to_full = full && images[*full] == space.all();
    return r;
}

BirkhoffDriverReport birkhoff_embedding_driver(const FiniteLattice& l1, const FiniteLattice& l2, std::size_t cap)
{
    const BirkhoffRepresentation r1 = birkhoff_representation(l1);
    const BirkhoffRepresentation r2 = birkhoff_representation(l2);
    BirkhoffDriverReport report;
    report.degenerate = l2.size() == 1;
    report.direct_embedding = find_bound_preserving_embedding(l2, l1);

    const Poset& m1 = r1.irreducible_order;
    const Poset& m2 = r2.irreducible_order;
    const IsoWitness r1_inverse = r1.map.inverse();
    for (const ClosureOperator& c : enumerate_closure_operators(m1, cap)) {
        ++report.closures_examined;
        const QuotientPoset q = quotient_by_closure(m1, c);
        if (q.order.size() != m2.size() || !same_invariants(q.order, m2))
            continue;
        auto iso = poset_isomorphism(q.order, m2);
        if (!iso)
            continue;
        const IsoWitness block_of_irreducible = iso->inverse();
        IsoWitness e;
        e.map.resize(l2.size());
        for (std::size_t a = 0; a < l2.size(); ++a) {
            ElementSet s;
            r2.up_sets.member(r2.map.map[a]).for_each(
                [&](std::size_t m) { s |= q.blocks[block_of_irreducible.map[m]]; });
            const auto j = r1.up_sets.find(s);
            if (!j)
                throw std::logic_error("union of blocks is not an up-set of M(L1)");
            e.map[a] = r1_inverse.map[*j];
        }
        e.surjective = l2.size() == l1.size();
        e.order = is_order_embedding(l2.order(), l1.order(), e.map);
        e.bounds = e.map[l2.bottom()] == l1.bottom() && e.map[l2.top()] == l1.top();
        e.meets = e.joins = true;
        for (std::size_t a = 0; a < l2.size(); ++a)
            for (std::size_t b = 0; b < l2.size(); ++b) {
                e.meets = e.meets && e.map[l2.meet(a, b)] == l1.meet(e.map[a], e.map[b]);
                e.joins = e.joins && e.map[l2.join(a, b)] == l1.join(e.map[a], e.map[b]);
            }
        report.closure_route = ClosureRoute{c, std::move(*iso), std::move(e)};
        break;
    }
    return report;
}

IntervalReport interval_isomorphism(const Poset& space, const ClosureOperator& c, const FiniteLattice& scale,
                                    std::size_t cap)
{
    const SetFamily fx = enumerate_up_sets(space, cap);
    if (!find_closure_for_target(scale, family_lattice(fx).lattice().order(), cap))
        throw Error(ErrorKind::precondition_unmet,
                    "no closure operator on the scale has quotient isomorphic to the up-sets of the space");

    IntervalReport r;
    r.embedding = embed_upset_quotient(space, c, cap);
    const SetFamily& image = r.embedding.image;
    if (!r.embedding.all_pass())
        r.counterexample = "block-union map fails an embedding check";

    if (!r.counterexample) {
        auto full = representable(fx, space, scale, cap);
        if (auto* bad = std::get_if<Refutation>(&full)) {
            r.counterexample = std::string("up-sets of the space not representable: ") + to_string(bad->reason) +
                               ": " + bad->detail;
        } else {
            auto restricted = restrict_cut_family(std::get<FuzzyMap>(full), image, cap);
            if (auto* bad = std::get_if<Refutation>(&restricted.outcome))
                r.counterexample = std::string("restriction refuted: ") + to_string(bad->reason) + ": " + bad->detail;
            else
                r.witness = std::get<FuzzyMap>(restricted.outcome);
        }
    }

    const RealizablePoset whole = enumerate_realizable_families(space, scale, RealizationMode::characterization, cap);
    const auto image_members = image.sorted_members();
    std::vector<std::size_t> inside;
    for (std::size_t i = 0; i < whole.families.size(); ++i)
        if (family_subset(whole.families[i].members(), image_members)) {
            inside.push_back(i);
            r.interval.push_back(whole.families[i]);
        }
    r.interval_order = whole.order.induced(inside);

    for (auto& members : cut_like_subfamilies(image_members, space.all(), cap, "subfamily enumeration"))
        r.bridge.emplace_back(space, std::move(members));
    r.interval_is_bridge = r.interval.size() == r.bridge.size() &&
                           std::equal(r.interval.begin(), r.interval.end(), r.bridge.begin(),
                                      [](const SetFamily& a, const SetFamily& b) { return a.members() == b.members(); });

    const QuotientPoset& q = r.embedding.quotient;
    r.quotient_side = enumerate_realizable_families(q.order, scale, RealizationMode::characterization, cap);

    // G -> {S_T | T in G}
    IsoWitness iso;
    std::optional<std::string> failure;
    for (const SetFamily& g : r.quotient_side.families) {
        std::vector<ElementSet> mapped;
        for (ElementSet t : g.members()) {
            ElementSet s;
            t.for_each([&](std::size_t b) { s |= q.blocks[b]; });
            mapped.push_back(s);
        }
        std::sort(mapped.begin(), mapped.end(), LexLess{});
        std::optional<std::size_t> hit;
        for (std::size_t i = 0; i < r.interval.size() && !hit; ++i)
            if (r.interval[i].members() == mapped)
                hit = i;
        if (!hit) {
            failure = "family " + g.name() + " of X/C has no counterpart in the interval";
            break;
        }
        iso.map.push_back(*hit);
    }
    if (!failure && !is_order_isomorphism(r.quotient_side.order, r.interval_order, iso.map))
        failure = "block-union map on families is not an order isomorphism onto the interval";
    const InclusionOrder bridge_order = inclusion_order(r.bridge);
    if (r.quotient_side.order.size() <= max_carrier_size && bridge_order.size() <= max_carrier_size)
        r.quotient_side_matches_bridge =
            poset_isomorphism(r.quotient_side.order.as_poset(), bridge_order.as_poset()).has_value();
    else
        r.quotient_side_matches_bridge = !failure && r.interval_is_bridge;
    if (failure) {
        if (!r.counterexample)
            r.counterexample = failure;
    } else {
        iso.order = true;
        r.iso = std::move(iso);
    }
    if (!r.counterexample && !r.interval_is_bridge)
        r.counterexample = "interval differs from the intersection-closed subfamilies of the image";
    if (!r.counterexample && !r.quotient_side_matches_bridge)
        r.counterexample = "realizable families on X/C are not isomorphic to the subfamily poset";
    return r;
}

} // namespace lfuzzy
