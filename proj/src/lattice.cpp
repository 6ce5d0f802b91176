#include "lfuzzy/lattice.hpp"

#include <stdexcept>

namespace lfuzzy {

namespace {

// The greatest element of `bounds`, if it has one.
std::optional<std::size_t> greatest_of(const Poset& p, ElementSet bounds)
{
    std::optional<std::size_t> out;
    bounds.for_each([&](std::size_t g) {
        if (!out && bounds.subset_of(p.down(g)))
            out = g;
    });
    return out;
}

std::optional<std::size_t> least_of(const Poset& p, ElementSet bounds)
{
    std::optional<std::size_t> out;
    bounds.for_each([&](std::size_t g) {
        if (!out && bounds.subset_of(p.up(g)))
            out = g;
    });
    return out;
}

struct Tables {
    std::vector<std::uint8_t> meet;
    std::vector<std::uint8_t> join;
    std::optional<std::pair<std::size_t, std::size_t>> missing_meet;
    std::optional<std::pair<std::size_t, std::size_t>> missing_join;
};

Tables tabulate(const Poset& p)
{
    const std::size_t n = p.size();
    Tables t;
    t.meet.assign(n * n, 0);
    t.join.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            auto g = greatest_of(p, p.down(i) & p.down(j));
            auto l = least_of(p, p.up(i) & p.up(j));
            if (!g && !t.missing_meet)
                t.missing_meet = std::make_pair(i, j);
            if (!l && !t.missing_join)
                t.missing_join = std::make_pair(i, j);
            if (g)
                t.meet[i * n + j] = t.meet[j * n + i] = static_cast<std::uint8_t>(*g);
            if (l)
                t.join[i * n + j] = t.join[j * n + i] = static_cast<std::uint8_t>(*l);
        }
    return t;
}

} // namespace

std::size_t FiniteLattice::meet(ElementSet s) const
{
    std::size_t acc = top_;
    s.for_each([&](std::size_t i) { acc = meet(acc, i); });
    return acc;
}

std::size_t FiniteLattice::join(ElementSet s) const
{
    std::size_t acc = bottom_;
    s.for_each([&](std::size_t i) { acc = join(acc, i); });
    return acc;
}

FiniteLattice as_lattice(const Poset& p)
{
    if (p.empty())
        throw Error(ErrorKind::not_a_lattice, "empty carrier");
    Tables t = tabulate(p);
    if (t.missing_join)
        throw Error(ErrorKind::not_a_lattice,
                    p.name(t.missing_join->first) + " and " + p.name(t.missing_join->second) + " have no lub");
    if (t.missing_meet)
        throw Error(ErrorKind::not_a_lattice,
                    p.name(t.missing_meet->first) + " and " + p.name(t.missing_meet->second) + " have no glb");
    FiniteLattice l;
    l.order_ = p;
    l.meet_ = std::move(t.meet);
    l.join_ = std::move(t.join);
    l.bottom_ = *least_of(p, p.all());
    l.top_ = *greatest_of(p, p.all());
    return l;
}

bool is_lattice(const Poset& p)
{
    if (p.empty())
        return false;
    const Tables t = tabulate(p);
    return !t.missing_meet && !t.missing_join;
}

std::optional<std::string> check_lattice_laws(const FiniteLattice& l)
{
    const std::size_t n = l.size();
    const Poset& p = l.order();
    for (std::size_t x = 0; x < n; ++x) {
        if (!p.leq(l.bottom(), x) || !p.leq(x, l.top()))
            return "bounds fail at " + p.name(x);
        if (l.meet(x, x) != x || l.join(x, x) != x)
            return "idempotence fails at " + p.name(x);
        for (std::size_t y = 0; y < n; ++y) {
            const std::size_t m = l.meet(x, y);
            const std::size_t j = l.join(x, y);
            if (m != l.meet(y, x) || j != l.join(y, x))
                return "commutativity fails at " + p.name(x) + "," + p.name(y);
            if (!p.leq(m, x) || !p.leq(m, y) || !p.leq(x, j) || !p.leq(y, j))
                return "bound property fails at " + p.name(x) + "," + p.name(y);
            if (l.meet(x, j) != x || l.join(x, m) != x)
                return "absorption fails at " + p.name(x) + "," + p.name(y);
            for (std::size_t z = 0; z < n; ++z) {
                if (p.leq(z, x) && p.leq(z, y) && !p.leq(z, m))
                    return "meet is not greatest at " + p.name(x) + "," + p.name(y);
                if (p.leq(x, z) && p.leq(y, z) && !p.leq(j, z))
                    return "join is not least at " + p.name(x) + "," + p.name(y);
                if (l.meet(l.meet(x, y), z) != l.meet(x, l.meet(y, z)) ||
                    l.join(l.join(x, y), z) != l.join(x, l.join(y, z)))
                    return "associativity fails at " + p.name(x) + "," + p.name(y) + "," + p.name(z);
            }
        }
    }
    return std::nullopt;
}

Poset reverse_inclusion_order(const SetFamily& f)
{
    std::vector<std::string> names;
    std::vector<ElementSet> up(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        names.push_back(f.member_name(i));
        for (std::size_t j = 0; j < f.size(); ++j)
            if (f.member(j).subset_of(f.member(i)))
                up[i].insert(j);
    }
    return Poset::from_up_sets(std::move(names), std::move(up));
}

FamilyLattice family_lattice(const SetFamily& f)
{
    if (!f.contains_full())
        throw Error(ErrorKind::missing_full_set, "family lacks " + f.base().set_name(f.base().all()));
    if (auto gap = f.intersection_gap())
        throw Error(ErrorKind::not_intersection_closed,
                    f.member_name(gap->first) + " and " + f.member_name(gap->second));
    FamilyLattice out;
    out.family_ = f;
    out.lattice_ = as_lattice(reverse_inclusion_order(f));
    return out;
}

std::optional<std::size_t> FamilyLattice::least_containing(ElementSet s) const
{
    ElementSet acc = family_.base().all();
    bool any = false;
    for (ElementSet m : family_.members())
        if (s.subset_of(m)) {
            acc &= m;
            any = true;
        }
    if (!any)
        return std::nullopt;
    return family_.find(acc);
}

std::size_t FamilyLattice::meet_of(std::span<const std::size_t> members) const
{
    ElementSet u;
    for (std::size_t i : members)
        u |= member(i);
    return *least_containing(u);
}

std::size_t FamilyLattice::join_of(std::span<const std::size_t> members) const
{
    ElementSet acc = family_.base().all();
    for (std::size_t i : members)
        acc &= member(i);
    return *family_.find(acc);
}

ElementSet meet_irreducibles(const FiniteLattice& l)
{
    ElementSet out;
    const std::size_t n = l.size();
    for (std::size_t q = 0; q < n; ++q) {
        if (q == l.top())
            continue;
        bool reducible = false;
        for (std::size_t x = 0; x < n && !reducible; ++x)
            for (std::size_t y = 0; y < n && !reducible; ++y)
                reducible = x != q && y != q && l.meet(x, y) == q;
        if (!reducible)
            out.insert(q);
    }
    return out;
}

std::optional<DistributivityViolation> distributivity_violation(const FiniteLattice& l)
{
    const std::size_t n = l.size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z)))
                    return DistributivityViolation{{x, y, z}};
    return std::nullopt;
}

bool is_distributive(const FiniteLattice& l) { return !distributivity_violation(l).has_value(); }

BirkhoffRepresentation birkhoff_representation(const FiniteLattice& l)
{
    if (auto v = distributivity_violation(l))
        throw Error(ErrorKind::not_distributive,
                    "triple " + l.name(v->triple[0]) + "," + l.name(v->triple[1]) + "," + l.name(v->triple[2]));
    BirkhoffRepresentation rep;
    rep.irreducibles = meet_irreducibles(l);
    rep.irreducible_order = l.order().induced(rep.irreducibles);
    rep.up_sets = family_lattice(enumerate_up_sets(rep.irreducible_order));
    const auto positions = rep.irreducibles.indices();
    rep.map.map.resize(l.size());
    for (std::size_t a = 0; a < l.size(); ++a) {
        ElementSet image;
        for (std::size_t k = 0; k < positions.size(); ++k)
            if (l.leq(a, positions[k]))
                image.insert(k);
        auto idx = rep.up_sets.find(image);
        if (!idx)
            throw std::logic_error("representation image is not an up-set of M(L)");
        rep.map.map[a] = *idx;
    }
    const FiniteLattice& target = rep.up_sets.lattice();
    if (!is_order_isomorphism(l.order(), target.order(), rep.map.map))
        throw std::logic_error("representation map is not an order isomorphism");
    rep.map.order = true;
    rep.map.bounds = rep.map.map[l.bottom()] == target.bottom() && rep.map.map[l.top()] == target.top();
    rep.map.meets = rep.map.joins = true;
    for (std::size_t a = 0; a < l.size(); ++a)
        for (std::size_t b = 0; b < l.size(); ++b) {
            rep.map.meets = rep.map.meets && rep.map.map[l.meet(a, b)] == target.meet(rep.map.map[a], rep.map.map[b]);
            rep.map.joins = rep.map.joins && rep.map.map[l.join(a, b)] == target.join(rep.map.map[a], rep.map.map[b]);
        }
    return rep;
}

std::optional<IsoWitness> find_bound_preserving_embedding(const FiniteLattice& from, const FiniteLattice& into)
{
    const std::size_t n = from.size();
    const Poset& p = from.order();
    const Poset& q = into.order();
    if (n > into.size())
        return std::nullopt;
    std::vector<ElementSet> options(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < into.size(); ++j)
            if (p.down(i).size() <= q.down(j).size() && p.up(i).size() <= q.up(j).size())
                options[i].insert(j);
        if (i == from.bottom())
            options[i] &= ElementSet::single(into.bottom());
        if (i == from.top())
            options[i] &= ElementSet::single(into.top());
    }
    std::vector<std::size_t> map(n, 0);
    ElementSet used;
    auto extend = [&](auto&& self, std::size_t i) -> bool {
        if (i == n)
            return true;
        const ElementSet free = options[i] - used;
        for (std::uint64_t b = free.bits(); b != 0; b &= b - 1) {
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
    w.surjective = n == into.size();
    w.order = true;
    w.bounds = true;
    w.meets = w.joins = true;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            w.meets = w.meets && w.map[from.meet(a, b)] == into.meet(w.map[a], w.map[b]);
            w.joins = w.joins && w.map[from.join(a, b)] == into.join(w.map[a], w.map[b]);
        }
    return w;
}

} // namespace lfuzzy
