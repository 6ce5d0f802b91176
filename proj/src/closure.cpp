#include "lfuzzy/closure.hpp"

#include <algorithm>
#include <stdexcept>

namespace lfuzzy {

char AxiomReport::first_failure() const
{
    if (inflationary)
        return 'a';
    if (monotone)
        return 'b';
    if (idempotent)
        return 'c';
    return 0;
}

AxiomReport check_closure_axioms(const Poset& carrier, std::span<const std::size_t> map)
{
    const std::size_t n = carrier.size();
    if (map.size() != n)
        throw Error(ErrorKind::precondition_violated, "map is not total on the carrier");
    for (std::size_t v : map)
        if (v >= n)
            throw Error(ErrorKind::precondition_violated, "map leaves the carrier");
    AxiomReport r;
    for (std::size_t p = 0; p < n && !r.inflationary; ++p)
        if (!carrier.leq(p, map[p]))
            r.inflationary = AxiomWitness{p, std::nullopt};
    for (std::size_t p = 0; p < n && !r.monotone; ++p)
        for (std::size_t q = 0; q < n && !r.monotone; ++q)
            if (carrier.leq(p, q) && !carrier.leq(map[p], map[q]))
                r.monotone = AxiomWitness{p, q};
    for (std::size_t p = 0; p < n && !r.idempotent; ++p)
        if (map[map[p]] != map[p])
            r.idempotent = AxiomWitness{p, std::nullopt};
    return r;
}

ElementSet ClosureOperator::closed() const
{
    ElementSet out;
    for (std::size_t p = 0; p < map_.size(); ++p)
        if (map_[p] == p)
            out.insert(p);
    return out;
}

std::variant<ClosureOperator, ClosureViolation> validate_closure(const Poset& carrier, std::vector<std::size_t> map)
{
    const AxiomReport r = check_closure_axioms(carrier, map);
    switch (r.first_failure()) {
    case 'a': return ClosureViolation{'a', *r.inflationary};
    case 'b': return ClosureViolation{'b', *r.monotone};
    case 'c': return ClosureViolation{'c', *r.idempotent};
    default: return ClosureOperator(carrier, std::move(map));
    }
}

ClosureOperator make_closure(const Poset& carrier, std::vector<std::size_t> map)
{
    auto v = validate_closure(carrier, std::move(map));
    if (auto* bad = std::get_if<ClosureViolation>(&v)) {
        std::string where = carrier.name(bad->witness.p);
        if (bad->witness.q)
            where += "," + carrier.name(*bad->witness.q);
        throw Error(ErrorKind::precondition_violated, std::string("closure axiom (") + bad->axiom + ") fails at " + where);
    }
    return std::get<ClosureOperator>(std::move(v));
}

ClosureOperator identity_closure(const Poset& carrier)
{
    std::vector<std::size_t> map(carrier.size());
    for (std::size_t i = 0; i < map.size(); ++i)
        map[i] = i;
    return make_closure(carrier, std::move(map));
}

ElementSet closed_elements(const ClosureOperator& c) { return c.closed(); }

std::optional<std::string> moore_family_violation(const FiniteLattice& l, ElementSet s)
{
    if (!s.contains(l.top()))
        return "missing top " + l.name(l.top());
    std::optional<std::string> out;
    s.for_each([&](std::size_t a) {
        s.for_each([&](std::size_t b) {
            if (!out && !s.contains(l.meet(a, b)))
                out = "meet of " + l.name(a) + " and " + l.name(b) + " escapes the family";
        });
    });
    return out;
}

bool is_moore_family(const FiniteLattice& l, ElementSet s) { return !moore_family_violation(l, s).has_value(); }

ClosureOperator closure_from_moore_family(const FiniteLattice& l, ElementSet s)
{
    if (auto bad = moore_family_violation(l, s))
        throw Error(ErrorKind::not_moore_family, *bad);
    std::vector<std::size_t> map(l.size());
    for (std::size_t p = 0; p < l.size(); ++p)
        map[p] = l.meet(s & l.order().up(p));
    return make_closure(l.order(), std::move(map));
}

QuotientPoset quotient_by_closure(const Poset& p, const ClosureOperator& c)
{
    if (!(c.carrier() == p))
        throw Error(ErrorKind::carrier_mismatch, "closure operator lives on a different carrier");
    QuotientPoset q;
    q.block_of.assign(p.size(), 0);
    std::vector<std::size_t> block_by_top(p.size(), p.size());
    for (std::size_t x = 0; x < p.size(); ++x) {
        const std::size_t t = c(x);
        if (block_by_top[t] == p.size()) {
            block_by_top[t] = q.blocks.size();
            q.blocks.emplace_back();
            q.block_tops.push_back(t);
        }
        q.block_of[x] = block_by_top[t];
        q.blocks[block_by_top[t]].insert(x);
    }
    const std::size_t k = q.blocks.size();
    std::vector<std::string> names;
    std::vector<ElementSet> up(k);
    for (std::size_t a = 0; a < k; ++a) {
        names.push_back(p.set_name(q.blocks[a]));
        for (std::size_t b = 0; b < k; ++b)
            if (p.leq(q.block_tops[a], q.block_tops[b]))
                up[a].insert(b);
    }
    q.order = Poset::from_up_sets(std::move(names), std::move(up));

    const auto closed = c.closed().indices();
    q.closed_iso.map.resize(k);
    for (std::size_t a = 0; a < k; ++a)
        q.closed_iso.map[a] =
            static_cast<std::size_t>(std::find(closed.begin(), closed.end(), q.block_tops[a]) - closed.begin());
    if (!is_order_isomorphism(q.order, p.induced(c.closed()), q.closed_iso.map))
        throw std::logic_error("quotient is not isomorphic to its closed elements");
    q.closed_iso.order = true;
    return q;
}

Composition compose_closures(const FiniteLattice& l, const ClosureOperator& c0, const ClosureOperator& c1)
{
    if (!(c0.carrier() == l.order()))
        throw Error(ErrorKind::carrier_mismatch, "inner closure does not live on the lattice");
    const ElementSet closed0 = c0.closed();
    if (!(c1.carrier() == l.order().induced(closed0)))
        throw Error(ErrorKind::carrier_mismatch, "outer closure does not live on the inner closed elements");
    const auto positions = closed0.indices();
    auto rank = [&](std::size_t pos) {
        return static_cast<std::size_t>(std::find(positions.begin(), positions.end(), pos) - positions.begin());
    };

    std::vector<std::size_t> map(l.size());
    for (std::size_t p = 0; p < l.size(); ++p)
        map[p] = positions[c1(rank(c0(p)))];
    Composition out{make_closure(l.order(), std::move(map)), std::nullopt};

    // (L/C0)/C1: carry C1 over to the blocks of L/C0 through their closed tops.
    const QuotientPoset q0 = quotient_by_closure(l.order(), c0);
    std::vector<std::size_t> lifted(q0.blocks.size());
    for (std::size_t b = 0; b < q0.blocks.size(); ++b)
        lifted[b] = q0.block_of[positions[c1(rank(q0.block_tops[b]))]];
    const ClosureOperator c1_on_q0 = make_closure(q0.order, std::move(lifted));
    const QuotientPoset nested = quotient_by_closure(q0.order, c1_on_q0);
    const QuotientPoset direct = quotient_by_closure(l.order(), out.composite);
    out.quotient_iso = poset_isomorphism(direct.order, nested.order);
    return out;
}

ClosureCandidate restriction_closure_candidate(const FamilyLattice& f, const SetFamily& t, MeetReading reading)
{
    if (!(t.base() == f.family().base()))
        throw Error(ErrorKind::precondition_violated, "subfamily is over a different base");
    for (std::size_t i = 0; i < t.size(); ++i)
        if (!f.find(t.member(i)))
            throw Error(ErrorKind::precondition_violated, t.member_name(i) + " is not in the enclosing family");
    if (!t.contains_full())
        throw Error(ErrorKind::precondition_violated, "subfamily lacks the full set");
    if (auto gap = t.intersection_gap())
        throw Error(ErrorKind::precondition_violated,
                    "subfamily is not intersection-closed at " + t.member_name(gap->first) + " and " +
                        t.member_name(gap->second));

    const FamilyLattice tl = family_lattice(t);
    const ElementSet top_t = tl.member(tl.top());
    const ElementSet top_f = f.member(f.top());
    std::vector<ElementSet> irreducible;
    meet_irreducibles(tl.lattice()).for_each([&](std::size_t i) { irreducible.push_back(tl.member(i)); });

    ClosureCandidate out{f, std::vector<std::size_t>(f.size()), {}};
    for (std::size_t pi = 0; pi < f.size(); ++pi) {
        const ElementSet p = f.member(pi);
        const bool strict =
            t.contains(p) && std::find(irreducible.begin(), irreducible.end(), p) == irreducible.end();
        ElementSet united;
        ElementSet common = f.family().base().all();
        bool any = false;
        for (ElementSet q : t.members()) {
            if (q == top_t)
                continue;
            if (strict ? q.proper_subset_of(p) : q.subset_of(p)) {
                united |= q;
                common &= q;
                any = true;
            }
        }
        ElementSet value = top_f;
        if (any)
            value = reading == MeetReading::least_containing_union ? tl.member(*tl.least_containing(united)) : common;
        out.map[pi] = *f.find(value);
    }
    out.report = check_closure_axioms(f.lattice().order(), out.map);
    return out;
}

std::optional<TargetClosure> find_closure_for_target(const FiniteLattice& l, const Poset& target, std::size_t cap)
{
    const std::size_t n = l.size();
    const std::size_t k = target.size();
    if (k == 0 || k > n)
        return std::nullopt;
    std::size_t examined = 0;
    std::optional<TargetClosure> found;
    ElementSet chosen;
    // Excluding before including visits characteristic vectors in ascending lexicographic order.
    auto search = [&](auto&& self, std::size_t pos, std::size_t picked) -> void {
        if (found)
            return;
        if (picked == k) {
            if (++examined > cap)
                throw CapExceeded(cap, examined, "Moore family search");
            if (!chosen.contains(l.top()) || !is_moore_family(l, chosen))
                return;
            const Poset sub = l.order().induced(chosen);
            if (!same_invariants(sub, target))
                return;
            if (auto iso = poset_isomorphism(sub, target))
                found = TargetClosure{closure_from_moore_family(l, chosen), chosen, *iso};
            return;
        }
        if (pos == n || n - pos < k - picked)
            return;
        if (pos != l.top())
            self(self, pos + 1, picked);
        chosen.insert(pos);
        self(self, pos + 1, picked + 1);
        chosen.erase(pos);
    };
    search(search, 0, 0);
    return found;
}

std::vector<ElementSet> enumerate_moore_families(const FiniteLattice& l, std::size_t cap)
{
    const std::size_t n = l.size();
    const std::size_t free_bits = n - 1;
    if (free_bits >= 63 || (std::size_t{1} << free_bits) > cap)
        throw CapExceeded(cap, free_bits >= 63 ? ~std::size_t{0} : std::size_t{1} << free_bits,
                          "Moore family enumeration");
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < n; ++i)
        if (i != l.top())
            others.push_back(i);
    std::vector<ElementSet> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_bits); ++mask) {
        ElementSet s = ElementSet::single(l.top());
        for (std::size_t b = 0; b < free_bits; ++b)
            if ((mask >> b) & 1u)
                s.insert(others[b]);
        if (is_moore_family(l, s))
            out.push_back(s);
    }
    std::sort(out.begin(), out.end(), [](ElementSet a, ElementSet b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return lex_less(a, b);
    });
    return out;
}

std::vector<ClosureOperator> enumerate_closure_operators(const Poset& p, std::size_t cap)
{
    const std::size_t n = p.size();
    std::vector<std::size_t> map(n, 0);
    std::vector<ClosureOperator> out;
    std::size_t nodes = 0;
    ElementSet images;  // values taken so far; each must end up a fixed point
    auto search = [&](auto&& self, std::size_t i) -> void {
        if (++nodes > cap)
            throw CapExceeded(cap, nodes, "closure operator enumeration");
        if (i == n) {
            out.push_back(make_closure(p, map));
            return;
        }
        ElementSet options = p.up(i);
        if (images.contains(i))
            options &= ElementSet::single(i);
        for (std::uint64_t b = options.bits(); b != 0; b &= b - 1) {
            const auto j = static_cast<std::size_t>(std::countr_zero(b));
            if (j < i && map[j] != j)
                continue;
            bool ok = true;
            for (std::size_t k = 0; k < i && ok; ++k) {
                if (p.leq(k, i) && !p.leq(map[k], j))
                    ok = false;
                if (p.leq(i, k) && !p.leq(j, map[k]))
                    ok = false;
            }
            if (!ok)
                continue;
            map[i] = j;
            const bool fresh = !images.contains(j);
            images.insert(j);
            self(self, i + 1);
            if (fresh)
                images.erase(j);
        }
    };
    search(search, 0);
    return out;
}

std::vector<ClosureOperator> enumerate_closure_operators(const FiniteLattice& l, std::size_t cap)
{
    std::vector<ClosureOperator> out;
    for (ElementSet s : enumerate_moore_families(l, cap))
        out.push_back(closure_from_moore_family(l, s));
    return out;
}

} // namespace lfuzzy
