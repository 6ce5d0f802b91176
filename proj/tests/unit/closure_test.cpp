#include "helpers.hpp"

#include "lfuzzy/exhaustive.hpp"
#include "lfuzzy/fixtures.hpp"

#include <doctest.h>

using namespace lfuzzy;

TEST_CASE("axiom report names the first failing axiom")
{
    const Poset p = chain_poset({"x", "y", "z"});
    std::vector<std::size_t> down{0, 0, 2};
    const AxiomReport a = check_closure_axioms(p, down);
    CHECK(a.first_failure() == 'a');
    REQUIRE(a.inflationary);
    CHECK(a.inflationary->p == 1);
    // 0 -> 2, 1 -> 1 is inflationary but not monotone.
    CHECK(check_closure_axioms(p, std::vector<std::size_t>{2, 1, 2}).first_failure() == 'b');
    const Poset anti = antichain_poset({"u", "v"});
    CHECK(check_closure_axioms(anti, std::vector<std::size_t>{0, 1}).all_pass());
    const Poset v = build_poset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK(check_closure_axioms(v, std::vector<std::size_t>{1, 2, 2}).first_failure() == 'c');
}

TEST_CASE("validate_closure returns the violation")
{
    const Poset p = chain_poset({"x", "y"});
    const auto r = validate_closure(p, {0, 0});
    CHECK(std::holds_alternative<ClosureViolation>(r));
    CHECK(std::holds_alternative<ClosureOperator>(validate_closure(p, {1, 1})));
    CHECK_THROWS_AS(make_closure(p, {0, 0}), Error);
}

TEST_CASE("closure and Moore family are mutually inverse")
{
    for (const FiniteLattice& l : labeled_lattices_up_to(5))
        for (ElementSet s : enumerate_moore_families(l)) {
            REQUIRE(is_moore_family(l, s));
            CHECK(closed_elements(closure_from_moore_family(l, s)) == s);
        }
}

TEST_CASE("closure enumeration on lattices matches Moore families")
{
    for (const FiniteLattice& l : labeled_lattices_up_to(4)) {
        const auto c = enumerate_closure_operators(l);
        const auto m = enumerate_moore_families(l);
        REQUIRE(c.size() == m.size());
        for (const ClosureOperator& op : c)
            CHECK(check_closure_axioms(l.order(), op.map()).all_pass());
    }
}

TEST_CASE("closures on the five-point example")
{
    const Poset x = fixtures::upset_quotient_space();
    const auto all = enumerate_closure_operators(x);
    CHECK(all.size() == 2);
    const QuotientPoset q = quotient_by_closure(x, fixtures::upset_quotient_closure());
    CHECK(q.blocks.size() == 4);
    CHECK(q.order.name(3) == "{d,e}");
    CHECK(q.block_of[3] == q.block_of[4]);
}

TEST_CASE("quotients are isomorphic to closed elements")
{
    for (const Poset& p : labeled_posets_up_to(4))
        for (const ClosureOperator& c : enumerate_closure_operators(p)) {
            const QuotientPoset q = quotient_by_closure(p, c);
            REQUIRE(is_order_isomorphism(q.order, p.induced(closed_elements(c)), q.closed_iso.map));
        }
}

TEST_CASE("composition of closures")
{
    const FiniteLattice l = b2();
    const ClosureOperator c0 = closure_from_moore_family(l, ElementSet(0b1011));
    const Poset closed = l.order().induced(closed_elements(c0));
    for (const ClosureOperator& c1 : enumerate_closure_operators(closed)) {
        const Composition comp = compose_closures(l, c0, c1);
        CHECK(check_closure_axioms(l.order(), comp.composite.map()).all_pass());
        CHECK(comp.quotient_iso.has_value());
    }
    CHECK_THROWS_AS(compose_closures(l, c0, identity_closure(l.order())), Error);
}

TEST_CASE("not a Moore family")
{
    const FiniteLattice l = b2();
    CHECK_FALSE(is_moore_family(l, ElementSet(0b0110)));
    CHECK(moore_family_violation(l, ElementSet(0b0110)).has_value());
    CHECK_THROWS_AS(closure_from_moore_family(l, ElementSet(0b0110)), Error);
}

TEST_CASE("closure for a target shape")
{
    const FiniteLattice l = b2();
    const auto t = find_closure_for_target(l, chain_poset({"p", "q", "r"}));
    REQUIRE(t);
    CHECK(t->moore_family.size() == 3);
    CHECK_FALSE(find_closure_for_target(chain_lattice(3), antichain_poset({"p", "q"})).has_value());
}
