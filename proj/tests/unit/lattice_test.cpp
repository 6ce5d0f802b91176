#include "helpers.hpp"

#include "lfuzzy/exhaustive.hpp"
#include "lfuzzy/fixtures.hpp"

#include <doctest.h>

using namespace lfuzzy;

TEST_CASE("lattice tables obey the laws")
{
    for (const FiniteLattice& l : labeled_lattices_up_to(5))
        REQUIRE_FALSE(check_lattice_laws(l).has_value());
}

TEST_CASE("non-lattices are rejected")
{
    const Poset bowtie = build_poset({"a", "b", "c", "d"}, {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
    CHECK_FALSE(is_lattice(bowtie));
    try {
        as_lattice(bowtie);
        FAIL("expected not_a_lattice");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::not_a_lattice);
    }
    CHECK_FALSE(is_lattice(antichain_poset({"a", "b"})));
}

TEST_CASE("family lattice: join is intersection, meet is least member containing the union")
{
    const Poset x = fixtures::upset_quotient_space();
    const FamilyLattice f = family_lattice(enumerate_up_sets(x));
    const std::size_t c = *f.find(x.subset(std::vector<std::string>{"c"}));
    const std::size_t de = *f.find(x.subset(std::vector<std::string>{"d", "e"}));
    const std::size_t j = f.lattice().join(c, de);
    const std::size_t m = f.lattice().meet(c, de);
    CHECK(f.member(j).empty());
    CHECK(f.member(m) == x.subset(std::vector<std::string>{"c", "d", "e"}));
    CHECK(f.member(f.top()).empty());
    CHECK(f.member(f.bottom()) == x.all());
}

TEST_CASE("meet-irreducibles of a distributive lattice are isomorphic to the poset")
{
    const Poset x = fixtures::upset_quotient_space();
    const FiniteLattice l = family_lattice(enumerate_up_sets(x)).lattice();
    CHECK(is_distributive(l));
    const BirkhoffRepresentation b = birkhoff_representation(l);
    CHECK(b.irreducibles.size() == 5);
    CHECK(poset_isomorphism(b.irreducible_order, x).has_value());
    CHECK(b.up_sets.size() == l.size());
}

TEST_CASE("Birkhoff map is an isomorphism for every distributive lattice in range")
{
    for (const FiniteLattice& l : labeled_lattices_up_to(5)) {
        if (!is_distributive(l))
            continue;
        const BirkhoffRepresentation b = birkhoff_representation(l);
        REQUIRE(is_order_isomorphism(l.order(), b.up_sets.lattice().order(), b.map.map));
    }
}

TEST_CASE("M3 is not distributive")
{
    const FiniteLattice l = m3();
    CHECK(distributivity_violation(l).has_value());
    try {
        birkhoff_representation(l);
        FAIL("expected not_distributive");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::not_distributive);
    }
}

TEST_CASE("bound-preserving embeddings")
{
    CHECK_FALSE(find_bound_preserving_embedding(b2(), chain_lattice(3)).has_value());
    const auto e = find_bound_preserving_embedding(chain_lattice(3), b2());
    REQUIRE(e);
    CHECK(e->map[0] == 0);
    CHECK(e->map[2] == 3);
    CHECK(find_bound_preserving_embedding(fixtures::chain_embedding_l2(), fixtures::chain_embedding_l1()).has_value());
}
