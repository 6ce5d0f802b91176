#include "helpers.hpp"

#include "lfuzzy/exhaustive.hpp"
#include "lfuzzy/fixtures.hpp"

#include <doctest.h>

using namespace lfuzzy;

TEST_CASE("realizable families of the 2-antichain over the 2-chain")
{
    const Poset x = antichain_poset({"a", "b"});
    const FiniteLattice l = chain_lattice(2);
    const RealizablePoset r = enumerate_realizable_families(x, l);
    REQUIRE(r.families.size() == 4);
    CHECK(r.families[0].name() == "{{a,b}}");
    CHECK(r.families[1].name() == "{{},{a,b}}");
    CHECK(r.families[2].name() == "{{b},{a,b}}");
    CHECK(r.families[3].name() == "{{a},{a,b}}");
    CHECK_FALSE(is_complete_lattice(r.order));
    CHECK(same_families(r, enumerate_realizable_families(x, l, RealizationMode::oracle)));
    const CompletenessDecision d = quotient_is_complete_lattice(x, l, true);
    CHECK_FALSE(d.complete);
    CHECK(d.direct == false);
}

TEST_CASE("single-point scale is always complete")
{
    for (const Poset& x : labeled_posets_up_to(3)) {
        const CompletenessDecision d = quotient_is_complete_lattice(x, chain_lattice(1), true);
        CHECK(d.complete);
        CHECK(d.single_point_scale);
        CHECK(d.direct == true);
    }
}

TEST_CASE("characterization and oracle enumerations agree in range")
{
    for (const Poset& x : labeled_posets_up_to(3))
        for (const FiniteLattice& l : labeled_lattices_up_to(4))
            REQUIRE(same_families(enumerate_realizable_families(x, l),
                                  enumerate_realizable_families(x, l, RealizationMode::oracle)));
}

TEST_CASE("oracle enumeration honors the cap")
{
    CHECK_THROWS_AS(enumerate_realizable_families(fixtures::upset_quotient_space(), chain_lattice(4),
                                                  RealizationMode::oracle, 10),
                    CapExceeded);
}

TEST_CASE("inclusion order bounds")
{
    InclusionOrder o;
    o.names = {"p", "q"};
    o.leq = {{true, false}, {false, true}};
    const auto gap = missing_bound(o);
    REQUIRE(gap);
    CHECK(gap->first == 0);
    CHECK(gap->second == 1);
    o.leq[0][1] = true;
    CHECK(is_complete_lattice(o));
}

TEST_CASE("block-union embedding on the five-point example")
{
    const EmbeddingReport e = embed_upset_quotient(fixtures::upset_quotient_space(), fixtures::upset_quotient_closure());
    CHECK(e.all_pass());
    CHECK(e.source.size() == 7);
    CHECK(e.image.size() == 7);
    CHECK_THROWS_AS(embed_upset_quotient(chain_poset({"a"}), fixtures::upset_quotient_closure()), Error);
}

TEST_CASE("Birkhoff driver on the chain example")
{
    const BirkhoffDriverReport r =
        birkhoff_embedding_driver(fixtures::chain_embedding_l1(), fixtures::chain_embedding_l2());
    CHECK_FALSE(r.closure_route.has_value());
    CHECK(r.closures_examined == 2);
    CHECK(r.direct_embedding.has_value());
}

TEST_CASE("Birkhoff driver finds a route when one exists")
{
    const Poset x = fixtures::upset_quotient_space();
    const FiniteLattice l1 = family_lattice(enumerate_up_sets(x)).lattice();
    const QuotientPoset q = quotient_by_closure(x, fixtures::upset_quotient_closure());
    const FiniteLattice l2 = family_lattice(enumerate_up_sets(q.order)).lattice();
    const BirkhoffDriverReport r = birkhoff_embedding_driver(l1, l2);
    REQUIRE(r.closure_route.has_value());
    CHECK(r.closure_route->embedding.map.size() == 7);
    CHECK(birkhoff_embedding_driver(l1, chain_lattice(1)).degenerate);
    CHECK_THROWS_AS(birkhoff_embedding_driver(m3(), chain_lattice(2)), Error);
}

TEST_CASE("interval isomorphism on the five-point example")
{
    const Poset x = fixtures::upset_quotient_space();
    const IntervalReport r =
        interval_isomorphism(x, fixtures::upset_quotient_closure(), family_lattice(enumerate_up_sets(x)).lattice());
    CHECK(r.verified());
    CHECK(r.interval.size() == 49);
    CHECK(r.bridge.size() == 49);
    CHECK(r.quotient_side.families.size() == 49);
}

TEST_CASE("interval isomorphism requires a suitable scale")
{
    try {
        interval_isomorphism(fixtures::upset_quotient_space(), fixtures::upset_quotient_closure(), chain_lattice(3));
        FAIL("expected precondition_unmet");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::precondition_unmet);
    }
}

// Cut-like up-set families over the full up-set lattice of the five-point
// example that no map realizes; the realizable families lack a join.
TEST_CASE("five-point example over its own up-set lattice")
{
    const Poset x = fixtures::upset_quotient_space();
    const FiniteLattice l = family_lattice(enumerate_up_sets(x)).lattice();
    const RealizablePoset r = enumerate_realizable_families(x, l);
    CHECK(r.families.size() == 246);
    CHECK(same_families(r, enumerate_realizable_families(x, l, RealizationMode::oracle)));
    const SetFamily t = family_of(x, {{}, {"e"}, {"d", "e"}, {"c"}, {"c", "e"}, {"a", "c", "e"}, {"a", "b", "c", "d", "e"}});
    CHECK_FALSE(r.find(t.sorted_members()).has_value());
    CHECK(std::holds_alternative<Refutation>(representable(t, x, l)));
    const CompletenessDecision d = quotient_is_complete_lattice(x, l, true);
    CHECK(d.complete);
    CHECK(d.direct == false);
    REQUIRE(d.direct_gap);
}
