#include "helpers.hpp"

#include "lfuzzy/exhaustive.hpp"
#include "lfuzzy/fixtures.hpp"

#include <doctest.h>

using namespace lfuzzy;

TEST_CASE("cuts of a map on a chain")
{
    const Poset x = chain_poset({"a", "b"});
    const FiniteLattice l = chain_lattice(3);
    const FuzzyMap m = FuzzyMap::from_pairs(x, l, {{"a", "1"}, {"b", "2"}});
    CHECK(p_cut(m, "0") == x.all());
    CHECK(p_cut(m, "2") == ElementSet::single(1));
    const CutReport c = cut_family(m);
    CHECK(c.family.size() == 2);
    CHECK(c.cut_of[0] == c.cut_of[1]);
    CHECK(is_fuzzy_up_set(m).monotone);
}

TEST_CASE("from_pairs requires a total function")
{
    const Poset x = chain_poset({"a", "b"});
    const FiniteLattice l = chain_lattice(2);
    CHECK_THROWS_AS(FuzzyMap::from_pairs(x, l, {{"a", "1"}}), Error);
    CHECK_THROWS_AS(FuzzyMap::from_pairs(x, l, {{"a", "1"}, {"a", "0"}, {"b", "0"}}), Error);
    CHECK_THROWS_AS(FuzzyMap(x, l, {0, 5}), Error);
}

TEST_CASE("non-monotone map has a cut that is not an up-set")
{
    const Poset x = chain_poset({"a", "b"});
    const FuzzyMap m(x, chain_lattice(2), {1, 0});
    const UpSetCheck c = is_fuzzy_up_set(m);
    CHECK_FALSE(c.monotone);
    REQUIRE(c.non_up_set_cut);
    CHECK_FALSE(c.internal_error);
}

TEST_CASE("approximate quotient of a monotone map")
{
    const Poset x = fixtures::upset_quotient_space();
    const FiniteLattice l = chain_lattice(3);
    const FuzzyMap m(x, l, {1, 0, 2, 1, 2});
    const ApproxQuotient q = approx_quotient(m);
    CHECK(q.quotient.blocks.size() == q.cuts.family.size());
    CHECK(is_order_isomorphism(q.quotient.order, reverse_inclusion_order(q.cuts.family), q.iso.map));
}

TEST_CASE("representable refutes in a fixed order")
{
    const Poset x = antichain_poset({"a", "b"});
    const FiniteLattice l = chain_lattice(3);
    auto reason = [&](const SetFamily& f) { return std::get<Refutation>(representable(f, x, l)).reason; };
    CHECK(reason(family_of(x, {{"a"}})) == Refutation::Reason::missing_full_set);
    CHECK(reason(family_of(x, {{"a"}, {"b"}, {"a", "b"}})) == Refutation::Reason::not_intersection_closed);
    const Poset c = chain_poset({"a", "b"});
    CHECK(std::get<Refutation>(representable(family_of(c, {{"a"}, {"a", "b"}}), c, l)).reason ==
          Refutation::Reason::member_not_up_set);
    CHECK(reason(family_of(x, {{}, {"a"}, {"b"}, {"a", "b"}})) == Refutation::Reason::no_moore_family);
    CHECK_THROWS_AS(representable(family_of(c, {{"a", "b"}}), x, l), Error);
}

TEST_CASE("representable witnesses verify across the range")
{
    for (const Poset& x : labeled_posets_up_to(3)) {
        std::vector<SetFamily> families;
        const SetFamily ups = enumerate_up_sets(x);
        const std::size_t n = ups.size();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            std::vector<ElementSet> m;
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1)
                    m.push_back(ups.member(i));
            const SetFamily f(x, m);
            if (f.cut_like())
                families.push_back(f);
        }
        for (const FiniteLattice& l : labeled_lattices_up_to(4))
            for (const SetFamily& f : families) {
                const Representation r = representable(f, x, l);
                if (const auto* w = std::get_if<FuzzyMap>(&r))
                    REQUIRE(verifies_as_witness(*w, f));
            }
    }
}

TEST_CASE("restriction on the antichain fixture")
{
    const RestrictionResult r = restrict_cut_family(fixtures::antichain_mu0(), fixtures::antichain_t0());
    REQUIRE(std::holds_alternative<FuzzyMap>(r.outcome));
    CHECK(verifies_as_witness(std::get<FuzzyMap>(r.outcome), fixtures::antichain_t0()));
    CHECK(r.diagnostic.report.first_failure() == 'a');
    const Poset x = fixtures::antichain_space();
    CHECK(r.diagnostic.carrier.member(r.diagnostic.report.inflationary->p) ==
          x.subset(std::vector<std::string>{"a", "b"}));
}

TEST_CASE("restriction preconditions")
{
    const FuzzyMap mu = fixtures::antichain_mu0();
    const Poset x = fixtures::antichain_space();
    CHECK_THROWS_AS(restrict_cut_family(mu, family_of(x, {{"a"}})), Error);
    CHECK_THROWS_AS(restrict_cut_family(mu, family_of(x, {{"c"}, {"a", "b", "c", "d"}})), Error);
}
