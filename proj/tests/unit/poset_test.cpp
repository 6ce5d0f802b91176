#include "helpers.hpp"

#include "lfuzzy/exhaustive.hpp"
#include "lfuzzy/fixtures.hpp"

#include <doctest.h>

using namespace lfuzzy;

TEST_CASE("build_poset closes covers transitively")
{
    const Poset p = chain_poset({"x", "y", "z"});
    CHECK(p.leq(0, 2));
    CHECK_FALSE(p.leq(2, 0));
    CHECK(p.covers().size() == 2);
    CHECK(p.minimal() == ElementSet::single(0));
    CHECK(p.maximal() == ElementSet::single(2));
}

TEST_CASE("build_poset rejects bad input")
{
    auto kind = [](auto&& f) {
        try {
            f();
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::semantic_error;
    };
    CHECK(kind([] { build_poset({"a", "a"}, {}); }) == ErrorKind::duplicate_element);
    CHECK(kind([] { build_poset({"a", "b"}, {{"a", "c"}}); }) == ErrorKind::unknown_name);
    CHECK(kind([] { build_poset({"a", "b"}, {{"a", "b"}, {"b", "a"}}); }) == ErrorKind::cycle_detected);
    CHECK(kind([] { build_poset({"a b"}, {}); }) == ErrorKind::invalid_name);
    std::vector<std::string> many;
    for (int i = 0; i < 65; ++i)
        many.push_back("e" + std::to_string(i));
    CHECK(kind([&] { antichain_poset(many); }) == ErrorKind::too_large);
}

TEST_CASE("up-sets of the five-point example")
{
    const Poset x = fixtures::upset_quotient_space();
    const SetFamily f = enumerate_up_sets(x);
    CHECK(f.size() == 10);
    CHECK(f.cut_like());
    CHECK_FALSE(f.first_non_up_set().has_value());
    CHECK(f.name() == "{{},{e},{d,e},{c},{c,e},{c,d,e},{b,c,d,e},{a,c,e},{a,c,d,e},{a,b,c,d,e}}");
}

TEST_CASE("up-set counts on small shapes")
{
    CHECK(enumerate_up_sets(antichain_poset({"a", "b", "c"})).size() == 8);
    CHECK(enumerate_up_sets(chain_poset({"a", "b", "c", "d"})).size() == 5);
    CHECK_THROWS_AS(enumerate_up_sets(antichain_poset({"a", "b", "c"}), 4), CapExceeded);
}

TEST_CASE("every enumerated up-set is closed upward and the count matches brute force")
{
    for (const Poset& p : labeled_posets_up_to(4)) {
        const SetFamily f = enumerate_up_sets(p);
        std::size_t brute = 0;
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << p.size()); ++s)
            brute += is_up_set(p, ElementSet(s));
        REQUIRE(f.size() == brute);
        for (ElementSet s : f.members())
            CHECK(is_up_set(p, s));
    }
}

TEST_CASE("set family validation")
{
    const Poset x = antichain_poset({"a", "b"});
    CHECK_THROWS_AS(SetFamily(x, {ElementSet(1), ElementSet(1)}), Error);
    CHECK_THROWS_AS(SetFamily(x, {ElementSet(4)}), Error);
    const SetFamily f = family_of(x, {{"a"}, {"b"}, {"a", "b"}});
    CHECK(f.contains_full());
    CHECK(f.intersection_gap().has_value());
}

TEST_CASE("poset isomorphism and invariants")
{
    const Poset p = build_poset({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}});
    const Poset q = build_poset({"x", "y", "z"}, {{"y", "x"}, {"z", "x"}});
    const auto iso = poset_isomorphism(p, q);
    REQUIRE(iso);
    CHECK(is_order_isomorphism(p, q, iso->map));
    CHECK(is_order_isomorphism(q, p, iso->inverse().map));
    CHECK_FALSE(poset_isomorphism(p, p.dual()));
    CHECK_FALSE(same_invariants(p, chain_poset({"a", "b", "c"})));
}

TEST_CASE("labeled poset counts")
{
    CHECK(labeled_posets(1).size() == 1);
    CHECK(labeled_posets(2).size() == 3);
    CHECK(labeled_posets(3).size() == 19);
    CHECK(labeled_posets(4).size() == 219);
    CHECK(labeled_lattices_up_to(5).size() == 425);
}
