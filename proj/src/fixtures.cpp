#include "lfuzzy/fixtures.hpp"

#include "lfuzzy/document.hpp"
#include "lfuzzy/dot.hpp"

#include <algorithm>
#include <functional>

namespace lfuzzy::fixtures {

namespace {

SetFamily family_of(const Poset& base, const std::vector<std::vector<std::string>>& sets)
{
    std::vector<ElementSet> members;
    for (const auto& s : sets)
        members.push_back(base.subset(s));
    return SetFamily(base, std::move(members));
}

std::vector<std::string> family_names(const SetFamily& f)
{
    std::vector<std::string> out;
    for (ElementSet s : f.sorted_members())
        out.push_back(f.base().set_name(s));
    return out;
}

std::vector<std::string> sorted_names(std::vector<std::vector<std::string>> sets, const Poset& base)
{
    return family_names(family_of(base, sets));
}

} // namespace

Poset upset_quotient_space()
{
    return build_poset({"a", "b", "c", "d", "e"}, {{"b", "c"}, {"b", "d"}, {"a", "c"}, {"a", "e"}, {"d", "e"}});
}

ClosureOperator upset_quotient_closure()
{
    const Poset x = upset_quotient_space();
    return make_closure(x, {x.index("a"), x.index("b"), x.index("c"), x.index("e"), x.index("e")});
}

Poset representability_space()
{
    return build_poset({"a", "b", "c", "d", "e"}, {{"e", "a"}, {"e", "b"}, {"d", "a"}, {"c", "b"}});
}

FiniteLattice representability_scale()
{
    return as_lattice(build_poset({"0", "q", "r", "p", "s", "t", "1", "u1", "u2", "u3", "u4"},
                                  {{"0", "q"}, {"0", "r"}, {"0", "p"}, {"0", "u1"}, {"q", "s"}, {"r", "t"},
                                   {"r", "u4"}, {"p", "t"}, {"u1", "t"}, {"u1", "u2"}, {"u4", "s"},
                                   {"u4", "u3"}, {"u2", "u3"}, {"t", "u3"}, {"s", "1"}, {"u3", "1"}}));
}

SetFamily representability_s()
{
    return family_of(representability_space(),
                     {{}, {"a"}, {"b"}, {"a", "b"}, {"b", "c"}, {"a", "d"}, {"a", "b", "c", "d", "e"}});
}

SetFamily representability_r()
{
    return family_of(representability_space(), {{}, {"a"}, {"b"}, {"b", "c"}, {"a", "b", "c", "d", "e"}});
}

ElementSet representability_labeled()
{
    const FiniteLattice l = representability_scale();
    const std::vector<std::string> labeled{"0", "q", "r", "p", "s", "t", "1"};
    return l.order().subset(labeled);
}

FiniteLattice chain_embedding_l1() { return family_lattice(enumerate_up_sets(upset_quotient_space())).lattice(); }

SetFamily chain_embedding_u()
{
    return family_of(upset_quotient_space(),
                     {{}, {"c"}, {"c", "e"}, {"c", "d", "e"}, {"a", "c", "d", "e"}, {"a", "b", "c", "d", "e"}});
}

FiniteLattice chain_embedding_l2() { return family_lattice(chain_embedding_u()).lattice(); }

Poset antichain_space() { return antichain_poset({"a", "b", "c", "d"}); }

FiniteLattice antichain_scale()
{
    return family_lattice(
               family_of(antichain_space(), {{}, {"a"}, {"b"}, {"a", "b"}, {"a", "b", "c"}, {"a", "b", "c", "d"}}))
        .lattice();
}

FuzzyMap antichain_mu0()
{
    return FuzzyMap::from_pairs(antichain_space(), antichain_scale(),
                                {{"a", "{a}"}, {"b", "{b}"}, {"c", "{a,b,c}"}, {"d", "{a,b,c,d}"}});
}

SetFamily antichain_t0()
{
    return family_of(antichain_space(), {{}, {"a"}, {"b"}, {"a", "b", "c"}, {"a", "b", "c", "d"}});
}

ElementSet antichain_expected_moore()
{
    const std::vector<std::string> names{"{a,b,c,d}", "{a,b}", "{a}", "{b}", "{}"};
    return antichain_scale().order().subset(names);
}

std::vector<Check> run_fixtures(const std::string& dir)
{
    std::vector<Check> out;
    auto check = [&](const std::string& fixture, const std::string& name, const std::string& provenance,
                     const std::function<std::string()>& body) {
        Check c{fixture, name, provenance, false, {}};
        try {
            c.detail = body();
            c.passed = c.detail.empty();
        } catch (const std::exception& e) {
            c.detail = e.what();
        }
        out.push_back(std::move(c));
    };
    auto path = [&](const std::string& rel) { return dir + "/" + rel; };
    auto expect = [](bool ok, const std::string& why) { return ok ? std::string() : why; };

    // Loading first so a missing document surfaces as fixture_missing.
    const Poset uq_space = to_poset(load_document(path("upset_quotient/space.pos")));
    const ClosureOperator uq_closure = to_closure(load_document(path("upset_quotient/closure.map")), uq_space);
    const Poset rep_space = to_poset(load_document(path("representability/space.pos")));
    const FiniteLattice rep_scale = to_lattice(load_document(path("representability/scale.lat")));
    const SetFamily rep_s = to_family(load_document(path("representability/s.fam")), rep_space);
    const SetFamily rep_r = to_family(load_document(path("representability/r.fam")), rep_space);
    const Poset ce_space = to_poset(load_document(path("chain_embedding/space.pos")));
    const SetFamily ce_u = to_family(load_document(path("chain_embedding/u.fam")), ce_space);
    const FiniteLattice ce_l1 = to_lattice(load_document(path("chain_embedding/l1.lat")));
    const FiniteLattice ce_l2 = to_lattice(load_document(path("chain_embedding/l2.lat")));
    const Poset ar_space = to_poset(load_document(path("antichain_restriction/space.pos")));
    const FiniteLattice ar_scale = to_lattice(load_document(path("antichain_restriction/scale.lat")));
    const FuzzyMap ar_mu0 = to_map(load_document(path("antichain_restriction/mu0.map")), ar_space, ar_scale);
    const SetFamily ar_t0 = to_family(load_document(path("antichain_restriction/t0.fam")), ar_space);

    const std::string uq = "upset_quotient";
    check(uq, "documents match the built objects", "published", [&] {
        return expect(uq_space == upset_quotient_space() && uq_closure == upset_quotient_closure(),
                      "space or closure document differs");
    });
    check(uq, "up-sets are the ten listed sets", "published", [&] {
        const auto got = family_names(enumerate_up_sets(uq_space));
        const auto want = sorted_names({{}, {"c"}, {"e"}, {"c", "e"}, {"d", "e"}, {"c", "d", "e"}, {"a", "c", "e"},
                                        {"a", "c", "d", "e"}, {"b", "c", "d", "e"}, {"a", "b", "c", "d", "e"}},
                                       uq_space);
        return expect(got == want, "got " + enumerate_up_sets(uq_space).name());
    });
    check(uq, "quotient blocks are {a} {b} {c} {d,e}", "published", [&] {
        const QuotientPoset q = quotient_by_closure(uq_space, uq_closure);
        const std::vector<std::string> want{"{a}", "{b}", "{c}", "{d,e}"};
        return expect(q.order.names() == want, "blocks differ");
    });
    check(uq, "up-sets of the quotient are the seven listed sets", "published", [&] {
        const QuotientPoset q = quotient_by_closure(uq_space, uq_closure);
        const auto got = family_names(enumerate_up_sets(q.order));
        const auto want = sorted_names({{},
                                        {"{c}"},
                                        {"{d,e}"},
                                        {"{c}", "{d,e}"},
                                        {"{a}", "{c}", "{d,e}"},
                                        {"{b}", "{c}", "{d,e}"},
                                        {"{a}", "{b}", "{c}", "{d,e}"}},
                                       q.order);
        return expect(got == want, "got " + enumerate_up_sets(q.order).name());
    });
    check(uq, "block unions form the expected image", "derived", [&] {
        const EmbeddingReport r = embed_upset_quotient(uq_space, uq_closure);
        const auto want = sorted_names({{},
                                        {"c"},
                                        {"d", "e"},
                                        {"c", "d", "e"},
                                        {"a", "c", "d", "e"},
                                        {"b", "c", "d", "e"},
                                        {"a", "b", "c", "d", "e"}},
                                       uq_space);
        return expect(family_names(r.image) == want, "got " + r.image.name());
    });
    check(uq, "block-union embedding passes every preservation check", "derived", [&] {
        return expect(embed_upset_quotient(uq_space, uq_closure).all_pass(), "a preservation check failed");
    });
    check(uq, "quotient diagram has four nodes and four edges", "derived", [&] {
        const std::string dot = emit_dot(quotient_by_closure(uq_space, uq_closure));
        const auto edges = std::count(dot.begin(), dot.end(), '>');
        const auto lines = std::count(dot.begin(), dot.end(), '\n');
        return expect(edges == 4 && lines == 3 + 4 + 4 + 1, "unexpected diagram:\n" + dot);
    });

    const std::string rp = "representability";
    check(rp, "documents match the built objects", "published", [&] {
        return expect(rep_space == representability_space() && rep_scale == representability_scale() &&
                          rep_s.same_members(representability_s()) && rep_r.same_members(representability_r()),
                      "a document differs from its built object");
    });
    check(rp, "transcribed scale has eleven elements and is a lattice", "published", [&] {
        return expect(rep_scale.size() == 11 && !check_lattice_laws(rep_scale), "bad transcription");
    });
    check(rp, "labeled scale elements are isomorphic to S under reverse inclusion", "published", [&] {
        const Poset labeled = rep_scale.order().induced(representability_labeled());
        return expect(poset_isomorphism(labeled, reverse_inclusion_order(rep_s)).has_value(), "no isomorphism");
    });
    for (const auto* fam : {&rep_s, &rep_r}) {
        const std::string label = fam == &rep_s ? "S" : "R";
        check(rp, label + " is representable and its witness reproduces it", "published", [&, fam] {
            const Representation r = representable(*fam, rep_space, rep_scale);
            if (const auto* bad = std::get_if<Refutation>(&r))
                return std::string("refuted: ") + bad->detail;
            return expect(cut_family(std::get<FuzzyMap>(r)).family.same_members(*fam), "cuts differ");
        });
    }

    const std::string ce = "chain_embedding";
    check(ce, "documents match the built objects", "derived", [&] {
        return expect(ce_space == upset_quotient_space() && ce_u.same_members(chain_embedding_u()) &&
                          ce_l1 == chain_embedding_l1() && ce_l2 == chain_embedding_l2(),
                      "a document differs from its built object");
    });
    check(ce, "second lattice is a six-element chain", "published", [&] {
        bool chain = ce_l2.size() == 6;
        for (std::size_t i = 0; i < ce_l2.size(); ++i)
            for (std::size_t j = 0; j < ce_l2.size(); ++j)
                chain = chain && ce_l2.order().comparable(i, j);
        return expect(chain, "not a six-element chain");
    });
    check(ce, "meet-irreducibles of the up-set lattice are isomorphic to the space", "published", [&] {
        const Poset m = ce_l1.order().induced(meet_irreducibles(ce_l1));
        return expect(poset_isomorphism(m, ce_space).has_value(), "no isomorphism");
    });
    check(ce, "bound-preserving embedding exists", "published", [&] {
        return expect(find_bound_preserving_embedding(ce_l2, ce_l1).has_value(), "no embedding");
    });
    check(ce, "no closure on the irreducibles has quotient isomorphic to the chain's irreducibles", "published", [&] {
        const BirkhoffDriverReport r = birkhoff_embedding_driver(ce_l1, ce_l2);
        return expect(!r.closure_route && r.direct_embedding && r.closures_examined > 0,
                      "closure route unexpectedly found or direct embedding missing");
    });

    const std::string ar = "antichain_restriction";
    check(ar, "documents match the built objects", "derived", [&] {
        return expect(ar_space == antichain_space() && ar_scale == antichain_scale() && ar_mu0 == antichain_mu0() &&
                          ar_t0.same_members(antichain_t0()),
                      "a document differs from its built object");
    });
    check(ar, "mu0 has six distinct cuts", "derived", [&] {
        const CutReport c = cut_family(ar_mu0);
        const auto want = sorted_names({{}, {"a"}, {"b"}, {"a", "b"}, {"a", "b", "c"}, {"a", "b", "c", "d"}}, ar_space);
        return expect(family_names(c.family) == want && c.family.size() == ar_scale.size(), "got " + c.family.name());
    });
    check(ar, "cut at {a,b} is {a,b}", "derived", [&] {
        return expect(p_cut(ar_mu0, "{a,b}") == ar_space.subset(std::vector<std::string>{"a", "b"}), "cut differs");
    });
    check(ar, "mu0 quotient has six singleton blocks", "derived", [&] {
        const ApproxQuotient q = approx_quotient(ar_mu0);
        return expect(q.quotient.blocks.size() == 6, "block count differs");
    });
    check(ar, "least matching Moore family is {abcd, ab, a, b, {}}", "derived", [&] {
        const auto t = find_closure_for_target(ar_scale, reverse_inclusion_order(ar_t0));
        return expect(t && t->moore_family == antichain_expected_moore(), "different Moore family");
    });
    check(ar, "restriction to T0 yields a verified witness", "derived", [&] {
        const RestrictionResult r = restrict_cut_family(ar_mu0, ar_t0);
        if (const auto* bad = std::get_if<Refutation>(&r.outcome))
            return std::string("refuted: ") + bad->detail;
        return expect(verifies_as_witness(std::get<FuzzyMap>(r.outcome), ar_t0), "witness does not verify");
    });
    check(ar, "restriction candidate fails inflation at {a,b}", "derived", [&] {
        const RestrictionResult r = restrict_cut_family(ar_mu0, ar_t0);
        const auto& inf = r.diagnostic.report.inflationary;
        return expect(r.diagnostic.report.first_failure() == 'a' && inf &&
                          r.diagnostic.carrier.member(inf->p) == ar_space.subset(std::vector<std::string>{"a", "b"}),
                      "no inflation failure at {a,b}");
    });
    return out;
}

} // namespace lfuzzy::fixtures
