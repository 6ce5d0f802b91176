// One line per criterion: PASS/FAIL, name, counts, elapsed and limit.

#include "lfuzzy/document.hpp"
#include "lfuzzy/dot.hpp"
#include "lfuzzy/exhaustive.hpp"
#include "lfuzzy/fixtures.hpp"
#include "lfuzzy/kernels.hpp"
#include "lfuzzy/upset_quotient.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace lfuzzy;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Range {
    std::vector<Poset> spaces = labeled_posets_up_to(3);
    std::vector<FiniteLattice> scales = labeled_lattices_up_to(5);
};

const Range& range()
{
    static const Range r;
    return r;
}

std::vector<std::vector<std::size_t>> all_maps(std::size_t n, std::size_t values)
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> a(n, 0);
    while (true) {
        out.push_back(a);
        std::size_t i = 0;
        while (i < n && ++a[i] == values)
            a[i++] = 0;
        if (i == n)
            break;
    }
    return out;
}

std::vector<std::string> names(std::initializer_list<const char*> l) { return {l.begin(), l.end()}; }

SetFamily family(const Poset& base, std::vector<std::vector<std::string>> sets)
{
    std::vector<ElementSet> m;
    for (const auto& s : sets)
        m.push_back(base.subset(s));
    return SetFamily(base, std::move(m));
}

Outcome upset_quotient_example()
{
    const Poset x = fixtures::upset_quotient_space();
    const ClosureOperator c = fixtures::upset_quotient_closure();
    const SetFamily fx = enumerate_up_sets(x);
    const SetFamily want = family(x, {{}, {"c"}, {"e"}, {"c", "e"}, {"d", "e"}, {"c", "d", "e"}, {"a", "c", "e"},
                                      {"a", "c", "d", "e"}, {"b", "c", "d", "e"}, {"a", "b", "c", "d", "e"}});
    if (!fx.same_members(want) || fx.size() != 10)
        return {false, "up-sets " + fx.name()};
    const QuotientPoset q = quotient_by_closure(x, c);
    if (q.order.names() != names({"{a}", "{b}", "{c}", "{d,e}"}))
        return {false, "blocks differ"};
    const SetFamily fq = enumerate_up_sets(q.order);
    const SetFamily want_q = family(q.order, {{},
                                              {"{c}"},
                                              {"{d,e}"},
                                              {"{c}", "{d,e}"},
                                              {"{a}", "{c}", "{d,e}"},
                                              {"{b}", "{c}", "{d,e}"},
                                              {"{a}", "{b}", "{c}", "{d,e}"}});
    if (!fq.same_members(want_q))
        return {false, "quotient up-sets " + fq.name()};
    const EmbeddingReport e = embed_upset_quotient(x, c);
    if (!e.all_pass())
        return {false, "embedding check failed"};
    return {true, "10 up-sets, 4 blocks, 7 quotient up-sets, embedding verified"};
}

Outcome representability_example()
{
    const Poset x = fixtures::representability_space();
    const FiniteLattice l = fixtures::representability_scale();
    for (const SetFamily& f : {fixtures::representability_s(), fixtures::representability_r()}) {
        const Representation r = representable(f, x, l);
        if (!std::holds_alternative<FuzzyMap>(r))
            return {false, f.name() + " refuted: " + std::get<Refutation>(r).detail};
        if (!cut_family(std::get<FuzzyMap>(r)).family.same_members(f))
            return {false, f.name() + " witness cuts differ"};
    }
    const Poset labeled = l.order().induced(fixtures::representability_labeled());
    if (!poset_isomorphism(labeled, reverse_inclusion_order(fixtures::representability_s())))
        return {false, "labeled elements not isomorphic to S"};
    return {true, "both witnesses reproduce their families; labeled sub-poset matches (11-element scale)"};
}

Outcome chain_embedding_example()
{
    const FiniteLattice l1 = fixtures::chain_embedding_l1();
    const FiniteLattice l2 = fixtures::chain_embedding_l2();
    if (!find_bound_preserving_embedding(l2, l1))
        return {false, "no bound-preserving embedding"};
    const BirkhoffRepresentation r1 = birkhoff_representation(l1);
    const Poset chain = chain_poset({"m1", "m2", "m3", "m4", "m5"});
    const auto closures = enumerate_closure_operators(r1.irreducible_order);
    for (const ClosureOperator& c : closures)
        if (poset_isomorphism(quotient_by_closure(r1.irreducible_order, c).order, chain))
            return {false, "a closure quotient is a 5-chain"};
    if (!poset_isomorphism(birkhoff_representation(l2).irreducible_order, chain))
        return {false, "irreducibles of the chain lattice are not a 5-chain"};
    return {true, "embedding found; none of " + std::to_string(closures.size()) +
                      " closure operators gives a 5-chain quotient"};
}

Outcome upset_cut_equivalence()
{
    std::size_t maps = 0, disagreements = 0;
    for (const Poset& x : range().spaces)
        for (const FiniteLattice& l : range().scales)
            for (auto& a : all_maps(x.size(), l.size())) {
                const FuzzyMap m(x, l, a);
                const UpSetCheck c = is_fuzzy_up_set(m, true);
                bool all_cuts = true;
                const CutReport cuts = cut_family(m);
                for (ElementSet s : cuts.family.members())
                    all_cuts = all_cuts && is_up_set(x, s);
                disagreements += c.internal_error.has_value() || c.monotone != all_cuts;
                ++maps;
            }
    return {disagreements == 0, std::to_string(maps) + " maps, " + std::to_string(disagreements) + " disagreements"};
}

Outcome cut_class_quotient()
{
    std::size_t maps = 0, failures = 0;
    for (const Poset& x : range().spaces)
        for (const FiniteLattice& l : range().scales)
            for (auto& a : all_maps(x.size(), l.size())) {
                ++maps;
                try {
                    const ApproxQuotient q = approx_quotient(FuzzyMap(x, l, a));
                    const Poset target = reverse_inclusion_order(q.cuts.family);
                    failures += !is_order_isomorphism(q.quotient.order, target, q.iso.map) ||
                                !is_order_isomorphism(target, q.quotient.order, q.iso.inverse().map);
                } catch (const std::logic_error&) {
                    ++failures;
                }
            }
    return {failures == 0, std::to_string(maps) + " maps, " + std::to_string(failures) + " failures"};
}

Outcome closure_quotients_and_composition()
{
    std::size_t families = 0, pairs = 0, failures = 0;
    for (const FiniteLattice& l : range().scales)
        for (ElementSet s : enumerate_moore_families(l)) {
            ++families;
            const ClosureOperator c0 = closure_from_moore_family(l, s);
            const QuotientPoset q = quotient_by_closure(l.order(), c0);
            const Poset closed = l.order().induced(closed_elements(c0));
            failures += !is_order_isomorphism(q.order, closed, q.closed_iso.map);
            for (const ClosureOperator& c1 : enumerate_closure_operators(closed)) {
                ++pairs;
                try {
                    const Composition comp = compose_closures(l, c0, c1);
                    failures += !check_closure_axioms(l.order(), comp.composite.map()).all_pass() ||
                                !comp.quotient_iso.has_value();
                } catch (const Error&) {
                    ++failures;
                }
            }
        }
    return {failures == 0, std::to_string(families) + " Moore families, " + std::to_string(pairs) +
                               " composed pairs, " + std::to_string(failures) + " failures"};
}

Outcome restriction_instrumentation()
{
    std::size_t instances = 0, witnesses = 0, refutations = 0, mismatches = 0;
    std::set<std::string> refuted_examples;
    for (const Poset& x : range().spaces)
        for (const FiniteLattice& l : range().scales) {
            const RealizablePoset r = enumerate_realizable_families(x, l, RealizationMode::oracle);
            for (std::size_t i = 0; i < r.families.size(); ++i) {
                const FuzzyMap& mu = *r.provenance[i].witness;
                const auto& members = r.families[i].members();
                std::vector<ElementSet> free;
                for (ElementSet s : members)
                    if (s != x.all())
                        free.push_back(s);
                for (std::size_t mask = 0; mask < (std::size_t{1} << free.size()); ++mask) {
                    std::vector<ElementSet> t{x.all()};
                    for (std::size_t k = 0; k < free.size(); ++k)
                        if (mask >> k & 1)
                            t.push_back(free[k]);
                    const SetFamily tf(x, t);
                    if (!tf.intersection_closed())
                        continue;
                    ++instances;
                    const RestrictionResult res = restrict_cut_family(mu, tf);
                    const bool realizable = r.find(tf.sorted_members()).has_value();
                    if (const auto* w = std::get_if<FuzzyMap>(&res.outcome)) {
                        ++witnesses;
                        mismatches += !verifies_as_witness(*w, tf) || !realizable;
                    } else {
                        ++refutations;
                        mismatches += realizable;
                        if (refuted_examples.size() < 2)
                            refuted_examples.insert(tf.name());
                    }
                }
            }
        }
    // The antichain fixture: witness plus the inflation failure of the candidate.
    const RestrictionResult d1 = restrict_cut_family(fixtures::antichain_mu0(), fixtures::antichain_t0());
    const bool d1_witness = std::holds_alternative<FuzzyMap>(d1.outcome) &&
                            verifies_as_witness(std::get<FuzzyMap>(d1.outcome), fixtures::antichain_t0());
    const auto& inf = d1.diagnostic.report.inflationary;
    const bool d1_report = inf && d1.diagnostic.carrier.member(inf->p) ==
                                      fixtures::antichain_space().subset(std::vector<std::string>{"a", "b"});
    std::ostringstream out;
    out << instances << " instances, " << witnesses << " witnesses, " << refutations << " oracle-checked refutations, "
        << mismatches << " mismatches; antichain fixture " << (d1_witness && d1_report ? "ok" : "FAILED");
    return {mismatches == 0 && d1_witness && d1_report, out.str()};
}

Outcome completeness_criterion()
{
    std::size_t pairs = 0, disagreements = 0, trivial = 0;
    for (const Poset& x : range().spaces)
        for (const FiniteLattice& l : range().scales) {
            ++pairs;
            const CompletenessDecision d = quotient_is_complete_lattice(x, l, true);
            disagreements += d.complete != *d.direct;
            if (l.size() == 1)
                trivial += d.complete && *d.direct;
        }
    const CompletenessDecision negative =
        quotient_is_complete_lattice(antichain_poset({"a", "b"}), as_lattice(chain_poset({"0", "1"})), true);
    const bool negative_ok = !negative.complete && negative.direct == false && negative.realizable == 4;
    return {disagreements == 0 && negative_ok && trivial == range().spaces.size(),
            std::to_string(pairs) + " pairs, " + std::to_string(disagreements) + " disagreements, " +
                std::to_string(trivial) + " single-point scales complete, 2-antichain/2-chain " +
                (negative_ok ? "incomplete" : "WRONG")};
}

Outcome block_union_embedding()
{
    std::size_t posets = 0, closures = 0, failures = 0;
    for (const Poset& x : labeled_posets_up_to(4)) {
        ++posets;
        for (const ClosureOperator& c : enumerate_closure_operators(x)) {
            ++closures;
            failures += !embed_upset_quotient(x, c).all_pass();
        }
    }
    return {failures == 0, std::to_string(posets) + " posets, " + std::to_string(closures) + " closure operators, " +
                               std::to_string(failures) + " failures"};
}

Outcome interval_theorem()
{
    const Poset x0 = fixtures::upset_quotient_space();
    const IntervalReport ex = interval_isomorphism(x0, fixtures::upset_quotient_closure(),
                                                   family_lattice(enumerate_up_sets(x0)).lattice());
    if (!ex.verified())
        return {false, "example instance: " + ex.counterexample.value_or("not verified")};
    std::size_t instances = 0, failures = 0;
    std::string first;
    for (const Poset& x : range().spaces) {
        const Poset fx_order = reverse_inclusion_order(enumerate_up_sets(x));
        const auto closures = enumerate_closure_operators(x);
        for (const FiniteLattice& l : range().scales) {
            if (l.size() < fx_order.size() || !find_closure_for_target(l, fx_order))
                continue;
            for (const ClosureOperator& c : closures) {
                ++instances;
                const IntervalReport r = interval_isomorphism(x, c, l);
                if (!r.verified()) {
                    ++failures;
                    if (first.empty())
                        first = r.counterexample.value_or("not verified");
                }
            }
        }
    }
    return {failures == 0, "example verified (" + std::to_string(ex.interval.size()) + "-family interval); " +
                               std::to_string(instances) + " in-range instances, " + std::to_string(failures) +
                               " failures" + (first.empty() ? "" : " (" + first + ")")};
}

Outcome tooling(const std::string& cli, const std::string& fixture_dir)
{
    std::size_t docs = 0;
    for (const auto& entry : fs::recursive_directory_iterator(fixture_dir)) {
        if (!entry.is_regular_file())
            continue;
        const Document d = load_document(entry.path().string());
        if (!(parse_document(emit_document(d)) == d))
            return {false, "round trip differs for " + entry.path().string()};
        ++docs;
    }
    const Poset x = fixtures::upset_quotient_space();
    const std::string dot = emit_dot(x);
    if (dot != emit_dot(fixtures::upset_quotient_space()))
        return {false, "diagram output not stable"};
    const std::string chain_dot = emit_dot(chain_poset({"x", "y"}));
    if (chain_dot != "digraph hasse {\n  rankdir=BT;\n  node [shape=circle];\n  \"x\";\n  \"y\";\n  \"x\" -> \"y\";\n}\n")
        return {false, "2-chain diagram differs"};

    const std::string f = fixture_dir + "/";
    struct Case {
        std::string args;
        int code;
    };
    const std::vector<Case> cases{
        {"quotient-complete --space " + f + "upset_quotient/space.pos --scale " + f + "chain_embedding/l1.lat", 0},
        {"representable --family " + f + "representability/r.fam --space " + f + "representability/space.pos --scale " +
             f + "representability/scale.lat",
         0},
        {"restrict --map " + f + "antichain_restriction/mu0.map --family " + f + "antichain_restriction/t0.fam", 0},
        {"embed --space " + f + "upset_quotient/space.pos --closure " + f + "upset_quotient/closure.map", 0},
        {"birkhoff --scale " + f + "chain_embedding/l1.lat --sub " + f + "chain_embedding/l2.lat", 1},
        {"representable --family " + f + "chain_embedding/u.fam --space " + f + "chain_embedding/space.pos --scale " + f +
             "antichain_restriction/scale.lat",
         1},
        {"fixtures --dir " + f, 0},
        {"upsets", 2},
        {"no-such-command", 2},
        {"upsets --space " + f + "missing.pos", 2},
        {"cuts --map " + f + "antichain_restriction/t0.fam", 2},
    };
    for (const Case& c : cases) {
        const int status = std::system((cli + " " + c.args + " >/dev/null 2>&1").c_str());
        const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        if (code != c.code)
            return {false, "`" + c.args + "` exited " + std::to_string(code) + ", expected " + std::to_string(c.code)};
    }
    return {true, std::to_string(docs) + " documents round-trip, diagrams stable, " + std::to_string(cases.size()) +
                      " CLI cases"};
}

} // namespace

int main(int argc, char** argv)
{
    if (argc < 3) {
        std::cerr << "usage: acceptance CLI FIXTURE_DIR\n";
        return 2;
    }
    const std::string cli = argv[1];
    const std::string dir = argv[2];
    struct Criterion {
        const char* name;
        double limit;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"up-set quotient example", 1, upset_quotient_example},
        {"cut-family representability example", 5, representability_example},
        {"chain embedding example", 10, chain_embedding_example},
        {"up-set maps have up-set cuts", 60, upset_cut_equivalence},
        {"cut classes match the cut family", 60, cut_class_quotient},
        {"closure quotients and composition", 60, closure_quotients_and_composition},
        {"cut-family restriction", 120, restriction_instrumentation},
        {"quotient completeness criterion", 120, completeness_criterion},
        {"block-union embedding", 60, block_union_embedding},
        {"interval isomorphism", 120, interval_theorem},
        {"documents, diagrams and exit codes", 10, [&] { return tooling(cli, dir); }},
    };
    int failed = 0;
    for (const Criterion& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool pass = o.pass && secs <= c.limit;
        failed += !pass;
        std::cout << (pass ? "PASS" : "FAIL") << "  " << c.name << ": " << o.detail << " [" << std::fixed
                  << std::setprecision(2) << secs << " s, limit " << std::setprecision(0) << c.limit << " s]"
                  << std::endl;
    }
    return failed ? 1 : 0;
}
