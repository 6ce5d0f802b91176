#include "lfuzzy/document.hpp"
#include "lfuzzy/dot.hpp"
#include "lfuzzy/fixtures.hpp"
#include "lfuzzy/kernels.hpp"
#include "lfuzzy/upset_quotient.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace lfuzzy;
using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

#ifndef LFUZZY_FIXTURE_DIR
#define LFUZZY_FIXTURE_DIR "fixtures"
#endif

namespace {

constexpr int exit_holds = 0;
constexpr int exit_fails = 1;
constexpr int exit_usage = 2;

struct Options {
    std::string space, scale, family, map, closure, witness_out, sub;
    std::string dir = LFUZZY_FIXTURE_DIR;
    std::string format = "text";
    std::size_t cap = default_cap;
    bool oracle = false;
    std::vector<std::string> files;
};

// An input the user gave us is unusable.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Report {
    json body = json::object();
    std::vector<std::string> text;
    int code = exit_holds;
};

json names_json(const Poset& p, ElementSet s)
{
    json a = json::array();
    for (const auto& n : p.names_of(s))
        a.push_back(n);
    return a;
}

json family_json(const SetFamily& f)
{
    json a = json::array();
    for (ElementSet s : f.members())
        a.push_back(names_json(f.base(), s));
    return a;
}

json map_json(const FuzzyMap& m)
{
    json o = json::object();
    for (const auto& [x, p] : m.pairs())
        o[x] = p;
    return o;
}

json closure_json(const Poset& carrier, const std::vector<std::size_t>& map)
{
    json o = json::object();
    for (std::size_t i = 0; i < map.size(); ++i)
        o[carrier.name(i)] = carrier.name(map[i]);
    return o;
}

json iso_json(const Poset& from, const Poset& to, const IsoWitness& w)
{
    json o = json::object();
    for (std::size_t i = 0; i < w.map.size(); ++i)
        o[from.name(i)] = to.name(w.map[i]);
    return o;
}

json axiom_json(const Poset& carrier, const AxiomReport& r)
{
    auto one = [&](const std::optional<AxiomWitness>& w) {
        json o = json::object();
        o["holds"] = !w.has_value();
        if (w) {
            o["at"] = carrier.name(w->p);
            if (w->q)
                o["with"] = carrier.name(*w->q);
        }
        return o;
    };
    json o = json::object();
    o["inflationary"] = one(r.inflationary);
    o["monotone"] = one(r.monotone);
    o["idempotent"] = one(r.idempotent);
    return o;
}

std::string axiom_text(const Poset& carrier, const AxiomReport& r)
{
    std::string out;
    auto one = [&](const char* label, const std::optional<AxiomWitness>& w) {
        out += std::string("  ") + label + ": ";
        if (!w) {
            out += "holds\n";
            return;
        }
        out += "fails at " + carrier.name(w->p);
        if (w->q)
            out += " with " + carrier.name(*w->q);
        out += "\n";
    };
    one("(a) inflationary", r.inflationary);
    one("(b) monotone", r.monotone);
    one("(c) idempotent", r.idempotent);
    out.pop_back();
    return out;
}

std::string require(const std::string& value, const char* flag)
{
    if (value.empty())
        throw UsageError(std::string("missing required ") + flag);
    return value;
}

// Paths named inside a document are relative to that document.
std::string beside(const std::string& doc_path, const std::string& rel)
{
    const fs::path p(rel);
    if (p.is_absolute())
        return rel;
    return (fs::path(doc_path).parent_path() / p).string();
}

Poset load_space(const Options& o) { return to_poset(load_document(require(o.space, "--space"))); }
FiniteLattice load_scale(const Options& o) { return to_lattice(load_document(require(o.scale, "--scale"))); }

struct LoadedMap {
    FuzzyMap map;
    std::string space_path;
    std::string scale_path;
};

LoadedMap load_map(const Options& o)
{
    const std::string path = require(o.map, "--map");
    const Document d = load_document(path);
    std::string space = o.space, scale = o.scale;
    if (space.empty() && d.space)
        space = beside(path, *d.space);
    if (scale.empty() && d.scale)
        scale = beside(path, *d.scale);
    const Poset x = to_poset(load_document(require(space, "--space (or a `space` line in the map)")));
    const FiniteLattice l = to_lattice(load_document(require(scale, "--scale (or a `scale` line in the map)")));
    return LoadedMap{to_map(d, x, l), space, scale};
}

SetFamily load_family(const Options& o, const Poset& base)
{
    return to_family(load_document(require(o.family, "--family")), base);
}

void write_witness(const Options& o, const FuzzyMap& m, const std::string& space, const std::string& scale)
{
    if (o.witness_out.empty())
        return;
    Document d = from_map(m);
    if (!space.empty())
        d.space = fs::absolute(space).lexically_normal().string();
    if (!scale.empty())
        d.scale = fs::absolute(scale).lexically_normal().string();
    std::ofstream out(o.witness_out);
    if (!out)
        throw UsageError("cannot write " + o.witness_out);
    out << emit_document(d);
}

std::string map_text(const FuzzyMap& m)
{
    std::string out;
    for (const auto& [x, p] : m.pairs())
        out += "  " + x + " -> " + p + "\n";
    if (!out.empty())
        out.pop_back();
    return out;
}

// Monotone-map oracle answer for "some map has exactly this cut family".
std::optional<bool> oracle_realizes(const SetFamily& f, const Poset& x, const FiniteLattice& l, std::size_t cap)
{
    if (kernels::parallel::count_monotone_maps(x, l.order(), cap) > cap)
        return std::nullopt;
    const auto want = f.sorted_members();
    for (const auto& r : kernels::parallel::realizable_families(x, l.order()))
        if (r.members == want)
            return true;
    return false;
}

void representation_report(Report& r, const Options& o, const Representation& rep, const SetFamily& f,
                           const std::string& space_path, const std::string& scale_path)
{
    if (const auto* bad = std::get_if<Refutation>(&rep)) {
        r.code = exit_fails;
        r.body["holds"] = false;
        r.body["refutation"] = {{"reason", to_string(bad->reason)}, {"detail", bad->detail}};
        r.text.push_back(std::string("refuted (") + to_string(bad->reason) + "): " + bad->detail);
        return;
    }
    const FuzzyMap& w = std::get<FuzzyMap>(rep);
    if (!verifies_as_witness(w, f))
        throw std::logic_error("witness failed re-verification");
    r.body["holds"] = true;
    r.body["witness"] = map_json(w);
    r.body["witness_verified"] = true;
    r.text.push_back("witness (cuts recomputed and equal to the family):");
    r.text.push_back(map_text(w));
    write_witness(o, w, space_path, scale_path);
}

Report cmd_validate(const Options& o)
{
    Report r;
    if (!o.closure.empty()) {
        const Poset x = load_space(o);
        const Document d = load_document(o.closure);
        if (d.kind != DocumentKind::map)
            throw UsageError("--closure expects a map document");
        std::vector<std::size_t> map(x.size(), 0);
        ElementSet seen;
        for (const auto& [a, b] : d.pairs) {
            map[x.index(a)] = x.index(b);
            seen.insert(x.index(a));
        }
        if (seen != x.all())
            throw UsageError("closure map is not total");
        const AxiomReport ax = check_closure_axioms(x, map);
        r.body["kind"] = "closure";
        r.body["valid"] = ax.all_pass();
        r.body["axioms"] = axiom_json(x, ax);
        r.text.push_back(ax.all_pass() ? "valid closure operator" : "not a closure operator");
        r.text.push_back(axiom_text(x, ax));
        r.code = ax.all_pass() ? exit_holds : exit_fails;
        return r;
    }
    if (o.files.empty())
        throw UsageError("validate needs a document path or --closure");
    json docs = json::array();
    for (const auto& path : o.files) {
        const Document d = load_document(path);
        json item = {{"path", path}, {"kind", to_string(d.kind)}};
        std::string line = path + ": " + to_string(d.kind);
        switch (d.kind) {
        case DocumentKind::poset: {
            const Poset p = to_poset(d);
            item["elements"] = p.size();
            item["covers"] = p.covers().size();
            line += ", " + std::to_string(p.size()) + " elements";
            break;
        }
        case DocumentKind::lattice: {
            const FiniteLattice l = to_lattice(d);
            const auto laws = check_lattice_laws(l);
            if (laws)
                throw std::logic_error(*laws);
            item["elements"] = l.size();
            item["distributive"] = is_distributive(l);
            line += ", " + std::to_string(l.size()) + " elements, " +
                    (is_distributive(l) ? "distributive" : "not distributive");
            break;
        }
        case DocumentKind::family: {
            std::string base = o.space;
            if (base.empty() && d.space)
                base = beside(path, *d.space);
            const SetFamily f = to_family(d, to_poset(load_document(require(base, "--space"))));
            item["members"] = f.size();
            item["cut_like"] = f.cut_like();
            item["up_sets"] = !f.first_non_up_set().has_value();
            line += ", " + std::to_string(f.size()) + " members" + (f.cut_like() ? ", cut-like" : "");
            break;
        }
        case DocumentKind::map: {
            Options mo = o;
            mo.map = path;
            const LoadedMap m = load_map(mo);
            const bool up = is_fuzzy_up_set(m.map, false).monotone;
            item["up_set"] = up;
            line += up ? ", monotone" : ", not monotone";
            break;
        }
        }
        item["valid"] = true;
        docs.push_back(item);
        r.text.push_back(line);
    }
    r.body["documents"] = docs;
    return r;
}

Report cmd_upsets(const Options& o)
{
    Report r;
    const Poset x = load_space(o);
    const SetFamily f = enumerate_up_sets(x, o.cap);
    r.body["count"] = f.size();
    r.body["up_sets"] = family_json(f);
    r.text.push_back(std::to_string(f.size()) + " up-sets");
    for (std::size_t i = 0; i < f.size(); ++i)
        r.text.push_back("  " + f.member_name(i));
    return r;
}

Report cmd_cuts(const Options& o)
{
    Report r;
    const LoadedMap m = load_map(o);
    const CutReport c = cut_family(m.map);
    const UpSetCheck up = is_fuzzy_up_set(m.map, true);
    if (up.internal_error)
        throw std::logic_error(*up.internal_error);
    const FiniteLattice& l = m.map.scale();
    json cuts = json::object();
    r.text.push_back("cuts:");
    for (std::size_t p = 0; p < l.size(); ++p) {
        cuts[l.name(p)] = names_json(m.map.space(), c.family.member(c.cut_of[p]));
        r.text.push_back("  " + l.name(p) + ": " + c.family.member_name(c.cut_of[p]));
    }
    r.body["cuts"] = cuts;
    r.body["family"] = family_json(c.family);
    r.text.push_back("cut family: " + c.family.name());
    r.body["up_set"] = up.monotone;
    if (up.non_up_set_cut) {
        r.body["non_up_set_cut"] = l.name(*up.non_up_set_cut);
        r.text.push_back("not an up-set map: the cut at " + l.name(*up.non_up_set_cut) + " is not an up-set");
        r.code = exit_fails;
    } else {
        r.text.push_back("up-set map (every cut is an up-set)");
    }
    const ApproxQuotient q = approx_quotient(m.map);
    json blocks = json::array();
    for (std::size_t b = 0; b < q.quotient.blocks.size(); ++b)
        blocks.push_back({{"block", names_json(l.order(), q.quotient.blocks[b])},
                          {"cut", names_json(m.map.space(), q.cuts.family.member(q.iso.map[b]))}});
    r.body["classes"] = blocks;
    r.text.push_back(std::to_string(q.quotient.blocks.size()) + " classes of equal cuts, isomorphic to the cut family");
    return r;
}

Report cmd_representable(const Options& o)
{
    Report r;
    const Poset x = load_space(o);
    const FiniteLattice l = load_scale(o);
    const SetFamily f = load_family(o, x);
    const Representation rep = representable(f, x, l, o.cap);
    representation_report(r, o, rep, f, o.space, o.scale);
    if (o.oracle) {
        const auto agree = oracle_realizes(f, x, l, o.cap);
        r.body["oracle"] = agree ? json(*agree) : json(nullptr);
        r.text.push_back(agree ? std::string("oracle: ") + (*agree ? "realizable" : "not realizable")
                               : "oracle: skipped, too many monotone maps");
        if (agree && *agree != std::holds_alternative<FuzzyMap>(rep))
            throw std::logic_error("representability disagrees with the monotone-map oracle");
    }
    return r;
}

Report cmd_restrict(const Options& o)
{
    Report r;
    const LoadedMap m = load_map(o);
    const SetFamily t = load_family(o, m.map.space());
    const RestrictionResult res = restrict_cut_family(m.map, t, o.cap);
    representation_report(r, o, res.outcome, t, m.space_path, m.scale_path);
    const FamilyLattice& fl = res.diagnostic.carrier;
    const Poset& carrier = fl.lattice().order();
    json cand = json::object();
    for (std::size_t i = 0; i < res.diagnostic.map.size(); ++i)
        cand[carrier.name(i)] = carrier.name(res.diagnostic.map[i]);
    r.body["diagnostic"] = {{"candidate", cand},
                            {"axioms", axiom_json(carrier, res.diagnostic.report)},
                            {"closure_operator", res.diagnostic.report.all_pass()}};
    r.text.push_back(std::string("diagnostic: restriction candidate on the cut family is ") +
                     (res.diagnostic.report.all_pass() ? "a closure operator" : "not a closure operator"));
    r.text.push_back(axiom_text(carrier, res.diagnostic.report));
    if (o.oracle) {
        const auto agree = oracle_realizes(t, m.map.space(), m.map.scale(), o.cap);
        r.body["oracle"] = agree ? json(*agree) : json(nullptr);
        if (agree && *agree != std::holds_alternative<FuzzyMap>(res.outcome))
            throw std::logic_error("restriction disagrees with the monotone-map oracle");
    }
    return r;
}

Report cmd_quotient_complete(const Options& o)
{
    Report r;
    const Poset x = load_space(o);
    const FiniteLattice l = load_scale(o);
    const CompletenessDecision d = quotient_is_complete_lattice(x, l, o.oracle, o.cap);
    r.body["complete"] = d.complete;
    if (d.single_point_scale) {
        r.body["certificate"] = "single-point scale";
        r.text.push_back("complete: the scale has one element");
    } else if (d.closure) {
        r.body["certificate"] = {{"closure", closure_json(l.order(), d.closure->closure.map())},
                                 {"closed", names_json(l.order(), d.closure->moore_family)}};
        r.text.push_back("complete: closure operator with quotient isomorphic to the up-sets of the space");
        for (std::size_t p = 0; p < l.size(); ++p)
            r.text.push_back("  " + l.name(p) + " -> " + l.name(d.closure->closure(p)));
    } else {
        r.body["certificate"] = "no Moore family of the scale matches the up-set lattice";
        r.text.push_back("not complete: no Moore family of the scale matches the up-set lattice");
    }
    if (d.direct) {
        r.body["direct"] = *d.direct;
        r.body["realizable_families"] = d.realizable;
        r.text.push_back("direct check over " + std::to_string(d.realizable) + " realizable families: " +
                         (*d.direct ? "complete" : "not complete"));
        if (d.direct_gap) {
            r.body["direct_gap"] = *d.direct_gap;
            r.text.push_back("  " + *d.direct_gap);
        }
        if (*d.direct != d.complete) {
            r.body["counterexample"] = "closure criterion and direct check disagree";
            r.text.push_back("counterexample: the closure criterion and the direct check disagree");
        }
    }
    r.code = d.complete && d.direct.value_or(true) ? exit_holds : exit_fails;
    return r;
}

json embedding_json(const EmbeddingReport& e)
{
    json m = json::array();
    for (std::size_t i = 0; i < e.source.size(); ++i) {
        ElementSet s;
        e.source.member(i).for_each([&](std::size_t b) { s |= e.quotient.blocks[b]; });
        m.push_back({{"from", names_json(e.quotient.order, e.source.member(i))},
                     {"to", names_json(e.image.base(), s)}});
    }
    return {{"blocks", e.quotient.order.names()},
            {"map", m},
            {"checks",
             {{"injective", e.injective},
              {"order_both_ways", e.order_both_ways},
              {"image_up_sets", e.image_up_sets},
              {"unions_closed", e.unions_closed},
              {"intersections_closed", e.intersections_closed},
              {"empty_to_empty", e.empty_to_empty},
              {"full_to_full", e.full_to_full}}}};
}

Report cmd_embed(const Options& o)
{
    Report r;
    const Poset x = load_space(o);
    const ClosureOperator c = to_closure(load_document(require(o.closure, "--closure")), x);
    const EmbeddingReport e = embed_upset_quotient(x, c, o.cap);
    r.body["holds"] = e.all_pass();
    r.body["embedding"] = embedding_json(e);
    std::string blocks;
    for (const auto& n : e.quotient.order.names())
        blocks += " " + n;
    r.text.push_back("blocks:" + blocks);
    for (std::size_t i = 0; i < e.source.size(); ++i)
        r.text.push_back("  " + e.source.member_name(i) + " -> " + e.image.base().set_name([&] {
                             ElementSet s;
                             e.source.member(i).for_each([&](std::size_t b) { s |= e.quotient.blocks[b]; });
                             return s;
                         }()));
    r.text.push_back(e.all_pass() ? "embedding checks pass" : "an embedding check fails");
    r.code = e.all_pass() ? exit_holds : exit_fails;
    return r;
}

Report cmd_birkhoff(const Options& o)
{
    Report r;
    const FiniteLattice l1 = load_scale(o);
    const FiniteLattice l2 = to_lattice(load_document(require(o.sub, "--sub")));
    const BirkhoffDriverReport b = birkhoff_embedding_driver(l1, l2, o.cap);
    r.body["closures_examined"] = b.closures_examined;
    r.body["degenerate"] = b.degenerate;
    if (b.closure_route) {
        const BirkhoffRepresentation r1 = birkhoff_representation(l1);
        r.body["closure_route"] = {{"closure", closure_json(r1.irreducible_order, b.closure_route->closure.map())},
                                   {"embedding", iso_json(l2.order(), l1.order(), b.closure_route->embedding)},
                                   {"bounds", b.closure_route->embedding.bounds},
                                   {"order", b.closure_route->embedding.order}};
        r.text.push_back("closure route: found after " + std::to_string(b.closures_examined) + " closure operators");
    } else {
        r.body["closure_route"] = nullptr;
        r.text.push_back("closure route: none among " + std::to_string(b.closures_examined) +
                         " closure operators on the meet-irreducibles");
    }
    if (b.direct_embedding) {
        r.body["direct_embedding"] = iso_json(l2.order(), l1.order(), *b.direct_embedding);
        r.text.push_back("direct bound-preserving embedding: exists");
        for (std::size_t i = 0; i < l2.size(); ++i)
            r.text.push_back("  " + l2.name(i) + " -> " + l1.name(b.direct_embedding->map[i]));
    } else {
        r.body["direct_embedding"] = nullptr;
        r.text.push_back("direct bound-preserving embedding: none");
    }
    if (b.degenerate)
        r.text.push_back("degenerate: the second lattice has one element");
    r.code = b.closure_route ? exit_holds : exit_fails;
    return r;
}

Report cmd_interval_iso(const Options& o)
{
    Report r;
    const Poset x = load_space(o);
    const FiniteLattice l = load_scale(o);
    const ClosureOperator c = to_closure(load_document(require(o.closure, "--closure")), x);
    IntervalReport ir;
    try {
        ir = interval_isomorphism(x, c, l, o.cap);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::precondition_unmet)
            throw;
        r.code = exit_fails;
        r.body["holds"] = false;
        r.body["precondition"] = false;
        r.body["detail"] = e.what();
        r.text.push_back(std::string("precondition unmet: ") + e.what());
        return r;
    }
    r.body["holds"] = ir.verified();
    r.body["precondition"] = true;
    r.body["image"] = family_json(ir.embedding.image);
    r.body["interval_size"] = ir.interval.size();
    r.body["quotient_side_size"] = ir.quotient_side.families.size();
    r.body["bridge_size"] = ir.bridge.size();
    r.body["interval_is_bridge"] = ir.interval_is_bridge;
    r.body["quotient_side_matches_bridge"] = ir.quotient_side_matches_bridge;
    if (ir.witness)
        r.body["witness"] = map_json(*ir.witness);
    r.body["counterexample"] = ir.counterexample ? json(*ir.counterexample) : json(nullptr);
    r.text.push_back("image family: " + ir.embedding.image.name());
    r.text.push_back("interval: " + std::to_string(ir.interval.size()) + " families; quotient side: " +
                     std::to_string(ir.quotient_side.families.size()) + "; subfamily poset: " +
                     std::to_string(ir.bridge.size()));
    if (ir.counterexample)
        r.text.push_back("counterexample: " + *ir.counterexample);
    else
        r.text.push_back("isomorphism verified in both directions");
    r.code = ir.verified() ? exit_holds : exit_fails;
    return r;
}

Report cmd_enumerate_closures(const Options& o)
{
    Report r;
    json list = json::array();
    auto emit = [&](const Poset& carrier, const std::vector<ClosureOperator>& all) {
        for (const auto& c : all) {
            list.push_back(closure_json(carrier, c.map()));
            std::string line = " ";
            for (std::size_t i = 0; i < c.size(); ++i)
                line += " " + carrier.name(i) + "->" + carrier.name(c(i));
            r.text.push_back(line);
        }
        r.text.insert(r.text.begin(), std::to_string(all.size()) + " closure operators");
    };
    if (!o.scale.empty()) {
        const FiniteLattice l = load_scale(o);
        emit(l.order(), enumerate_closure_operators(l, o.cap));
        if (o.oracle && enumerate_closure_operators(l.order(), o.cap).size() != list.size())
            throw std::logic_error("Moore-family and backtracking enumerations disagree");
    } else {
        const Poset x = load_space(o);
        emit(x, enumerate_closure_operators(x, o.cap));
    }
    r.body["count"] = list.size();
    r.body["closures"] = list;
    return r;
}

Report cmd_dot(const Options& o)
{
    Report r;
    std::string dot;
    if (!o.closure.empty()) {
        const Poset x = load_space(o);
        dot = emit_dot(quotient_by_closure(x, to_closure(load_document(o.closure), x)));
    } else if (!o.scale.empty()) {
        dot = emit_dot(load_scale(o));
    } else {
        dot = emit_dot(load_space(o));
    }
    r.body["dot"] = dot;
    dot.pop_back();
    r.text.push_back(dot);
    return r;
}

Report cmd_fixtures(const Options& o)
{
    Report r;
    json checks = json::array();
    std::size_t failed = 0;
    for (const auto& c : fixtures::run_fixtures(o.dir)) {
        checks.push_back({{"fixture", c.fixture},
                          {"check", c.name},
                          {"provenance", c.provenance},
                          {"passed", c.passed},
                          {"detail", c.detail}});
        r.text.push_back(std::string(c.passed ? "pass" : "FAIL") + "  " + c.fixture + ": " + c.name +
                         (c.detail.empty() ? "" : " (" + c.detail + ")"));
        failed += !c.passed;
    }
    r.body["checks"] = checks;
    r.body["failed"] = failed;
    r.code = failed ? exit_fails : exit_holds;
    return r;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"L-fuzzy up-set workbench"};
    app.require_subcommand(1);
    Options o;

    using Handler = Report (*)(const Options&);
    std::vector<std::pair<CLI::App*, Handler>> commands;
    auto command = [&](const char* name, const char* help, Handler h) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--cap", o.cap, "enumeration cap");
        commands.emplace_back(sub, h);
        return sub;
    };

    auto* validate = command("validate", "check documents, or a closure map with --space", cmd_validate);
    validate->add_option("files", o.files, "documents");
    validate->add_option("--space", o.space);
    validate->add_option("--scale", o.scale);
    validate->add_option("--closure", o.closure);

    command("upsets", "list the up-sets of a poset", cmd_upsets)->add_option("--space", o.space);

    auto* cuts = command("cuts", "cut family, up-set test and cut classes of a map", cmd_cuts);
    cuts->add_option("--map", o.map);
    cuts->add_option("--space", o.space);
    cuts->add_option("--scale", o.scale);

    auto* rep = command("representable", "decide whether a family is a cut family", cmd_representable);
    rep->add_option("--family", o.family);
    rep->add_option("--space", o.space);
    rep->add_option("--scale", o.scale);
    rep->add_option("--witness-out", o.witness_out);
    rep->add_flag("--oracle", o.oracle, "confirm with the monotone-map oracle");

    auto* restrict_cmd = command("restrict", "realize a subfamily of a map's cuts", cmd_restrict);
    restrict_cmd->add_option("--map", o.map);
    restrict_cmd->add_option("--family", o.family);
    restrict_cmd->add_option("--space", o.space);
    restrict_cmd->add_option("--scale", o.scale);
    restrict_cmd->add_option("--witness-out", o.witness_out);
    restrict_cmd->add_flag("--oracle", o.oracle, "confirm with the monotone-map oracle");

    auto* qc = command("quotient-complete", "is the cut-equivalence quotient a complete lattice", cmd_quotient_complete);
    qc->add_option("--space", o.space);
    qc->add_option("--scale", o.scale);
    qc->add_flag("--oracle", o.oracle, "also check the realizable families directly");

    auto* embed = command("embed", "block-union embedding of the quotient's up-sets", cmd_embed);
    embed->add_option("--space", o.space);
    embed->add_option("--closure", o.closure);

    auto* birk = command("birkhoff", "embed --sub into --scale through meet-irreducibles", cmd_birkhoff);
    birk->add_option("--scale", o.scale);
    birk->add_option("--sub", o.sub);

    auto* iv = command("interval-iso", "interval below the image family vs the quotient side", cmd_interval_iso);
    iv->add_option("--space", o.space);
    iv->add_option("--scale", o.scale);
    iv->add_option("--closure", o.closure);

    auto* ec = command("enumerate-closures", "all closure operators of --space or --scale", cmd_enumerate_closures);
    ec->add_option("--space", o.space);
    ec->add_option("--scale", o.scale);
    ec->add_flag("--oracle", o.oracle, "cross-check the two enumerations");

    auto* dot = command("dot", "Hasse diagram of --space, --scale, or --space/--closure", cmd_dot);
    dot->add_option("--space", o.space);
    dot->add_option("--scale", o.scale);
    dot->add_option("--closure", o.closure);

    command("fixtures", "run the bundled example checks", cmd_fixtures)->add_option("--dir", o.dir);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e) == 0 ? exit_holds : exit_usage;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    const bool as_json = o.format == "json";
    for (const auto& [sub, handler] : commands) {
        if (!sub->parsed())
            continue;
        try {
            Report r = handler(o);
            if (as_json) {
                json out = json::object();
                out["command"] = sub->get_name();
                out["exit"] = r.code;
                for (auto& [k, v] : r.body.items())
                    out[k] = v;
                std::cout << out.dump(2) << '\n';
            } else {
                for (const auto& line : r.text)
                    std::cout << line << '\n';
            }
            return r.code;
        } catch (const std::logic_error& e) {
            std::cerr << "internal error: " << e.what() << '\n';
            return exit_usage;
        } catch (const std::exception& e) {
            if (as_json)
                std::cout << json{{"command", sub->get_name()}, {"exit", exit_usage}, {"error", e.what()}}.dump(2)
                          << '\n';
            std::cerr << "error: " << e.what() << '\n';
            return exit_usage;
        }
    }
    return exit_usage;
}
