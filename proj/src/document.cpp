#include "lfuzzy/document.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

namespace lfuzzy {

const char* to_string(DocumentKind k)
{
    switch (k) {
    case DocumentKind::poset: return "poset";
    case DocumentKind::lattice: return "lattice";
    case DocumentKind::family: return "family";
    case DocumentKind::map: return "map";
    }
    return "unknown";
}

namespace {

std::vector<std::string> split_words(std::string_view line)
{
    std::vector<std::string> out;
    std::istringstream in{std::string(line)};
    std::string w;
    while (in >> w)
        out.push_back(w);
    return out;
}

bool ordered(DocumentKind k) { return k == DocumentKind::poset || k == DocumentKind::lattice; }

[[noreturn]] void syntax(std::size_t line, const std::string& what)
{
    throw ParseError(ErrorKind::syntax_error, line, what);
}

[[noreturn]] void semantic(std::size_t line, const std::string& what)
{
    throw ParseError(ErrorKind::semantic_error, line, what);
}

} // namespace

Document parse_document(std::string_view text)
{
    Document d;
    bool typed = false;
    bool have_elements = false;
    std::size_t lineno = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        auto words = split_words(raw);
        if (words.empty())
            continue;
        const std::string head = words.front();
        words.erase(words.begin());
        if (!typed) {
            if (head != "type")
                syntax(lineno, "expected `type` before `" + head + "`");
            if (words.size() != 1)
                syntax(lineno, "`type` takes one argument");
            if (words[0] == "poset")
                d.kind = DocumentKind::poset;
            else if (words[0] == "lattice")
                d.kind = DocumentKind::lattice;
            else if (words[0] == "family")
                d.kind = DocumentKind::family;
            else if (words[0] == "map")
                d.kind = DocumentKind::map;
            else
                syntax(lineno, "unknown document type `" + words[0] + "`");
            typed = true;
            d.lines.type = lineno;
            continue;
        }
        auto allowed = [&](bool ok) {
            if (!ok)
                syntax(lineno, "`" + head + "` is not allowed in a " + to_string(d.kind) + " document");
        };
        if (head == "type") {
            syntax(lineno, "duplicate `type`");
        } else if (head == "elements") {
            allowed(ordered(d.kind));
            if (have_elements)
                syntax(lineno, "duplicate `elements`");
            have_elements = true;
            d.elements = std::move(words);
            d.lines.elements = lineno;
        } else if (head == "cover") {
            allowed(ordered(d.kind));
            if (words.size() != 2)
                syntax(lineno, "`cover` takes two names");
            d.covers.emplace_back(words[0], words[1]);
            d.lines.covers.push_back(lineno);
        } else if (head == "set") {
            allowed(d.kind == DocumentKind::family);
            d.sets.push_back(std::move(words));
            d.lines.sets.push_back(lineno);
        } else if (head == "pair") {
            allowed(d.kind == DocumentKind::map);
            if (words.size() != 2)
                syntax(lineno, "`pair` takes two names");
            d.pairs.emplace_back(words[0], words[1]);
            d.lines.pairs.push_back(lineno);
        } else if (head == "space" || head == "scale") {
            allowed(d.kind == DocumentKind::map || (head == "space" && d.kind == DocumentKind::family));
            if (words.size() != 1)
                syntax(lineno, "`" + head + "` takes one path");
            auto& slot = head == "space" ? d.space : d.scale;
            if (slot)
                syntax(lineno, "duplicate `" + head + "`");
            slot = words[0];
        } else {
            syntax(lineno, "unknown directive `" + head + "`");
        }
    }
    if (!typed)
        syntax(0, "empty document");
    return d;
}

std::string emit_document(const Document& d)
{
    std::ostringstream out;
    out << "type " << to_string(d.kind) << '\n';
    if (d.space)
        out << "space " << *d.space << '\n';
    if (d.scale)
        out << "scale " << *d.scale << '\n';
    if (ordered(d.kind)) {
        out << "elements";
        for (const auto& e : d.elements)
            out << ' ' << e;
        out << '\n';
    }
    for (const auto& [a, b] : d.covers)
        out << "cover " << a << ' ' << b << '\n';
    for (const auto& s : d.sets) {
        out << "set";
        for (const auto& e : s)
            out << ' ' << e;
        out << '\n';
    }
    for (const auto& [x, p] : d.pairs)
        out << "pair " << x << ' ' << p << '\n';
    return out.str();
}

Document load_document(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::fixture_missing, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_document(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(e.kind(), e.line(), path + ": " + e.what());
    }
}

Poset to_poset(const Document& d)
{
    if (!ordered(d.kind))
        semantic(d.lines.type, std::string("expected a poset document, got ") + to_string(d.kind));
    std::unordered_set<std::string> seen;
    for (const auto& e : d.elements) {
        if (!is_valid_name(e))
            semantic(d.lines.elements, "invalid element name `" + e + "`");
        if (!seen.insert(e).second)
            semantic(d.lines.elements, "duplicate element `" + e + "`");
    }
    for (std::size_t i = 0; i < d.covers.size(); ++i) {
        const std::size_t line = i < d.lines.covers.size() ? d.lines.covers[i] : 0;
        for (const auto& n : {d.covers[i].first, d.covers[i].second})
            if (!seen.count(n))
                semantic(line, "unknown element `" + n + "`");
    }
    try {
        return build_poset(d.elements, d.covers);
    } catch (const Error& e) {
        semantic(0, e.what());
    }
}

FiniteLattice to_lattice(const Document& d)
{
    const Poset p = to_poset(d);
    try {
        return as_lattice(p);
    } catch (const Error& e) {
        semantic(0, e.what());
    }
}

SetFamily to_family(const Document& d, const Poset& base)
{
    if (d.kind != DocumentKind::family)
        semantic(d.lines.type, std::string("expected a family document, got ") + to_string(d.kind));
    std::vector<ElementSet> members;
    for (std::size_t i = 0; i < d.sets.size(); ++i) {
        const std::size_t line = i < d.lines.sets.size() ? d.lines.sets[i] : 0;
        ElementSet s;
        for (const auto& n : d.sets[i]) {
            const auto idx = base.find(n);
            if (!idx)
                semantic(line, "unknown element `" + n + "`");
            if (s.contains(*idx))
                semantic(line, "element `" + n + "` repeated in a set");
            s.insert(*idx);
        }
        for (std::size_t j = 0; j < members.size(); ++j)
            if (members[j] == s)
                semantic(line, "duplicate member " + base.set_name(s));
        members.push_back(s);
    }
    return SetFamily(base, std::move(members));
}

FuzzyMap to_map(const Document& d, const Poset& space, const FiniteLattice& scale)
{
    if (d.kind != DocumentKind::map)
        semantic(d.lines.type, std::string("expected a map document, got ") + to_string(d.kind));
    std::vector<std::size_t> assign(space.size(), 0);
    ElementSet seen;
    for (std::size_t i = 0; i < d.pairs.size(); ++i) {
        const std::size_t line = i < d.lines.pairs.size() ? d.lines.pairs[i] : 0;
        const auto x = space.find(d.pairs[i].first);
        if (!x)
            semantic(line, "unknown element `" + d.pairs[i].first + "`");
        const auto v = scale.order().find(d.pairs[i].second);
        if (!v)
            semantic(line, "unknown scale element `" + d.pairs[i].second + "`");
        if (seen.contains(*x))
            semantic(line, "duplicate entry for `" + d.pairs[i].first + "`");
        seen.insert(*x);
        assign[*x] = *v;
    }
    if (seen != space.all())
        semantic(0, "map is not total; missing " + space.set_name(space.all() - seen));
    return FuzzyMap(space, scale, std::move(assign));
}

ClosureOperator to_closure(const Document& d, const Poset& space)
{
    if (d.kind != DocumentKind::map)
        semantic(d.lines.type, std::string("expected a map document, got ") + to_string(d.kind));
    std::vector<std::size_t> map(space.size(), 0);
    ElementSet seen;
    for (std::size_t i = 0; i < d.pairs.size(); ++i) {
        const std::size_t line = i < d.lines.pairs.size() ? d.lines.pairs[i] : 0;
        const auto x = space.find(d.pairs[i].first);
        const auto y = space.find(d.pairs[i].second);
        if (!x || !y)
            semantic(line, "unknown element in `pair " + d.pairs[i].first + " " + d.pairs[i].second + "`");
        if (seen.contains(*x))
            semantic(line, "duplicate entry for `" + d.pairs[i].first + "`");
        seen.insert(*x);
        map[*x] = *y;
    }
    if (seen != space.all())
        semantic(0, "closure is not total; missing " + space.set_name(space.all() - seen));
    auto result = validate_closure(space, std::move(map));
    if (auto* v = std::get_if<ClosureViolation>(&result)) {
        std::string where = space.name(v->witness.p);
        if (v->witness.q)
            where += "," + space.name(*v->witness.q);
        semantic(0, std::string("not a closure operator: axiom (") + v->axiom + ") fails at " + where);
    }
    return std::get<ClosureOperator>(std::move(result));
}

Document from_poset(const Poset& p)
{
    Document d;
    d.kind = DocumentKind::poset;
    d.elements = p.names();
    d.covers = p.cover_names();
    return d;
}

Document from_lattice(const FiniteLattice& l)
{
    Document d = from_poset(l.order());
    d.kind = DocumentKind::lattice;
    return d;
}

Document from_family(const SetFamily& f)
{
    Document d;
    d.kind = DocumentKind::family;
    for (ElementSet s : f.members())
        d.sets.push_back(f.base().names_of(s));
    return d;
}

Document from_map(const FuzzyMap& m)
{
    Document d;
    d.kind = DocumentKind::map;
    d.pairs = m.pairs();
    return d;
}

} // namespace lfuzzy
