#include "lfuzzy/dot.hpp"

#include <sstream>

namespace lfuzzy {

namespace {

std::string quoted(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + '"';
}

} // namespace

std::string emit_dot(const Poset& p)
{
    std::ostringstream out;
    out << "digraph hasse {\n  rankdir=BT;\n  node [shape=circle];\n";
    for (const auto& n : p.names())
        out << "  " << quoted(n) << ";\n";
    for (const auto& [lo, hi] : p.covers())
        out << "  " << quoted(p.name(lo)) << " -> " << quoted(p.name(hi)) << ";\n";
    out << "}\n";
    return out.str();
}

std::string emit_dot(const FiniteLattice& l) { return emit_dot(l.order()); }

std::string emit_dot(const QuotientPoset& q) { return emit_dot(q.order); }

} // namespace lfuzzy
