#pragma once

#include "lfuzzy/fuzzy.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lfuzzy {

enum class DocumentKind { poset, lattice, family, map };

const char* to_string(DocumentKind k);

/// One object per file. Line-oriented; '#' starts a comment.
///
///   type poset|lattice|family|map
///   elements n1 n2 ...      (poset, lattice)
///   cover a b               (poset, lattice; a < b)
///   set n1 n2 ...           (family; bare `set` is the empty set)
///   pair x p                (map)
///   space PATH / scale PATH (map; `space` also for family)
struct Document {
    DocumentKind kind = DocumentKind::poset;
    std::vector<std::string> elements;
    std::vector<NamePair> covers;
    std::vector<std::vector<std::string>> sets;
    std::vector<NamePair> pairs;
    std::optional<std::string> space;
    std::optional<std::string> scale;

    /// Source line of each record, parallel to the lists above; 0 when built in code.
    struct Lines {
        std::size_t type = 0;
        std::size_t elements = 0;
        std::vector<std::size_t> covers;
        std::vector<std::size_t> sets;
        std::vector<std::size_t> pairs;
    } lines;

    bool operator==(const Document& o) const
    {
        return kind == o.kind && elements == o.elements && covers == o.covers && sets == o.sets &&
               pairs == o.pairs && space == o.space && scale == o.scale;
    }
};

/// syntax_error or semantic_error with the offending line (0 if none applies).
class ParseError : public Error {
public:
    ParseError(ErrorKind kind, std::size_t line, const std::string& what)
        : Error(kind, line ? "line " + std::to_string(line) + ": " + what : what), line_(line)
    {
    }
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

Document parse_document(std::string_view text);
std::string emit_document(const Document& d);

/// Reads and parses a file; throws fixture_missing if it cannot be opened.
Document load_document(const std::string& path);

Poset to_poset(const Document& d);
/// Posets validated by as_lattice.
FiniteLattice to_lattice(const Document& d);
SetFamily to_family(const Document& d, const Poset& base);
FuzzyMap to_map(const Document& d, const Poset& space, const FiniteLattice& scale);
/// A map document from the space to itself, checked against the closure axioms.
ClosureOperator to_closure(const Document& d, const Poset& space);

Document from_poset(const Poset& p);
Document from_lattice(const FiniteLattice& l);
Document from_family(const SetFamily& f);
Document from_map(const FuzzyMap& m);

} // namespace lfuzzy
