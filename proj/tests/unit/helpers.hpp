#pragma once

#include "lfuzzy/upset_quotient.hpp"

#include <initializer_list>
#include <string>
#include <vector>

inline lfuzzy::SetFamily family_of(const lfuzzy::Poset& base, std::vector<std::vector<std::string>> sets)
{
    std::vector<lfuzzy::ElementSet> m;
    for (const auto& s : sets)
        m.push_back(base.subset(s));
    return lfuzzy::SetFamily(base, std::move(m));
}

// 0 < a, b, c < 1
inline lfuzzy::FiniteLattice m3()
{
    return lfuzzy::as_lattice(lfuzzy::build_poset(
        {"0", "a", "b", "c", "1"}, {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}}));
}

// 0 < a, b < 1
inline lfuzzy::FiniteLattice b2()
{
    return lfuzzy::as_lattice(lfuzzy::build_poset({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}}));
}

inline lfuzzy::FiniteLattice chain_lattice(std::size_t n)
{
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
        names.push_back(std::to_string(i));
    return lfuzzy::as_lattice(lfuzzy::chain_poset(names));
}
