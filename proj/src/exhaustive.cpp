#include "lfuzzy/exhaustive.hpp"

#include "lfuzzy/kernels.hpp"

namespace lfuzzy {

namespace {

std::vector<Poset> orders(std::size_t n, bool letters)
{
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
        names.push_back(letters ? std::string(1, static_cast<char>('a' + i)) : std::to_string(i));
    std::vector<Poset> out;
    for (auto& up : kernels::parallel::labeled_partial_orders(n))
        out.push_back(Poset::from_up_sets(names, std::move(up)));
    return out;
}

} // namespace

std::vector<Poset> labeled_posets(std::size_t n) { return orders(n, true); }

std::vector<Poset> labeled_posets_up_to(std::size_t n, bool with_empty)
{
    std::vector<Poset> out;
    for (std::size_t k = with_empty ? 0 : 1; k <= n; ++k)
        for (auto& p : labeled_posets(k))
            out.push_back(std::move(p));
    return out;
}

std::vector<FiniteLattice> labeled_lattices_up_to(std::size_t n)
{
    std::vector<FiniteLattice> out;
    for (std::size_t k = 1; k <= n; ++k)
        for (const Poset& p : orders(k, false))
            if (is_lattice(p))
                out.push_back(as_lattice(p));
    return out;
}

} // namespace lfuzzy
