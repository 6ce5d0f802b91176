#include "lfuzzy/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <map>

#include <omp.h>

namespace lfuzzy::kernels {

bool family_less(const std::vector<ElementSet>& a, const std::vector<ElementSet>& b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    return lex_less(a, b);
}

std::vector<ElementSet> cut_members(const Poset& space, const Poset& scale, const std::vector<std::size_t>& assign)
{
    std::vector<ElementSet> out;
    out.reserve(scale.size());
    for (std::size_t p = 0; p < scale.size(); ++p) {
        const ElementSet above = scale.up(p);
        ElementSet cut;
        for (std::size_t x = 0; x < space.size(); ++x)
            if (above.contains(assign[x]))
                cut.insert(x);
        if (std::find(out.begin(), out.end(), cut) == out.end())
            out.push_back(cut);
    }
    std::sort(out.begin(), out.end(), LexLess{});
    return out;
}

namespace {

// Emits the upward closure of every antichain extending the current one with
// elements from `next` on. `blocked` holds everything comparable to a chosen element.
template <typename Emit>
void antichain_closures(const Poset& p, std::size_t next, ElementSet closure, ElementSet blocked, Emit& emit)
{
    if (!emit(closure))
        return;
    for (std::size_t j = next; j < p.size(); ++j) {
        if (blocked.contains(j))
            continue;
        antichain_closures(p, j + 1, closure | p.up(j), blocked | p.up(j) | p.down(j), emit);
    }
}

ElementSet allowed_values(const Poset& space, const Poset& scale, const std::vector<std::size_t>& assign, std::size_t i)
{
    ElementSet allowed = scale.all();
    for (std::size_t k = 0; k < i; ++k) {
        if (space.leq(k, i))
            allowed &= scale.up(assign[k]);
        if (space.leq(i, k))
            allowed &= scale.down(assign[k]);
    }
    return allowed;
}

template <typename Leaf>
bool monotone_maps(const Poset& space, const Poset& scale, std::vector<std::size_t>& assign, std::size_t i, Leaf& leaf)
{
    if (i == space.size())
        return leaf(assign);
    const ElementSet allowed = allowed_values(space, scale, assign, i);
    for (std::uint64_t b = allowed.bits(); b != 0; b &= b - 1) {
        assign[i] = static_cast<std::size_t>(std::countr_zero(b));
        if (!monotone_maps(space, scale, assign, i + 1, leaf))
            return false;
    }
    return true;
}

using FamilyMap = std::map<std::vector<ElementSet>, std::vector<std::size_t>, decltype(&family_less)>;

std::vector<RealizedFamily> flatten(const FamilyMap& found)
{
    std::vector<RealizedFamily> out;
    out.reserve(found.size());
    for (const auto& [members, witness] : found)
        out.push_back({members, witness});
    return out;
}

struct PairIndex {
    std::size_t n;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;

    explicit PairIndex(std::size_t n_) : n(n_)
    {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j)
                    pairs.emplace_back(i, j);
    }
};

bool decode_order(const PairIndex& idx, std::uint64_t mask, std::vector<ElementSet>& up)
{
    up.assign(idx.n, ElementSet{});
    for (std::size_t i = 0; i < idx.n; ++i)
        up[i].insert(i);
    for (std::size_t b = 0; b < idx.pairs.size(); ++b)
        if ((mask >> b) & 1u)
            up[idx.pairs[b].first].insert(idx.pairs[b].second);
    for (std::size_t i = 0; i < idx.n; ++i) {
        bool ok = true;
        (up[i] - ElementSet::single(i)).for_each([&](std::size_t j) {
            if (up[j].contains(i) || !up[j].subset_of(up[i]))
                ok = false;
        });
        if (!ok)
            return false;
    }
    return true;
}

void check_order_size(std::size_t n)
{
    if (n > max_labeled_order_size)
        throw Error(ErrorKind::too_large, "labeled partial orders are generated for at most " +
                                              std::to_string(max_labeled_order_size) + " points");
}

} // namespace

namespace serial {

std::vector<ElementSet> up_sets(const Poset& p, std::size_t cap)
{
    std::vector<ElementSet> out;
    auto emit = [&](ElementSet s) {
        if (out.size() > cap)
            return false;
        out.push_back(s);
        return out.size() <= cap;
    };
    antichain_closures(p, 0, ElementSet{}, ElementSet{}, emit);
    if (out.size() > cap)
        throw CapExceeded(cap, out.size(), "up-set enumeration");
    std::sort(out.begin(), out.end(), LexLess{});
    return out;
}

std::size_t count_monotone_maps(const Poset& space, const Poset& scale, std::size_t cap)
{
    std::size_t count = 0;
    std::vector<std::size_t> assign(space.size(), 0);
    auto leaf = [&](const std::vector<std::size_t>&) { return ++count <= cap; };
    monotone_maps(space, scale, assign, 0, leaf);
    return count;
}

std::vector<RealizedFamily> realizable_families(const Poset& space, const Poset& scale)
{
    FamilyMap found(&family_less);
    std::vector<std::size_t> assign(space.size(), 0);
    auto leaf = [&](const std::vector<std::size_t>& a) {
        found.try_emplace(cut_members(space, scale, a), a);
        return true;
    };
    monotone_maps(space, scale, assign, 0, leaf);
    return flatten(found);
}

std::vector<std::vector<ElementSet>> labeled_partial_orders(std::size_t n)
{
    check_order_size(n);
    const PairIndex idx(n);
    std::vector<std::vector<ElementSet>> out;
    std::vector<ElementSet> up;
    const std::uint64_t total = std::uint64_t{1} << idx.pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask)
        if (decode_order(idx, mask, up))
            out.push_back(up);
    return out;
}

} // namespace serial

namespace parallel {

std::vector<ElementSet> up_sets(const Poset& p, std::size_t cap)
{
    const std::size_t n = p.size();
    // Task i collects the antichains whose least element is i.
    std::vector<std::vector<ElementSet>> parts(n);
    std::atomic<std::size_t> total{1};
    std::atomic<bool> exceeded{cap < 1};
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < n; ++i) {
        auto& part = parts[i];
        auto emit = [&](ElementSet s) {
            if (exceeded.load(std::memory_order_relaxed))
                return false;
            part.push_back(s);
            if (total.fetch_add(1, std::memory_order_relaxed) + 1 > cap) {
                exceeded.store(true, std::memory_order_relaxed);
                return false;
            }
            return true;
        };
        antichain_closures(p, i + 1, p.up(i), p.up(i) | p.down(i), emit);
    }
    if (exceeded.load())
        throw CapExceeded(cap, std::max(total.load(), cap + 1), "up-set enumeration");
    std::vector<ElementSet> out{ElementSet{}};
    for (auto& part : parts)
        out.insert(out.end(), part.begin(), part.end());
    std::sort(out.begin(), out.end(), LexLess{});
    return out;
}

std::size_t count_monotone_maps(const Poset& space, const Poset& scale, std::size_t cap)
{
    if (space.empty())
        return 1;
    const std::size_t values = scale.size();
    std::atomic<std::size_t> count{0};
#pragma omp parallel for schedule(dynamic)
    for (std::size_t v = 0; v < values; ++v) {
        std::vector<std::size_t> assign(space.size(), 0);
        assign[0] = v;
        auto leaf = [&](const std::vector<std::size_t>&) {
            return count.fetch_add(1, std::memory_order_relaxed) + 1 <= cap;
        };
        if (count.load(std::memory_order_relaxed) <= cap)
            monotone_maps(space, scale, assign, 1, leaf);
    }
    return std::min(count.load(), cap + 1);
}

std::vector<RealizedFamily> realizable_families(const Poset& space, const Poset& scale)
{
    if (space.empty())
        return serial::realizable_families(space, scale);
    const std::size_t values = scale.size();
    std::vector<FamilyMap> parts(values, FamilyMap(&family_less));
#pragma omp parallel for schedule(dynamic)
    for (std::size_t v = 0; v < values; ++v) {
        std::vector<std::size_t> assign(space.size(), 0);
        assign[0] = v;
        auto& found = parts[v];
        auto leaf = [&](const std::vector<std::size_t>& a) {
            found.try_emplace(cut_members(space, scale, a), a);
            return true;
        };
        monotone_maps(space, scale, assign, 1, leaf);
    }
    // Merging in value order keeps the least witness of each family.
    FamilyMap merged(&family_less);
    for (const auto& part : parts)
        for (const auto& [members, witness] : part)
            merged.try_emplace(members, witness);
    return flatten(merged);
}

std::vector<std::vector<ElementSet>> labeled_partial_orders(std::size_t n)
{
    check_order_size(n);
    const PairIndex idx(n);
    const std::uint64_t total = std::uint64_t{1} << idx.pairs.size();
    const std::uint64_t chunks = std::min<std::uint64_t>(total, 256);
    std::vector<std::vector<std::vector<ElementSet>>> parts(chunks);
#pragma omp parallel for schedule(dynamic)
    for (std::uint64_t c = 0; c < chunks; ++c) {
        const std::uint64_t begin = total * c / chunks;
        const std::uint64_t end = total * (c + 1) / chunks;
        std::vector<ElementSet> up;
        for (std::uint64_t mask = begin; mask < end; ++mask)
            if (decode_order(idx, mask, up))
                parts[c].push_back(up);
    }
    std::vector<std::vector<ElementSet>> out;
    for (auto& part : parts)
        for (auto& rows : part)
            out.push_back(std::move(rows));
    return out;
}

} // namespace parallel

} // namespace lfuzzy::kernels
