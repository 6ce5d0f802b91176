#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace lfuzzy {

/// Carriers are limited to this many elements; subsets are single-word bitmasks.
inline constexpr std::size_t max_carrier_size = 64;

/// A subset of a finite carrier, addressed by position in the carrier's
/// declared element order.
class ElementSet {
public:
    constexpr ElementSet() = default;
    constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr ElementSet full(std::size_t n)
    {
        return ElementSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
    }
    static constexpr ElementSet single(std::size_t i) { return ElementSet(std::uint64_t{1} << i); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1u; }
    constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool proper_subset_of(ElementSet other) const { return subset_of(other) && bits_ != other.bits_; }

    constexpr void insert(std::size_t i) { bits_ |= std::uint64_t{1} << i; }
    constexpr void erase(std::size_t i) { bits_ &= ~(std::uint64_t{1} << i); }

    constexpr ElementSet operator|(ElementSet o) const { return ElementSet(bits_ | o.bits_); }
    constexpr ElementSet operator&(ElementSet o) const { return ElementSet(bits_ & o.bits_); }
    constexpr ElementSet operator-(ElementSet o) const { return ElementSet(bits_ & ~o.bits_); }
    constexpr ElementSet& operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }
    constexpr ElementSet& operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }

    constexpr bool operator==(const ElementSet&) const = default;

    /// Lowest member position; undefined on the empty set.
    constexpr std::size_t first() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

    template <typename F>
    constexpr void for_each(F&& f) const
    {
        for (std::uint64_t b = bits_; b != 0; b &= b - 1)
            f(static_cast<std::size_t>(std::countr_zero(b)));
    }

    std::vector<std::size_t> indices() const
    {
        std::vector<std::size_t> out;
        out.reserve(size());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

private:
    std::uint64_t bits_ = 0;
};

/// Lexicographic order on characteristic vectors, position 0 most significant.
constexpr bool lex_less(ElementSet a, ElementSet b)
{
    const std::uint64_t d = a.bits() ^ b.bits();
    if (d == 0)
        return false;
    return b.contains(static_cast<std::size_t>(std::countr_zero(d)));
}

struct LexLess {
    constexpr bool operator()(ElementSet a, ElementSet b) const { return lex_less(a, b); }
};

/// Lexicographic comparison of two sequences of sets under `lex_less`.
inline bool lex_less(const std::vector<ElementSet>& a, const std::vector<ElementSet>& b)
{
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (lex_less(a[i], b[i]))
            return true;
        if (lex_less(b[i], a[i]))
            return false;
    }
    return a.size() < b.size();
}

} // namespace lfuzzy
