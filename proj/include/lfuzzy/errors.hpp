#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lfuzzy {

enum class ErrorKind {
    duplicate_element,
    unknown_name,
    invalid_name,
    cycle_detected,
    too_large,
    cap_exceeded,
    not_a_subset,
    duplicate_member,
    not_a_lattice,
    not_intersection_closed,
    missing_full_set,
    not_distributive,
    not_moore_family,
    carrier_mismatch,
    precondition_violated,
    precondition_unmet,
    fixture_missing,
    syntax_error,
    semantic_error,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {
    }
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

/// Thrown when an enumeration would examine more than `cap` candidates.
class CapExceeded : public Error {
public:
    CapExceeded(std::size_t cap, std::size_t lower_bound, const std::string& what)
        : Error(ErrorKind::cap_exceeded,
                what + " (cap " + std::to_string(cap) + ", at least " + std::to_string(lower_bound) + ")"),
          cap_(cap), lower_bound_(lower_bound)
    {
    }
    std::size_t cap() const { return cap_; }
    std::size_t lower_bound() const { return lower_bound_; }

private:
    std::size_t cap_;
    std::size_t lower_bound_;
};

inline constexpr std::size_t default_cap = 1'000'000;

} // namespace lfuzzy
