#pragma once

#include <stdexcept>
#include <string>

namespace biform {

// Caller broke a documented precondition.
struct contract_violation : std::logic_error {
    explicit contract_violation(const std::string& what) : std::logic_error(what) {}
};

// A sieve-backed operation was asked about a value above the sieve limit.
struct sieve_too_small : std::runtime_error {
    explicit sieve_too_small(const std::string& what) : std::runtime_error(what) {}
};

// A requested bound exceeds an enumeration or overflow guard.
struct bound_too_large : std::runtime_error {
    explicit bound_too_large(const std::string& what) : std::runtime_error(what) {}
};

// Two routes that must agree disagreed; counting results can no longer be trusted.
struct oracle_bug : std::logic_error {
    explicit oracle_bug(const std::string& what) : std::logic_error(what) {}
};

// Not enough input rows for a fit.
struct insufficient_data : std::runtime_error {
    explicit insufficient_data(const std::string& what) : std::runtime_error(what) {}
};

} // namespace biform
