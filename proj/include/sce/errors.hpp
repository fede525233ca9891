#pragma once

#include <stdexcept>
#include <string>

namespace sce {

// A query or computation needed a number the prime table does not cover.
class OutOfCoverage : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Requested sieve would exceed the configured memory budget.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A bound function was evaluated outside the region where it is defined.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Bisection was asked to search an interval without a sign change.
class BracketError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace sce
