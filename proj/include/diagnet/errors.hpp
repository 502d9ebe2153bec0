#pragma once

#include <stdexcept>
#include <string>

namespace diagnet {

/// Precondition on a domain value violated (e.g. comparing a fault set with itself).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Generator parameters outside the family's valid range.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed external input: graph files, syndromes, node lists.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operation not supported at this size (e.g. isomorphism above 64 nodes).
class CapabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A theorem bound was requested for a graph that fails its preconditions.
class InapplicableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Search stopped after exhausting its pair or wall-clock budget.
class SearchAborted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace diagnet
