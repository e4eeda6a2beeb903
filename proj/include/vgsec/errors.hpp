#pragma once

#include <stdexcept>
#include <string>

namespace vgsec {

/// Malformed input: bad flag values, unparsable files, violated preconditions.
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A numeric routine was asked to work outside its mathematical domain.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A graph generator could not realize the requested topology.
class ConstructionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace vgsec
