#pragma once

#include <stdexcept>
#include <string>

namespace ncsieve {

/// Input outside an operation's domain (bad parameters, non-well-generated groups, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed text input (group specs, block types, catalog files).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation would exceed a configured size or time budget.
class SizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An identity that must hold by construction failed; indicates bad catalog
/// data or a bug rather than bad user input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ncsieve
