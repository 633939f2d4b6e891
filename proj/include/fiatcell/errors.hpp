#pragma once

#include <stdexcept>
#include <string>

namespace fiatcell {

/// Bad user input: unknown element ids, out-of-range parameters, malformed files.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A shadow table that violates the structural axioms (missing entries,
/// type mismatches, non-strict identities, broken involution).
class StructureError : public std::runtime_error {
 public:
  explicit StructureError(const std::string& what) : std::runtime_error(what) {}
};

/// An operation was called outside its contract (e.g. m-values on a cell
/// that is not strongly regular).
class PreconditionError : public std::logic_error {
 public:
  explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

/// Internal arithmetic produced something impossible (negative or
/// non-integral structure constants).
class ConsistencyError : public std::runtime_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fiatcell
