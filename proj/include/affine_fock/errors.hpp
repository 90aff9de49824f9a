#pragma once

#include <stdexcept>
#include <string>

namespace affine_fock {

// Malformed input (bad JSON, bad generator name, ...).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Well-formed input violating a precondition (l < 2, sum of core vector != 0, ...).
class ConstraintError : public std::invalid_argument {
 public:
  explicit ConstraintError(const std::string& what) : std::invalid_argument(what) {}
};

// A degree-raising operator left its declared window.
class WindowOverflow : public std::runtime_error {
 public:
  explicit WindowOverflow(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace affine_fock
