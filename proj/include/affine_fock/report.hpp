#pragma once

#include <json.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace affine_fock {

struct Failure {
  std::string generator;
  nlohmann::json lambda;
  nlohmann::json lhs;
  nlohmann::json rhs;
};

// Outcome of one verification suite. Failures are kept in a canonical order
// so that the serialized report does not depend on scheduling.
struct Report {
  std::string suite;
  int l = 0;
  int degree = 0;
  std::size_t checked = 0;
  std::vector<Failure> failures;

  bool ok() const { return failures.empty(); }
  void add_failure(Failure f) { failures.push_back(std::move(f)); }
  void merge(Report other);
  void sort_failures();
  // At most max_failures entries are listed; failure_count is always exact.
  nlohmann::json to_json(std::size_t max_failures = 50) const;
};

}  // namespace affine_fock
