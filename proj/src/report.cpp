#include "affine_fock/report.hpp"

#include <algorithm>
#include <tuple>

namespace affine_fock {

void Report::merge(Report other) {
  checked += other.checked;
  for (auto& f : other.failures) failures.push_back(std::move(f));
}

void Report::sort_failures() {
  std::stable_sort(failures.begin(), failures.end(), [](const Failure& x, const Failure& y) {
    return std::forward_as_tuple(x.generator, x.lambda.dump(), x.lhs.dump()) <
           std::forward_as_tuple(y.generator, y.lambda.dump(), y.lhs.dump());
  });
}

nlohmann::json Report::to_json(std::size_t max_failures) const {
  nlohmann::json j;
  j["suite"] = suite;
  j["status"] = ok() ? "ok" : "mismatch";
  j["l"] = l;
  j["degree"] = degree;
  j["checked"] = checked;
  j["failure_count"] = failures.size();
  nlohmann::json fs = nlohmann::json::array();
  for (std::size_t i = 0; i < failures.size() && i < max_failures; ++i) {
    const Failure& f = failures[i];
    fs.push_back({{"generator", f.generator}, {"lambda", f.lambda}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  }
  j["failures"] = std::move(fs);
  return j;
}

}  // namespace affine_fock
