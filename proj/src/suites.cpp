#include "affine_fock/suites.hpp"

#include "affine_fock/equivariant.hpp"
#include "affine_fock/errors.hpp"
#include "affine_fock/fock.hpp"
#include "affine_fock/frenkel_kac.hpp"

namespace affine_fock {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"boson-fermion", "frenkel-kac", "geometric",
                                                 "fixed-points", "relations"};
  return names;
}

std::vector<Report> run_suite(const std::string& name, int l, int degree, int charge_bound) {
  require_level(l);
  if (degree < 0) throw ConstraintError("degree must be non-negative");
  if (name == "all") {
    std::vector<Report> out;
    for (const auto& n : suite_names())
      for (auto& r : run_suite(n, l, degree, charge_bound)) out.push_back(std::move(r));
    return out;
  }
  if (name == "boson-fermion") {
    Report r = verify_boson_fermion(degree, charge_bound);
    r.l = l;
    return {r};
  }
  if (name == "frenkel-kac") return {verify_intertwining(l, degree)};
  if (name == "geometric") return {verify_geometric_match(l, degree), verify_parity(l, degree)};
  if (name == "fixed-points") return {verify_fixed_points(l, degree)};
  if (name == "relations") return {verify_relations(l, degree)};
  throw ConstraintError("unknown suite '" + name + "'");
}

bool all_ok(const std::vector<Report>& reports) {
  for (const auto& r : reports)
    if (!r.ok()) return false;
  return true;
}

nlohmann::json combined_report(const std::vector<Report>& reports, int l, int degree,
                               std::size_t max_failures) {
  nlohmann::json j;
  j["status"] = all_ok(reports) ? "ok" : "mismatch";
  j["l"] = l;
  j["degree"] = degree;
  nlohmann::json failures = nlohmann::json::array();
  nlohmann::json suites = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json one = r.to_json(max_failures);
    for (auto& f : one["failures"]) {
      f["suite"] = r.suite;
      failures.push_back(std::move(f));
    }
    one.erase("failures");
    suites.push_back(std::move(one));
  }
  j["failures"] = std::move(failures);
  j["suites"] = std::move(suites);
  return j;
}

}  // namespace affine_fock
