#pragma once

#include "affine_fock/report.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace affine_fock {

// boson-fermion, frenkel-kac, geometric, fixed-points, relations.
const std::vector<std::string>& suite_names();

// Runs one named suite, or every suite for "all". The geometric suite also
// reports the parity congruence. Throws ConstraintError on an unknown name.
std::vector<Report> run_suite(const std::string& name, int l, int degree, int charge_bound = 2);

// {"status","l","degree","failures":[...],"suites":[...]}; each failure
// carries the suite it came from.
nlohmann::json combined_report(const std::vector<Report>& reports, int l, int degree,
                               std::size_t max_failures = 50);

bool all_ok(const std::vector<Report>& reports);

}  // namespace affine_fock
