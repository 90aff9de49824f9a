#pragma once

#include <string>
#include <vector>

namespace affine_fock {

// Deliberate single-sign corruptions used only to prove the verification
// suites are not vacuous. Production code never sets any of them.
enum class Mutation : unsigned {
  None = 0,
  EtaOrientation = 1u << 0,    // explicit action uses eta^- instead of eta^+
  EpsilonEntry = 1u << 1,      // flips the table entry eps(alpha_1, alpha_2)
  PsiSign = 1u << 2,           // Clifford sign counts +1 sites below k
  FSignLiteral = 1u << 3,      // f_i prefactor (-1)^{v_{i-1}+v_i} of the smaller diagram
  GeometricPrefactor = 1u << 4 // localization prefactor uses v_{i-1} + v_i
};

bool mutation_active(Mutation m);
void set_mutations(unsigned mask);
unsigned mutations();

// Parses a mutation name as used by the CLI; returns Mutation::None if unknown.
Mutation parse_mutation(const std::string& name);
std::vector<std::string> mutation_names();

// Installs a mask for the lifetime of the guard.
class ScopedMutation {
 public:
  explicit ScopedMutation(Mutation m);
  ~ScopedMutation();
  ScopedMutation(const ScopedMutation&) = delete;
  ScopedMutation& operator=(const ScopedMutation&) = delete;

 private:
  unsigned saved_;
};

}  // namespace affine_fock
