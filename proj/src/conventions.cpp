#include "affine_fock/conventions.hpp"

#include <atomic>
#include <utility>

namespace affine_fock {

namespace {
std::atomic<unsigned> g_mask{0};

const std::vector<std::pair<std::string, Mutation>>& table() {
  static const std::vector<std::pair<std::string, Mutation>> t = {
      {"eta-orientation", Mutation::EtaOrientation},
      {"epsilon-entry", Mutation::EpsilonEntry},
      {"psi-sign", Mutation::PsiSign},
      {"f-sign-literal", Mutation::FSignLiteral},
      {"geometric-prefactor", Mutation::GeometricPrefactor},
  };
  return t;
}
}  // namespace

bool mutation_active(Mutation m) {
  return (g_mask.load(std::memory_order_relaxed) & static_cast<unsigned>(m)) != 0;
}

void set_mutations(unsigned mask) { g_mask.store(mask); }
unsigned mutations() { return g_mask.load(); }

Mutation parse_mutation(const std::string& name) {
  for (const auto& [n, m] : table())
    if (n == name) return m;
  return Mutation::None;
}

std::vector<std::string> mutation_names() {
  std::vector<std::string> out;
  for (const auto& entry : table()) out.push_back(entry.first);
  return out;
}

ScopedMutation::ScopedMutation(Mutation m) : saved_(mutations()) {
  set_mutations(saved_ | static_cast<unsigned>(m));
}

ScopedMutation::~ScopedMutation() { set_mutations(saved_); }

}  // namespace affine_fock
