#include "affine_fock/laurent.hpp"

#include <sstream>

namespace affine_fock {

LaurentPoly LaurentPoly::monomial(int exponent, Coeff coeff) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

LaurentPoly::Coeff LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(int exponent, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (auto [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (auto [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (auto [ea, ca] : a.terms_)
    for (auto [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly LaurentPoly::substitute_power(int k) const {
  LaurentPoly r;
  for (auto [e, c] : terms_) r.add_term(e * k, c);
  return r;
}

LaurentPoly LaurentPoly::dual() const { return substitute_power(-1); }

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (auto [e, c] : terms_) r.add_term(e + k, c);
  return r;
}

LaurentPoly LaurentPoly::graded_piece(int l, int i) const {
  LaurentPoly r;
  const int target = ((i % l) + l) % l;
  for (auto [e, c] : terms_)
    if (((e % l) + l) % l == target) r.add_term(e, c);
  return r;
}

LaurentPoly::Coeff LaurentPoly::at_one() const {
  Coeff s = 0;
  for (auto [e, c] : terms_) s += c;
  return s;
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto [e, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Coeff a = c < 0 ? -c : c;
    if (e == 0) {
      os << a;
      continue;
    }
    if (a != 1) os << a << "*";
    os << var;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

}  // namespace affine_fock
