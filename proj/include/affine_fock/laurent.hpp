#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace affine_fock {

// Integer Laurent polynomial in one variable. Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Coeff = std::int64_t;

  LaurentPoly() = default;
  static LaurentPoly monomial(int exponent, Coeff coeff = 1);

  Coeff coeff(int exponent) const;
  void add_term(int exponent, Coeff coeff);
  const std::map<int, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // p(z) -> p(z^k)
  LaurentPoly substitute_power(int k) const;
  // p(z) -> p(1/z); the dual character V*.
  LaurentPoly dual() const;
  // z^k * p(z)
  LaurentPoly shifted(int k) const;
  // Keeps the exponents congruent to i mod l.
  LaurentPoly graded_piece(int l, int i) const;
  Coeff at_one() const;

  std::string to_string(const std::string& var = "z") const;

 private:
  std::map<int, Coeff> terms_;
};

}  // namespace affine_fock
