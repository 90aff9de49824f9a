#pragma once

#include "affine_fock/rational.hpp"

#include <map>
#include <utility>

namespace affine_fock {

// Finitely supported map from basis labels to exact rationals. Zero
// coefficients are never stored, so == is exact termwise equality.
template <class L>
class FockVector {
 public:
  using Label = L;
  using Terms = std::map<L, Rational>;

  FockVector() = default;
  static FockVector basis(const L& label, const Rational& coeff = Rational(1)) {
    FockVector v;
    v.add(label, coeff);
    return v;
  }

  void add(const L& label, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(label, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coeff(const L& label) const {
    auto it = terms_.find(label);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  FockVector& operator+=(const FockVector& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  FockVector& operator-=(const FockVector& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  FockVector& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& entry : terms_) entry.second *= s;
    return *this;
  }
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  friend FockVector operator*(const Rational& s, FockVector v) { return v *= s; }
  friend bool operator==(const FockVector& a, const FockVector& b) { return a.terms_ == b.terms_; }

  // Applies a basis map f(label) -> FockVector<M> linearly.
  template <class M, class F>
  FockVector<M> apply(F&& f) const {
    FockVector<M> out;
    for (const auto& [k, c] : terms_) {
      const FockVector<M> img = f(k);
      for (const auto& [k2, c2] : img.terms()) out.add(k2, c * c2);
    }
    return out;
  }

 private:
  Terms terms_;
};

}  // namespace affine_fock
