#include "affine_fock/rational.hpp"

#include "affine_fock/errors.hpp"

#include <cctype>

namespace affine_fock {

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {
BigInt parse_int(std::string_view s, std::string_view whole) {
  if (s.empty()) throw ParseError("empty integer in rational '" + std::string(whole) + "'");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw ParseError("bad rational '" + std::string(whole) + "'");
  for (std::size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("bad rational '" + std::string(whole) + "'");
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return BigInt(digits);
}
}  // namespace

Rational parse_rational(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s, s));
  BigInt num = parse_int(s.substr(0, slash), s);
  BigInt den = parse_int(s.substr(slash + 1), s);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
  return Rational(num, den);
}

}  // namespace affine_fock
