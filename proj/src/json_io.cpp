#include "affine_fock/json_io.hpp"

#include "affine_fock/errors.hpp"

#include <limits>

namespace affine_fock {

Json to_json_value(const Partition& p) { return Json(p.parts()); }

Json to_json_value(const MayaDiagram& m) {
  return {{"particles_below", m.particles_below}, {"holes_above", m.holes_above}};
}

Json to_json_value(const LaurentPoly& p) {
  Json j = Json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c;
  return j;
}

Json to_json_value(const Node& x) { return Json::array({x.a, x.b}); }

Json to_json_value(const ChargedLabel& x) { return {{"c", x.c}, {"lambda", to_json_value(x.lambda)}}; }

Json to_json_value(const PartitionTuple& q) {
  Json arr = Json::array();
  for (const auto& p : q) arr.push_back(to_json_value(p));
  return arr;
}

Json to_json_value(const std::vector<int>& c) { return Json(c); }

Json to_json_value(const LBLabel& x) { return {{"beta", x.beta}, {"q", to_json_value(x.q)}}; }

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

namespace {

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + ": expected an integer");
  const auto v = j.get<long long>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw ParseError(std::string(what) + ": integer out of range");
  return static_cast<int>(v);
}

}  // namespace

std::vector<int> parse_int_vector(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of integers");
  std::vector<int> out;
  for (const auto& x : j) out.push_back(as_int(x, "array entry"));
  return out;
}

Partition parse_partition(const Json& j) { return Partition(parse_int_vector(j)); }

MayaDiagram parse_maya(const Json& j) {
  if (!j.is_object() || !j.contains("particles_below") || !j.contains("holes_above"))
    throw ParseError("Maya diagram needs particles_below and holes_above");
  return MayaDiagram::from_defects(parse_int_vector(j.at("particles_below")),
                                   parse_int_vector(j.at("holes_above")));
}

LaurentPoly parse_laurent(const Json& j) {
  if (!j.is_object()) throw ParseError("Laurent polynomial must be an object {exponent: coeff}");
  LaurentPoly p;
  for (const auto& [k, v] : j.items()) {
    int e = 0;
    try {
      std::size_t used = 0;
      e = std::stoi(k, &used);
      if (used != k.size()) throw ParseError("bad exponent '" + k + "'");
    } catch (const std::logic_error&) {
      throw ParseError("bad exponent '" + k + "'");
    }
    if (!v.is_number_integer()) throw ParseError("Laurent coefficients must be integers");
    p.add_term(e, v.get<long long>());
  }
  return p;
}

PartitionTuple parse_partition_tuple(const Json& j) {
  if (!j.is_array()) throw ParseError("partition tuple must be an array of partitions");
  PartitionTuple q;
  for (const auto& p : j) q.push_back(parse_partition(p));
  return q;
}

BosonVector parse_boson_vector(const Json& j) {
  if (!j.is_array()) throw ParseError("Fock vector must be an array of {label, coeff}");
  BosonVector v;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("label") || !t.contains("coeff"))
      throw ParseError("Fock vector term needs label and coeff");
    const Json& c = t.at("coeff");
    Rational r = c.is_string() ? parse_rational(c.get<std::string>()) : Rational(as_int(c, "coeff"));
    v.add(parse_partition(t.at("label")), r);
  }
  return v;
}

}  // namespace affine_fock
