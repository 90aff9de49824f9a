#pragma once

#include "affine_fock/core_quotient.hpp"
#include "affine_fock/fock.hpp"
#include "affine_fock/frenkel_kac.hpp"
#include "affine_fock/laurent.hpp"
#include "affine_fock/maya.hpp"
#include "affine_fock/partitions.hpp"

#include <json.hpp>

#include <string>

namespace affine_fock {

using Json = nlohmann::json;

// Serialization. All parse_* functions throw ParseError on malformed input
// and ConstraintError on well-formed input violating an invariant.
Json to_json_value(const Partition& p);
Json to_json_value(const MayaDiagram& m);
Json to_json_value(const LaurentPoly& p);
Json to_json_value(const Node& x);
Json to_json_value(const ChargedLabel& x);
Json to_json_value(const LBLabel& x);
Json to_json_value(const PartitionTuple& q);
Json to_json_value(const std::vector<int>& c);

template <class L>
Json to_json_value(const FockVector<L>& v) {
  Json arr = Json::array();
  for (const auto& [label, coeff] : v) arr.push_back({{"label", to_json_value(label)}, {"coeff", to_string(coeff)}});
  return arr;
}

// Parses a document, mapping syntax errors to ParseError.
Json parse_json_text(const std::string& text);

Partition parse_partition(const Json& j);
MayaDiagram parse_maya(const Json& j);
LaurentPoly parse_laurent(const Json& j);
std::vector<int> parse_int_vector(const Json& j);
PartitionTuple parse_partition_tuple(const Json& j);
BosonVector parse_boson_vector(const Json& j);

}  // namespace affine_fock
