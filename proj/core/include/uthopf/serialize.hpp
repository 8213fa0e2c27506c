#pragma once

// JSON encodings shared by the library and the command-line tool.
//
//   poset          {"n": 4, "strict": [[1,4],[2,4]]}
//   laurent        {"-2": "1/1", "0": "3/2"}   exponent of t -> rational
//   scf element    {"terms": [{"n", "strict", "coeff"}]}
//   scf tensor     {"terms": [{"left", "right", "coeff"}]}
//   class function {"group_id", "values": [{"class_rep", "value"}]}
//   report entry   {"check", "instance", "status", "lhs_hash", "rhs_hash"}

#include "uthopf/class_functions.hpp"
#include "uthopf/report.hpp"
#include "uthopf/scf.hpp"

#include <nlohmann/json.hpp>

namespace uthopf {

using Json = nlohmann::ordered_json;

Json to_json(const Nuio &pi);
Json to_json(const SetComposition &a);
Json to_json(const Laurent &x);
Json to_json(const ScfElement &x);
Json to_json(const ScfTensor &x);
Json to_json(const ClassFunction &psi);
Json to_json(const GroupTable &g);
Json to_json(const CheckResult &r);
Json to_json(const VerificationReport &report);

/// Throws InvalidArgument unless the pairs form a natural unit interval order.
Nuio nuio_from_json(const Json &j);
Laurent laurent_from_json(const Json &j);
/// Accepts the element schema or a bare poset (read as δ_π).
ScfElement scf_from_json(const Json &j);
ScfTensor scf_tensor_from_json(const Json &j);
/// Values are matched to classes of `group` through the representatives.
ClassFunction class_function_from_json(const Json &j, GroupPtr group);

/// Parses text, turning parse errors into InvalidArgument.
Json parse_json(const std::string &text);

} // namespace uthopf
