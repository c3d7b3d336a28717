#pragma once

#include "haarshift/bounds_audit.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace haarshift {

/// All serializers use insertion-ordered JSON so that repeated runs emit
/// byte-identical documents.
using Json = nlohmann::ordered_json;

Json function_to_json(const DyadicFunction& f);
Json float_function_to_json(const FloatFunction& f);

/// Accepts "mode":"exact" documents only.
DyadicFunction function_from_json(const Json& j);
/// Accepts both modes; exact leaves are converted to doubles.
FloatFunction float_function_from_json(const Json& j);
bool json_is_float_mode(const Json& j);

Json form_to_json(const RestrictedShiftForm& form);

Json bound_report_to_json(const BoundReport& rep);

Json claims_to_json(const std::vector<ClaimReport>& claims);

/// Coefficient file {"coeffs":[{"k":-1,"re":0.5,"im":0},...]}.
TrigPolynomial trig_from_json(const Json& j, DyadicInterval interval);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace haarshift
