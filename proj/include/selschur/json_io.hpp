#pragma once

#include <string>

#include <json.hpp>

#include "selschur/oracle.hpp"
#include "selschur/partitions.hpp"
#include "selschur/selberg.hpp"

namespace selschur {

nlohmann::json complex_to_json(Complex z);
Complex complex_from_json(const nlohmann::json& j);

nlohmann::json logform_to_json(LogComplex lf);

nlohmann::json partition_to_json(const Partition& lam);
Partition partition_from_json(const nlohmann::json& j);

nlohmann::json params_to_json(const SelbergParams& p);
SelbergParams params_from_json(const nlohmann::json& j);

nlohmann::json conditions_to_json(const ConditionReport& r);
ConditionReport conditions_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const VerificationReport& r);
VerificationReport report_from_json(const nlohmann::json& j);

// "1.5", "0.3+0.2i", "-0.3-1e-2i", "2i"
Complex parse_complex(const std::string& text);
std::string complex_to_string(Complex z);

}  // namespace selschur
