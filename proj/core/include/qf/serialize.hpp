#pragma once

#include <string>

#include "json.hpp"
#include "qf/verify.hpp"

namespace qf {

nlohmann::json to_json(const InvariantRecord& r);
nlohmann::json to_json(const ValueSets& vs);
nlohmann::json to_json(const VerificationReport& report);

std::string to_text(const VerificationReport& report);

}  // namespace qf
