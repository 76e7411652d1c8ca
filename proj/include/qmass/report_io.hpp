#pragma once

#include <string>

#include "qmass/identities.hpp"

namespace qmass {

/* Four fixed columns for every coefficientwise report; `equal` covers
 * all routes at that degree, and any third route is carried by the
 * JSON form only. Byte-deterministic. */
std::string to_tsv(const IdentityReport& rep);
std::string to_tsv(const HallNumericReport& rep);
std::string to_tsv(const DigitsReport& rep);

std::string to_json_string(const IdentityReport& rep);
std::string to_json_string(const HallNumericReport& rep);
std::string to_json_string(const DigitsReport& rep);

/* Inverse of to_json_string for identity reports. */
IdentityReport identity_report_from_json(const std::string& text);

}  // namespace qmass
