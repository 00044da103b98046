#pragma once

#include <string>

#include "weylps/certificates.hpp"

namespace weylps {

/// {"alpha": "1/2", "d": 1, "target": [...], "b_shifts": [...], "levels": [{"k": 0, "s": [...]}, ...]}
/// with every coefficient as an exact fraction string, low-to-high.
std::string certificate_to_json(const PsCertificate& cert, int indent = 2);

/// Throws std::invalid_argument on malformed input.
PsCertificate certificate_from_json(const std::string& text);

}  // namespace weylps
