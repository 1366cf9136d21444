#pragma once

// Rendering of verification reports: canonical JSON (sorted keys, stable
// ordering) or an aligned text table.

#include <string>

#include "msplit/verify.hpp"

namespace msplit {

std::string render_report(const VerificationReport& report, const std::string& format);

}  // namespace msplit
