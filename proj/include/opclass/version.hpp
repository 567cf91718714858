#pragma once

namespace opclass {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kReportSchema = "opclass-report/1";

}  // namespace opclass
