#pragma once

#include <map>
#include <string>

namespace testsupport {

// Helpers for building full 40-column export fixtures. `values` keys are the
// canonical header names ("account.name", "Post Created Date", ...); absent
// columns are left empty.
std::string csv_header_row();
std::string csv_row(const std::map<std::string, std::string>& values);

// A convenience row with required fields filled and sensible defaults.
std::map<std::string, std::string> base_row(const std::string& account, const std::string& date,
                                            const std::string& time);

}  // namespace testsupport
