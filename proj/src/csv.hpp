#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace weblog::csv {

// Minimal CSV quoting: fields holding commas, quotes or newlines are
// wrapped in double quotes with embedded quotes doubled.
std::string escape(std::string_view field);
std::string join(const std::vector<std::string>& fields);
std::vector<std::string> split_line(std::string_view line);

}  // namespace weblog::csv
