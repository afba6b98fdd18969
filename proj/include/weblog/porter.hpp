#pragma once

#include <string>
#include <string_view>

namespace weblog {

// Porter suffix stripper for lowercase English tokens. Tokens containing
// digits and tokens shorter than three letters are returned unchanged.
std::string porter_stem(std::string_view token);

}  // namespace weblog
