#pragma once

#include <map>
#include <string>

namespace itg::data {

// Fixture files compiled into the library, keyed by file name.
const std::map<std::string, std::string>& embedded();

}  // namespace itg::data
