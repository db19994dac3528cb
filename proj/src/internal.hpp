// SPDX-License-Identifier: MIT
#pragma once

#include <string_view>
#include <vector>

namespace sympdesc {

// Comma-separated integers; empty text gives an empty list. Throws Parse.
std::vector<int> detail_parse_int_list(std::string_view text);

}  // namespace sympdesc
