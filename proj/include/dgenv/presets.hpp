#pragma once

#include "dgenv/presentation.hpp"

#include <string>
#include <vector>

namespace dgenv {

std::vector<std::string> builtin_names();
/// File text of a built-in presentation; throws std::out_of_range.
const std::string& builtin_text(const std::string& name);
Presentation builtin(const std::string& name);

}  // namespace dgenv
