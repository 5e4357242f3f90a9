#pragma once

#include <string>
#include <vector>

#include "sqz/schubert.hpp"

namespace sqz {

// Named verification suites behind `sqzcls verify`.
std::vector<std::string> suite_names();
CheckReport run_suite(const std::string& name, int n_max, int jobs);

}  // namespace sqz
