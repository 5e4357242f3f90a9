#include "sqz/verify.hpp"

namespace sqz {

std::vector<std::string> suite_names() { return {}; }

CheckReport run_suite(const std::string&, int, int) { return {}; }

}  // namespace sqz
