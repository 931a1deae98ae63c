#pragma once

#include <string>

namespace orbicurve {

/// One named pass/fail line of a verification report.
struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

}  // namespace orbicurve
