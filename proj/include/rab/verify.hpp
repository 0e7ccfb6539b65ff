#pragma once

// Structural checks on building balls. Each returns a CheckResult whose
// witness names the first offending chamber(s).

#include <string>
#include <vector>

#include "rab/building.hpp"

namespace rab {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string witness;
};

CheckResult check_axioms(const BuildingBall& b);
CheckResult check_panel_sizes(const BuildingBall& b);
CheckResult check_f1(const BuildingBall& b);
CheckResult check_f2(const BuildingBall& b);
CheckResult check_f3(const BuildingBall& b);
CheckResult check_b1(const BuildingBall& b);
// |pi^{-1}(w)| equals the product of q over the letters of w.
CheckResult check_fiber_sizes(const BuildingBall& b);

// Runs the named checks in order; unknown names throw PreconditionError.
// Recognized: axioms, panels, fibers, f1, f2, f3, b1.
std::vector<CheckResult> run_checks(const BuildingBall& b, const std::vector<std::string>& names);

}  // namespace rab
