#include "rab/report.hpp"

#include <cstdio>

namespace rab {

void RunReport::check(const CheckResult& r) { check(r.name, r.passed, r.witness); }

void RunReport::check(const std::string& name, bool passed, const std::string& witness) {
  std::string line = "check " + name + (passed ? " PASS" : " FAIL");
  if (!passed) line += " witness: " + (witness.empty() ? std::string("none") : witness);
  lines_.push_back(std::move(line));
  passed_ = passed_ && passed;
}

std::string RunReport::str(double timing_ms) const {
  std::string out = "command: " + command_ + '\n';
  for (const auto& l : lines_) out += l + '\n';
  if (timing_ms >= 0) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "timing: %.3f ms\n", timing_ms);
    out += buf;
  }
  out += passed_ ? "result: PASS\n" : "result: FAIL\n";
  return out;
}

}  // namespace rab
