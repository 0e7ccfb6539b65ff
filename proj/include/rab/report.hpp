#pragma once

// Machine-readable run reports printed by the command-line tool.
//
//   command: rab verify p5.bldg --checks f1
//   input: p5.bldg 1f0c9a7e44b2d310
//   chambers: 71
//   check f1 PASS
//   check f2 FAIL witness: chamber 5 ...
//   result: PASS

#include <string>
#include <utility>
#include <vector>

#include "rab/verify.hpp"

namespace rab {

class RunReport {
 public:
  explicit RunReport(std::string command) : command_(std::move(command)) {}

  void input(const std::string& name, const std::string& hash) { lines_.push_back("input: " + name + ' ' + hash); }
  void note(const std::string& key, const std::string& value) { lines_.push_back(key + ": " + value); }
  void raw(std::string line) { lines_.push_back(std::move(line)); }
  void check(const CheckResult& r);
  void check(const std::string& name, bool passed, const std::string& witness = {});

  bool passed() const { return passed_; }
  // Timing is included only when `timing_ms` is non-negative.
  std::string str(double timing_ms = -1) const;

 private:
  std::string command_;
  std::vector<std::string> lines_;
  bool passed_ = true;
};

}  // namespace rab
