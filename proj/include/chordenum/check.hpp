#pragma once

#include <string>
#include <vector>

#include "chordenum/count.hpp"

namespace chordenum {

// One comparison of a computed value against an independent one.
struct CheckResult {
  std::string name;
  int n = 0;
  std::string expected;
  std::string got;
  bool ok = false;
};

CheckResult make_check(std::string name, int n, const Count& expected, const Count& got);

// "CHECK <name> n=<n> expected=<x> got=<y> OK|FAIL"
std::string format_check(const CheckResult& check);

bool all_ok(const std::vector<CheckResult>& checks);

// Throws std::runtime_error naming the first failing check, prefixed by
// `context`.
void require_all(const std::vector<CheckResult>& checks, const std::string& context);

}  // namespace chordenum
