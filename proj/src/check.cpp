#include "chordenum/check.hpp"

#include <algorithm>
#include <stdexcept>

namespace chordenum {

CheckResult make_check(std::string name, int n, const Count& expected, const Count& got) {
  return {std::move(name), n, to_decimal(expected), to_decimal(got), expected == got};
}

std::string format_check(const CheckResult& check) {
  return "CHECK " + check.name + " n=" + std::to_string(check.n) + " expected=" + check.expected +
         " got=" + check.got + (check.ok ? " OK" : " FAIL");
}

bool all_ok(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok; });
}

void require_all(const std::vector<CheckResult>& checks, const std::string& context) {
  for (const auto& c : checks) {
    if (!c.ok) throw std::runtime_error(context + ": " + format_check(c));
  }
}

}  // namespace chordenum
