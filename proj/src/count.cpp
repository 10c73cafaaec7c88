#include "chordenum/count.hpp"

#include <stdexcept>

namespace chordenum {

std::string to_decimal(const Count& value) { return value.get_str(10); }

Count from_decimal(const std::string& text) {
  Count out;
  if (text.empty() || out.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a decimal integer: '" + text + "'");
  }
  return out;
}

Count double_factorial_odd(int n) {
  Count out = 1;
  for (int j = 2 * n - 1; j > 1; j -= 2) out *= j;
  return out;
}

Count factorial(int n) {
  Count out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Count binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Count out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

std::int64_t euler_phi(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("euler_phi: argument must be positive");
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

Count TriangleTable::at(const std::vector<int>& index) const {
  auto it = cells.find(index);
  return it == cells.end() ? Count(0) : it->second;
}

void TriangleTable::set(const std::vector<int>& index, const Count& value) {
  if (index.size() != arity) throw std::invalid_argument("TriangleTable: wrong index arity for " + name);
  if (value == 0) {
    cells.erase(index);
  } else {
    cells[index] = value;
  }
}

Count TriangleTable::row_sum(int row) const {
  Count total = 0;
  for (const auto& [index, value] : cells) {
    if (index.front() == row) total += value;
  }
  return total;
}

}  // namespace chordenum
