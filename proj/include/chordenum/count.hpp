#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace chordenum {

// Every count is an exact arbitrary-precision integer.
using Count = mpz_class;
using Rational = mpq_class;

std::string to_decimal(const Count& value);
Count from_decimal(const std::string& text);

// (2n-1)!!, with (-1)!! = 1.
Count double_factorial_odd(int n);
Count factorial(int n);
Count binomial(int n, int k);

// Euler's totient by trial division.
std::int64_t euler_phi(std::int64_t n);
std::vector<int> divisors(int n);

// A named integer sequence indexed from 0.
struct SequenceTable {
  std::string name;
  std::vector<Count> values;

  const Count& operator[](std::size_t n) const { return values.at(n); }
  // Negative indices read as zero, as the recurrences assume.
  Count at(int n) const { return n < 0 ? Count(0) : values.at(static_cast<std::size_t>(n)); }
  std::size_t size() const { return values.size(); }
};

// Multi-index count array. Absent cells read as zero.
struct TriangleTable {
  std::string name;
  std::size_t arity = 2;
  std::map<std::vector<int>, Count> cells;

  Count at(const std::vector<int>& index) const;
  void set(const std::vector<int>& index, const Count& value);
  // Sum of cells whose first index equals `row`.
  Count row_sum(int row) const;
};

}  // namespace chordenum
