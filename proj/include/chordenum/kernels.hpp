#pragma once

#include <span>
#include <vector>

#include "chordenum/diagram.hpp"

namespace chordenum {

enum class Execution { serial, parallel };

// Folds `visit(acc, pairing)` over every matching on 2n points.
//
// The serial kernel walks the whole stream in order. The parallel kernel
// splits it into the 2n-1 branches fixed by the partner of point 1, folds
// each branch into its own accumulator under OpenMP, and merges the
// accumulators in branch order with `acc += other`, so the result does not
// depend on scheduling.
template <typename Acc, typename Visit>
Acc fold_matchings(int n, Execution execution, Visit visit) {
  Acc total{};
  if (n == 0 || execution == Execution::serial) {
    for_each_matching(n, [&](std::span<const int> pairing) { visit(total, pairing); });
    return total;
  }
  const int branches = 2 * n - 1;
  std::vector<Acc> partial(static_cast<std::size_t>(branches));
#pragma omp parallel for schedule(dynamic, 1)
  for (int b = 0; b < branches; ++b) {
    Acc& acc = partial[static_cast<std::size_t>(b)];
    for_each_matching_in_branch(n, b + 1, [&](std::span<const int> pairing) { visit(acc, pairing); });
  }
  for (const Acc& acc : partial) total += acc;
  return total;
}

}  // namespace chordenum
