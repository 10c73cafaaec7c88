#pragma once

#include <map>
#include <string>
#include <vector>

#include "chordenum/check.hpp"
#include "chordenum/count.hpp"
#include "chordenum/oracle.hpp"

// Rotationally symmetric diagrams. A d-symmetric diagram on m*d points is
// invariant under the rotation by m points and is cut after every multiple
// of m, so each sector is a linear diagram on m points.
namespace chordenum::symmetry {

// a_m^(d), loopless d-symmetric diagrams, m = 0..m_max.
//   odd d:  a_m = d(m-1) a_{m-2} + a_{m-4}
//   even d: a_m = a_{m-1} + d(m-1) a_{m-2} - a_{m-3} + a_{m-4}
// a_0 = 1; a_1 = 1 (even d), 0 (odd d); a_2 = d (even d), d-1 (odd d).
SequenceTable loopless_dsym(int d, int m_max);

// The same column from the longer form
//   a_m = [a_{m-1} if d even] + [d(m-1)-1] a_{m-2} + sum_{i=1}^{m/2-1} d(m-1-2i) a_{m-2-2i},
// kept as a redundant check.
SequenceTable loopless_dsym_expanded(int d, int m_max);

// Divisor d of 2n -> number of diagrams fixed by the rotation of order d.
struct FixedCountVector {
  int n = 0;
  std::map<int, Count> by_divisor;
};

// f(m*d, d) for m = 0..m_max: a_m - a_{m-2}, and 0 at 2 points. Entries
// with m*d odd are 0.
SequenceTable loopless_fixed_column(int d, int m_max);
FixedCountVector loopless_fixed(int n);
// btilde_n = (1/2n) sum_{d | 2n} phi(d) f(2n, d); index 0 holds 0.
SequenceTable loopless_cyclic(int n_max);

// One summand of the even-d simple recurrence:
//   coefficient(m, k, d) * abar_{m - dm, k + dk}.
struct EvenTerm {
  int dm;
  int dk;
  Count (*coefficient)(int m, int k, int d);
  const char* formula;
};
// The six summands used for the even-d table.
const std::vector<EvenTerm>& even_simple_terms();
// The same summands with the (2m+k-7) coefficient as printed in the
// literature, without the factor d. Kept to document the discrepancy.
const std::vector<EvenTerm>& printed_even_simple_terms();

// abar_{m,k}^(d) for even d: simple d-symmetric diagrams where k*d/2 chords
// are diameters. Keys (m, k).
TriangleTable simple_dsym_even(int d, int m_max,
                               const std::vector<EvenTerm>& terms = even_simple_terms());
// abar_m^(d), summed over k for even d. Odd d:
//   abar_m = [(m-1)d-2] abar_{m-2} + (2m-7)d abar_{m-4} + (m-6)d abar_{m-6},
//   abar_0 = 1, abar_1 = 0, abar_2 = d-1.
SequenceTable simple_dsym(int d, int m_max);

// qbar_m^(d) = abar_m - qbar_{m-2}; qbar_0 = qbar_1 = 0 for d <= 2, 1 for d > 2.
SequenceTable simple_qbar(int d, int m_max);
// pbar_m = qbar_m^(2) - pbar_{m-2} - qbar_{m-4}^(2), pbar_0 = 0, pbar_1 = 1.
SequenceTable simple_pbar(int m_max);

// fbar(m*d, d) for m = 0..m_max. d = 1 reads the labelled simple chord
// counts; d = 2 uses fbar(2m,2) = pbar_m - fbar(2m-4,2) - qbar_{m-1} + pbar_{m-1}
// with fbar(0,2) = 1, fbar(2,2) = 0; odd d > 2 uses F_m = qbar_m - F_{m-2};
// even d > 2 uses F_m = qbar_m - F_{m-2} - qbar_{m-2} - qbar_{m-3}; F_0 = 0.
SequenceTable simple_fixed_column(int d, int m_max);
FixedCountVector simple_fixed(int n);
// (1/2n) sum_{d | 2n} phi(d) fbar(2n, d); index 0 holds 0.
SequenceTable simple_cyclic(int n_max);

// sum_{d | 2n} phi(d) * fixed[d].
Count totient_weighted_sum(const FixedCountVector& fixed);
// The undivided sums sum_{d | 2n} phi(d) f(2n, d) for n = 0..n_max (index 0
// holds 0), for the loopless or simple family.
SequenceTable cyclic_sums(oracle::Family family, int n_max);

// Columns against oracle::sectored_symmetric_table for every m with
// m*d/2 <= options.cap. For even simple d the (m, k) cells are compared.
std::vector<CheckResult> check_dsym_against_oracle(oracle::Family family, int d,
                                                   const oracle::Options& options = {});

// One-step check of the even-d simple summands: each oracle row is
// predicted from the oracle rows below it through `terms`.
std::vector<CheckResult> check_even_terms_against_oracle(
    int d, const oracle::Options& options = {},
    const std::vector<EvenTerm>& terms = even_simple_terms());

// Fixed-count vectors of both families against
// oracle::count_rotation_fixed for n = 1..n_max.
std::vector<CheckResult> check_fixed_against_oracle(int n_max, const oracle::Options& options = {});

}  // namespace chordenum::symmetry
