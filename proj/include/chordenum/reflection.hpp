#pragma once

#include <vector>

#include "chordenum/check.hpp"
#include "chordenum/count.hpp"
#include "chordenum/oracle.hpp"

// Reflection-fixed counts and dihedral orbit counts. The vertex axis passes
// through two opposite points, the edge axis through the midpoints of two
// opposite arcs.
namespace chordenum::reflection {

// Loopless diagrams fixed by a reflection, n = 0..n_max:
//   K(n) = a_{n-1}^(2),  H(n) = a_n^(2) - 2a_{n-1}^(2) + a_{n-2}^(2)  (n >= 2),
// K(0) = K(1) = H(0) = H(1) = 0.
struct LooplessReflection {
  SequenceTable vertex;  // K
  SequenceTable edge;    // H
};
LooplessReflection loopless_reflection(int n_max);

// ctilde_n from the Burnside sum (1/4n)[sum phi(d) f(2n,d) + nK(n) + nH(n)],
// cross-checked against btilde_n/2 + (a_n - a_{n-1} + a_{n-2})/4 with a = a^(2).
// Index 0 holds 0. Throws std::logic_error on disagreement or a fractional sum.
SequenceTable loopless_dihedral(int n_max);

// rbar_{n,k}: simple diagrams on 2n points cut at the vertex-free axis
// positions (between 2n,1 and n,n+1) and fixed by the edge-axis
// reflection, with k chords mapped to themselves. sbar_{n,k}: those
// containing the chord (1, 2n).
//   sbar_{n,k} = rbar_{n-1,k-1} - sbar_{n-1,k-1}
//   rbar_{n,k} = sum of `rbar_terms()`, then rbar_{0,0} = rbar_{2,0} = 1.
struct ReflectionTable {
  TriangleTable r;
  TriangleTable s;
  SequenceTable r_sum;
  SequenceTable s_sum;
  SequenceTable vertex;       // Kbar(n) = rbar_{n-1} - Kbar(n-2)
  SequenceTable no_parallel;  // Lbar(n) = rbar_n - 2 sbar_n + Lbar(n-2)
  SequenceTable edge;         // Hbar(n) = Lbar(n) - Kbar(n-1)
};

// coefficient(n, k) * (use_s ? sbar : rbar)_{n - dn, k + dk}
struct RbarTerm {
  int dn;
  int dk;
  bool use_s;
  Count (*coefficient)(int n, int k);
  const char* formula;
};
// The seven cases, with 2(2n-k-7) rbar_{n-4,k} listed as its two parts
// 2(n-3) and 2(n-k-4).
const std::vector<RbarTerm>& rbar_terms();

ReflectionTable simple_reflection_tables(int n_max);

// cbar_n = (1/4n)[sum phi(d) fbar(2n,d) + n Kbar(n) + n Hbar(n)]; index 0 holds 0.
SequenceTable simple_dihedral(int n_max);

// rbar/sbar cells against oracle::mirror_table for n <= options.cap, plus a
// one-step check of `rbar_terms()` fed with oracle rows.
std::vector<CheckResult> check_mirror_against_oracle(const oracle::Options& options = {});

// K, H, Kbar, Hbar against oracle::count_reflection_fixed for n = 1..n_max.
std::vector<CheckResult> check_reflection_against_oracle(int n_max, const oracle::Options& options = {});

}  // namespace chordenum::reflection
