#pragma once

#include "chordenum/count.hpp"

// Labelled counting recurrences. Every table here is indexed by chord
// count unless stated otherwise; index 0 carries the recurrence's boundary
// value.
namespace chordenum::labelled {

// a_{n,k}: linear diagrams with n chords, k of them loops. Keys (n, k).
//   a_{n+1,k} = a_{n,k-1} + (2n-k) a_{n,k} + (k+1) a_{n,k+1},  a_{0,0} = 1.
TriangleTable loopless_linear_triangle(int n_max);

// a_n, loopless linear diagrams: a_{n+1} = (2n+1) a_n + a_{n-1}, a_0 = 1, a_1 = 0.
SequenceTable loopless_linear(int n_max);

// a_n again, from a_{n+1} = 2n a_n + sum_{k=1..n} C(n,k) (2k-3)!! a_{n-k}
// with (-1)!! = 1.
SequenceTable loopless_linear_binomial(int n_max);

// b_n = a_n - a_{n-1} for n >= 2, b_1 = 0, b_0 = 0.
SequenceTable loopless_chord(int n_max);

// Linear diagrams by loops k and parallel pairs l. Keys (chords, k, l).
// The recurrence runs on a_{n,k,l} with n+1 chords, so the cell
// (c, k, l) holds a_{c-1,k,l}:
//   a_{n+1,k,l} = a_{n,k-1,l} + (2n+1-k-2l) a_{n,k,l} + (k+1) a_{n,k+1,l}
//               + 2(l+1) a_{n,k,l+1} + a_{n,k,l-1},      a_{0,1,0} = 1.
TriangleTable simple_triangle(int max_chords);

// Linear diagrams by parallel pairs only. Keys (chords, l); cell (c, l)
// holds ahat_{c-1,l}:
//   ahat_{n+1,l} = ahat_{n,l-1} + (2n+2-2l) ahat_{n,l} + 2(l+1) ahat_{n,l+1},
// which is the (k,l) recurrence summed over k.
TriangleTable parallel_triangle(int max_chords);

struct SimpleChain {
  // Simple linear diagrams; linear[c] = abar_{c-1} where
  //   abar_n = (2n-1) abar_{n-1} + (4n-3) abar_{n-2} + (2n-4) abar_{n-3}, abar_1 = 1.
  SequenceTable linear;
  // Simple linear diagrams without the chord (1, 2n): q_n = abar_{n-1} - q_{n-1}.
  SequenceTable no_outer_chord;
  // Simple chord diagrams: b_n = q_n - b_{n-1}.
  SequenceTable chord;
};
SimpleChain simple_labelled_chain(int max_chords);

}  // namespace chordenum::labelled
