#pragma once

#include <string>
#include <vector>

#include "chordenum/count.hpp"

// Name lookup for the sequences and triangles exposed on the command line.
namespace chordenum::catalog {

// loopless-linear, loopless-chord, loopless-cyclic, loopless-dihedral,
// simple-linear, simple-chord, simple-cyclic, simple-dihedral, all.
const std::vector<std::string>& family_names();
bool is_family(const std::string& name);
// Values for n = 0..n_max; entry n counts diagrams with n chords. Throws
// std::invalid_argument for an unknown name.
SequenceTable family_sequence(const std::string& name, int n_max);

// a_nk, a_nkl, ahat_nl, abar_mk, rbar_nk, sbar_nk.
const std::vector<std::string>& triangle_names();
bool is_triangle(const std::string& name);
// Keys use the usual indices: a_nkl and ahat_nl cells at n describe
// diagrams with n+1 chords; abar_mk needs an even d.
TriangleTable triangle(const std::string& name, int n_max, int d = 2);
// Column labels for the keys of `triangle(name, ...)`.
std::vector<std::string> triangle_key_names(const std::string& name);

}  // namespace chordenum::catalog
