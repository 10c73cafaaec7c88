#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "chordenum/count.hpp"
#include "chordenum/marker_polynomial.hpp"
#include "chordenum/series.hpp"

// Closed-form exponential generating functions, evaluated exactly as
// truncated series. Throughout, S = sqrt(1 - 2t).
namespace chordenum::gf {

using RationalSeries = Series<Rational>;
using MarkerSeries = Series<MarkerPolynomial>;

// 1/S: all matchings, (2n-1)!!.
RationalSeries all_matchings(int order);
// exp(-1+S)/S: loopless linear diagrams.
RationalSeries loopless_linear(int order);
// exp(-1+S)(1 + 1/S) - 2 + t: loopless chord diagrams.
RationalSeries loopless_chord(int order);
// 1 - t - exp(-1+S): shifted loopless linear counts, t^n/n! -> a_{n-1}.
RationalSeries loopless_shifted(int order);
// exp((-1+S)(1-z))/S: linear diagrams by chords (t) and loops (z).
MarkerSeries linear_by_loops(int order);
// ((z-1)S + 1)/S^3 * exp((z-1)(1-S) - t(1-x)): linear diagrams with n+1
// chords by loops (z) and parallel pairs (x).
MarkerSeries linear_by_loops_and_parallels(int order);
// S^-3 exp(t(x-1)): the previous one at z = 1.
MarkerSeries linear_by_parallels(int order);
// (1-S)/S^3 exp(-1-t+S): simple linear diagrams with n+1 chords.
RationalSeries simple_linear(int order);
// exp(-1-t+S)/S (1+S) - (2-t)exp(-t): simple chord diagrams.
RationalSeries simple_chord(int order);

// Lookup by CLI name: b, phi, psi, chi, w_zt, w_tzx, w_tilde, W, U.
using NamedSeries = std::variant<RationalSeries, MarkerSeries>;
NamedSeries named_series(const std::string& name, int order);
const std::vector<std::string>& series_names();

struct MarkerAssignment {
  int z = 0;
  int x = 0;
};

// n! * c_n for each coefficient; a non-integer value is a construction bug
// and throws std::logic_error.
std::vector<Count> integer_coeffs(const RationalSeries& series);
std::vector<Count> integer_coeffs(const MarkerSeries& series, MarkerAssignment at);

// n! * [t^n z^k x^l] as a table keyed (n, k, l).
TriangleTable integer_coeff_table(const MarkerSeries& series, const std::string& name);

RationalSeries substitute(const MarkerSeries& series, MarkerAssignment at);

}  // namespace chordenum::gf
