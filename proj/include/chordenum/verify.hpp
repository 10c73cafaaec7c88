#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chordenum/check.hpp"
#include "chordenum/oracle.hpp"

// Verification suites shared by the command line and the acceptance tests.
namespace chordenum::verify {

// Computed n = 1..20 columns against the published tables.
std::vector<CheckResult> golden_loopless();
std::vector<CheckResult> golden_simple();

// Every recurrence module against the brute-force oracle for n = 1..n_max:
// labelled counts, (k,l) cells, d-symmetric columns, rotation- and
// reflection-fixed counts, the mirror tables and orbit counts.
std::vector<CheckResult> oracle_suite(int n_max, const oracle::Options& options = {});

// Series coefficients against recurrences for n <= 25, w(t,z,x) against
// the (k,l) triangle for n <= 12, and the two differential equations.
std::vector<CheckResult> series_suite();

// Integrality of the cyclic and dihedral Burnside sums for n <= n_max, and
// canonical-code orbit counts against Burnside averages for n <= orbit_max.
std::vector<CheckResult> burnside_suite(int n_max = 40, int orbit_max = 6,
                                        const oracle::Options& options = {});

// Cycle counts for n <= n_max against b_n 2^n n! / 4n and ctilde_n.
std::vector<CheckResult> octahedron_suite(int n_max = 5);

// The three-term and binomial-sum recurrences for n <= n_max.
std::vector<CheckResult> identity_suite(int n_max = 20);

// Two-column "index value" lines; '#' comments and blank lines skipped.
// Throws std::runtime_error on a malformed line or unreadable file.
std::vector<std::pair<int, Count>> read_bfile(const std::string& path);
std::vector<std::pair<int, Count>> parse_bfile(const std::string& text);
// loopless-chord for names containing 003436, loopless-dihedral for 003437,
// empty otherwise.
std::string detect_bfile_family(const std::string& path);
// One check per index >= 1 up to and including the first mismatch.
std::vector<CheckResult> bfile_suite(const std::vector<std::pair<int, Count>>& entries,
                                     const std::string& family);

}  // namespace chordenum::verify
