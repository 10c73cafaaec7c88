#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "chordenum/cli.hpp"
#include "chordenum/golden.hpp"
#include "chordenum/octahedron.hpp"
#include "chordenum/verify.hpp"

using namespace chordenum;

namespace {

constexpr double kTableSeconds = 2.0;
constexpr double kSweepSeconds = 60.0;
constexpr int kSweepMax = 7;

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome from_checks(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks) {
    if (!c.ok) return {false, format_check(c)};
  }
  return {!checks.empty(), std::to_string(checks.size()) + " checks"};
}

Outcome timed(double limit, const std::function<std::vector<CheckResult>()>& suite) {
  const auto start = std::chrono::steady_clock::now();
  auto outcome = from_checks(suite());
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream detail;
  detail << outcome.detail << ", " << std::fixed << std::setprecision(3) << seconds << " s (limit " << limit << " s)";
  return {outcome.pass && seconds < limit, detail.str()};
}

// b-files written from the published columns, so the comparison does not
// reuse any computed value.
Outcome bfiles() {
  const auto dir = std::filesystem::temp_directory_path() / "chordenum_acceptance";
  std::filesystem::create_directories(dir);
  auto write = [&](const std::string& name, std::size_t column, int bump_at) {
    const auto path = dir / name;
    std::ofstream out(path);
    out << "# synthetic b-file\n";
    const auto& table = golden::loopless_table();
    for (std::size_t i = 0; i < table.size(); ++i) {
      const int n = static_cast<int>(i) + 1;
      Count v = from_decimal(table[i][column]);
      if (n == bump_at) v += 1;
      out << n << " " << v << "\n";
    }
    return path.string();
  };
  std::ostringstream sink;
  std::ostringstream err;
  const int chord = cli::run({"verify", "--tables", "--bfile", write("b003436.txt", 1, 0)}, sink, err);
  const int dihedral = cli::run({"verify", "--tables", "--bfile", write("b003437.txt", 3, 0)}, sink, err);
  const int mismatched = cli::run({"verify", "--tables", "--bfile", write("b003437_bad.txt", 3, 11)}, sink, err);
  const bool names_index = sink.str().find("bfile:loopless-dihedral n=11") != std::string::npos;
  std::ostringstream detail;
  detail << "exit codes " << chord << "/" << dihedral << " on matching files, " << mismatched << " on a mismatch";
  return {chord == cli::kOk && dihedral == cli::kOk && mismatched == cli::kVerifyFailed && names_index, detail.str()};
}

Outcome octahedron_small() {
  const auto three = octahedron::count_cycles(3);
  if (three.labelled != 16 || three.orbits != 2) return {false, "n=3 gave " + to_decimal(three.labelled) + "/" + to_decimal(three.orbits)};
  return from_checks(verify::octahedron_suite(5));
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"table 1 reproduction, n = 1..20",
       [] { return timed(kTableSeconds, [] { return verify::golden_loopless(); }); }},
      {"table 2 reproduction, n = 1..20",
       [] { return timed(kTableSeconds, [] { return verify::golden_simple(); }); }},
      {"oracle equivalence, n <= 7",
       [] { return timed(kSweepSeconds, [] { return verify::oracle_suite(kSweepMax); }); }},
      {"generating function cross-checks", [] { return from_checks(verify::series_suite()); }},
      {"Burnside integrality n <= 40, orbit double-counting n <= 6",
       [] { return from_checks(verify::burnside_suite(40, 6)); }},
      {"octahedron cycle counts, n <= 5", octahedron_small},
      {"b-file prefix agreement", bfiles},
      {"three-term and binomial recurrences, n <= 20", [] { return from_checks(verify::identity_suite(20)); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::cout << "CRITERION " << i + 1 << " " << (o.pass ? "PASS" : "FAIL") << " " << criteria[i].first << " ("
              << o.detail << ")" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
