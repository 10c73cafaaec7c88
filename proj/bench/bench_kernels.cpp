#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <omp.h>

#include "chordenum/octahedron.hpp"
#include "chordenum/oracle.hpp"

using namespace chordenum;

namespace {

template <typename F>
double seconds(F f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void row(const std::string& name, double serial, double parallel, bool agree) {
  std::cout << std::left << std::setw(34) << name << std::right << std::fixed << std::setprecision(3)
            << std::setw(10) << serial << std::setw(10) << parallel << std::setw(9) << serial / parallel
            << (agree ? "" : "  MISMATCH") << "\n";
}

}  // namespace

// usage: bench_kernels [n]   (default 7)
int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 7;
  const oracle::Options serial{9, Execution::serial};
  const oracle::Options parallel{9, Execution::parallel};
  std::cout << "threads " << omp_get_max_threads() << ", n = " << n << "\n";
  std::cout << std::left << std::setw(34) << "kernel" << std::right << std::setw(10) << "serial" << std::setw(10)
            << "parallel" << std::setw(9) << "speedup" << "\n";
  int mismatches = 0;
  {
    Count a, b;
    const double s = seconds([&] { a = oracle::count_labelled(n, Topology::circular(), oracle::Family::simple, serial); });
    const double p = seconds([&] { b = oracle::count_labelled(n, Topology::circular(), oracle::Family::simple, parallel); });
    row("labelled simple", s, p, a == b);
    mismatches += a == b ? 0 : 1;
  }
  {
    std::map<std::pair<int, int>, Count> a, b;
    const double s = seconds([&] { a = oracle::classify_table(n, Topology::linear(), serial); });
    const double p = seconds([&] { b = oracle::classify_table(n, Topology::linear(), parallel); });
    row("classify linear", s, p, a == b);
    mismatches += a == b ? 0 : 1;
  }
  for (auto group : {GroupKind::cyclic, GroupKind::dihedral}) {
    oracle::OrbitReport a, b;
    const double s = seconds([&] { a = oracle::count_orbits(n, group, oracle::Family::loopless, serial); });
    const double p = seconds([&] { b = oracle::count_orbits(n, group, oracle::Family::loopless, parallel); });
    const bool agree = a.orbit_count == b.orbit_count && a.fixed_counts == b.fixed_counts;
    row(std::string("orbits loopless ") + (group == GroupKind::cyclic ? "cyclic" : "dihedral"), s, p, agree);
    mismatches += agree ? 0 : 1;
  }
  if (n <= 6) {
    octahedron::CycleCount a, b;
    const double s = seconds([&] { a = octahedron::count_cycles(n, {6, Execution::serial}); });
    const double p = seconds([&] { b = octahedron::count_cycles(n, {6, Execution::parallel}); });
    const bool agree = a.labelled == b.labelled && a.orbits == b.orbits;
    row("octahedron cycles", s, p, agree);
    mismatches += agree ? 0 : 1;
  }
  return mismatches == 0 ? 0 : 1;
}
