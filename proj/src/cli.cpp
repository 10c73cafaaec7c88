#include "chordenum/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "chordenum/catalog.hpp"
#include "chordenum/generating_functions.hpp"
#include "chordenum/octahedron.hpp"
#include "chordenum/reflection.hpp"
#include "chordenum/symmetry.hpp"
#include "chordenum/verify.hpp"

namespace chordenum::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { table, csv, json, bfile };

Format parse_format(const std::string& text) {
  if (text == "table") return Format::table;
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  if (text == "bfile") return Format::bfile;
  throw UsageError("unknown format '" + text + "'");
}

void reject_bfile(Format f, const std::string& command) {
  if (f == Format::bfile) throw UsageError(command + " has no b-file form");
}

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string rational_text(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

void emit_sequence(std::ostream& out, const SequenceTable& s, int n_max, Format f) {
  switch (f) {
    case Format::table: {
      const std::size_t width = std::to_string(n_max).size();
      out << pad_left("n", width) << "  " << s.name << "\n";
      for (int n = 1; n <= n_max; ++n) out << pad_left(std::to_string(n), width) << "  " << s.at(n) << "\n";
      break;
    }
    case Format::csv:
      out << "n," << s.name << "\n";
      for (int n = 1; n <= n_max; ++n) out << n << "," << s.at(n) << "\n";
      break;
    case Format::json: {
      json doc = {{"family", s.name}, {"values", json::array()}};
      for (int n = 1; n <= n_max; ++n) doc["values"].push_back({{"n", n}, {"value", to_decimal(s.at(n))}});
      out << doc.dump(2) << "\n";
      break;
    }
    case Format::bfile:
      for (int n = 1; n <= n_max; ++n) out << n << " " << s.at(n) << "\n";
      break;
  }
}

void emit_triangle(std::ostream& out, const TriangleTable& t, const std::vector<std::string>& keys, int rows,
                   Format f) {
  reject_bfile(f, "triangle");
  if (f == Format::json) {
    json doc = {{"triangle", t.name}, {"keys", keys}, {"cells", json::array()}, {"row_sums", json::array()}};
    for (const auto& [key, value] : t.cells) {
      if (key[0] > rows) continue;
      json cell = json::object();
      for (std::size_t i = 0; i < keys.size(); ++i) cell[keys[i]] = key[i];
      cell["value"] = to_decimal(value);
      doc["cells"].push_back(cell);
    }
    for (int r = 0; r <= rows; ++r) doc["row_sums"].push_back({{keys[0], r}, {"total", to_decimal(t.row_sum(r))}});
    out << doc.dump(2) << "\n";
    return;
  }
  const char* sep = f == Format::csv ? "," : " ";
  for (std::size_t i = 0; i < keys.size(); ++i) out << keys[i] << sep;
  out << "value\n";
  for (int r = 0; r <= rows; ++r) {
    for (const auto& [key, value] : t.cells) {
      if (key[0] != r) continue;
      for (int k : key) out << k << sep;
      out << value << "\n";
    }
    if (f == Format::table) out << "# " << keys[0] << "=" << r << " total=" << t.row_sum(r) << "\n";
  }
}

void emit_series(std::ostream& out, const gf::NamedSeries& series, const std::string& name, Format f) {
  reject_bfile(f, "series");
  json doc = {{"series", name}, {"coefficients", json::array()}};
  const char* sep = f == Format::csv ? "," : " ";
  if (const auto* r = std::get_if<gf::RationalSeries>(&series)) {
    const auto ints = gf::integer_coeffs(*r);
    if (f != Format::json) out << "n" << sep << "coefficient" << sep << "n!*coefficient\n";
    for (int n = 0; n <= r->order(); ++n) {
      const auto i = static_cast<std::size_t>(n);
      if (f == Format::json) {
        doc["coefficients"].push_back(
            {{"n", n}, {"coefficient", rational_text((*r)[n])}, {"integer", to_decimal(ints[i])}});
      } else {
        out << n << sep << rational_text((*r)[n]) << sep << ints[i] << "\n";
      }
    }
  } else {
    const auto& m = std::get<gf::MarkerSeries>(series);
    const auto ints = gf::integer_coeff_table(m, name);
    if (f != Format::json) out << "n" << sep << "k" << sep << "l" << sep << "coefficient" << sep << "n!*coefficient\n";
    for (int n = 0; n <= m.order(); ++n) {
      for (const auto& [e, c] : m[n].terms()) {
        const Count integer = ints.at({n, e.first, e.second});
        if (f == Format::json) {
          doc["coefficients"].push_back({{"n", n},
                                         {"k", e.first},
                                         {"l", e.second},
                                         {"coefficient", rational_text(c)},
                                         {"integer", to_decimal(integer)}});
        } else {
          out << n << sep << e.first << sep << e.second << sep << rational_text(c) << sep << integer << "\n";
        }
      }
    }
  }
  if (f == Format::json) out << doc.dump(2) << "\n";
}

void emit_fixed(std::ostream& out, int n, Format f) {
  reject_bfile(f, "fixed");
  const auto loopless = symmetry::loopless_fixed(n);
  const auto simple = symmetry::simple_fixed(n);
  const auto lr = reflection::loopless_reflection(n);
  const auto sr = reflection::simple_reflection_tables(n);
  const auto lc = catalog::family_sequence("loopless-cyclic", n);
  const auto ld = catalog::family_sequence("loopless-dihedral", n);
  const auto sc = catalog::family_sequence("simple-cyclic", n);
  const auto sd = catalog::family_sequence("simple-dihedral", n);
  const auto i = static_cast<std::size_t>(n);
  if (f == Format::json) {
    json doc = {{"n", n}, {"rotations", json::array()}};
    for (const auto& [d, value] : loopless.by_divisor) {
      doc["rotations"].push_back({{"d", d},
                                  {"phi", euler_phi(d)},
                                  {"loopless", to_decimal(value)},
                                  {"simple", to_decimal(simple.by_divisor.at(d))}});
    }
    doc["vertex_axis"] = {{"loopless", to_decimal(lr.vertex[i])}, {"simple", to_decimal(sr.vertex[i])}};
    doc["edge_axis"] = {{"loopless", to_decimal(lr.edge[i])}, {"simple", to_decimal(sr.edge[i])}};
    doc["cyclic"] = {{"loopless", to_decimal(lc[i])}, {"simple", to_decimal(sc[i])}};
    doc["dihedral"] = {{"loopless", to_decimal(ld[i])}, {"simple", to_decimal(sd[i])}};
    out << doc.dump(2) << "\n";
    return;
  }
  const char* sep = f == Format::csv ? "," : " ";
  out << "d" << sep << "phi" << sep << "loopless" << sep << "simple\n";
  for (const auto& [d, value] : loopless.by_divisor) {
    out << d << sep << euler_phi(d) << sep << value << sep << simple.by_divisor.at(d) << "\n";
  }
  out << "vertex-axis" << sep << sep << lr.vertex[i] << sep << sr.vertex[i] << "\n";
  out << "edge-axis" << sep << sep << lr.edge[i] << sep << sr.edge[i] << "\n";
  out << "cyclic" << sep << sep << lc[i] << sep << sc[i] << "\n";
  out << "dihedral" << sep << sep << ld[i] << sep << sd[i] << "\n";
}

void emit_octahedron(std::ostream& out, int n, bool list, Format f) {
  reject_bfile(f, "octahedron");
  const auto counts = octahedron::count_cycles(n);
  std::vector<octahedron::HamCycle> cycles;
  if (list) cycles = octahedron::list_cycles(n);
  if (f == Format::json) {
    json doc = {{"n", n}, {"labelled", to_decimal(counts.labelled)}, {"orbits", to_decimal(counts.orbits)}};
    if (list) {
      doc["cycles"] = json::array();
      for (const auto& c : cycles) doc["cycles"].push_back(c.vertices());
    }
    out << doc.dump(2) << "\n";
    return;
  }
  const char* sep = f == Format::csv ? "," : " ";
  out << "labelled" << sep << counts.labelled << "\n";
  out << "orbits" << sep << counts.orbits << "\n";
  for (const auto& c : cycles) out << c.to_string() << "\n";
}

int emit_checks(std::ostream& out, const std::vector<CheckResult>& checks, Format f) {
  reject_bfile(f, "verify");
  const auto failed = std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.ok; });
  if (f == Format::json) {
    json doc = {{"checks", json::array()}, {"failed", failed}};
    for (const auto& c : checks) {
      doc["checks"].push_back(
          {{"name", c.name}, {"n", c.n}, {"expected", c.expected}, {"got", c.got}, {"ok", c.ok}});
    }
    out << doc.dump(2) << "\n";
  } else if (f == Format::csv) {
    out << "name,n,expected,got,status\n";
    for (const auto& c : checks) {
      out << c.name << "," << c.n << "," << c.expected << "," << c.got << "," << (c.ok ? "OK" : "FAIL") << "\n";
    }
  } else {
    for (const auto& c : checks) out << format_check(c) << "\n";
    out << "SUMMARY checks=" << checks.size() << " failed=" << failed << "\n";
  }
  return failed == 0 ? kOk : kVerifyFailed;
}

struct Settings {
  std::string name;
  int max = 10;
  int order = 10;
  int n = 0;
  int d = 2;
  std::string format = "table";
  std::string out_path;
  std::vector<std::string> bfiles;
  std::string family;
  int oracle_cap = oracle::Options{}.cap;
  bool tables = false;
  bool list = false;
};

void require_positive(int value, const std::string& flag) {
  if (value < 1) throw UsageError(flag + " must be at least 1");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration of chord diagrams", "chordenum"};
  app.require_subcommand(1, 1);
  Settings s;
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", s.format, "table, csv, json or bfile");
    sub->add_option("--out", s.out_path, "write to this file instead of standard output");
  };
  auto* seq = app.add_subcommand("seq", "print a sequence for n = 1..max");
  seq->add_option("family", s.name, "sequence family")->required();
  seq->add_option("--max", s.max, "largest n");
  add_output(seq);
  auto* tri = app.add_subcommand("triangle", "print a count triangle");
  tri->add_option("name", s.name, "a_nk, a_nkl, ahat_nl, abar_mk, rbar_nk or sbar_nk")->required();
  tri->add_option("--max", s.max, "largest first index");
  tri->add_option("--d", s.d, "symmetry order for abar_mk");
  add_output(tri);
  auto* ser = app.add_subcommand("series", "print generating function coefficients");
  ser->add_option("name", s.name, "b, phi, psi, chi, w_zt, w_tzx, w_tilde, W or U")->required();
  ser->add_option("--order", s.order, "truncation order");
  add_output(ser);
  auto* fix = app.add_subcommand("fixed", "fixed-point counts for every symmetry of 2n points");
  fix->add_option("--n", s.n, "chord count")->required();
  add_output(fix);
  auto* ver = app.add_subcommand("verify", "run the consistency checks");
  ver->add_option("--max", s.max, "largest n for the brute-force comparisons");
  ver->add_flag("--tables", s.tables, "only compare against the published tables");
  ver->add_option("--bfile", s.bfiles, "local b-file to compare");
  ver->add_option("--family", s.family, "family for --bfile when the name does not tell");
  ver->add_option("--oracle-cap", s.oracle_cap, "largest n the brute-force oracle accepts");
  add_output(ver);
  auto* oct = app.add_subcommand("octahedron", "Hamiltonian cycles of the n-dimensional octahedron");
  oct->add_option("--n", s.n, "dimension")->required();
  oct->add_flag("--list", s.list, "also print every cycle");
  add_output(oct);

  bool verify_max_given = false;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    verify_max_given = ver->count("--max") > 0;
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  try {
    const Format format = parse_format(s.format);
    if (!s.out_path.empty()) {
      file.open(s.out_path);
      if (!file) throw UsageError("cannot write " + s.out_path);
      sink = &file;
    }
    if (seq->parsed()) {
      require_positive(s.max, "--max");
      if (!catalog::is_family(s.name)) throw UsageError("unknown family '" + s.name + "'");
      emit_sequence(*sink, catalog::family_sequence(s.name, s.max), s.max, format);
      return kOk;
    }
    if (tri->parsed()) {
      if (s.max < 0) throw UsageError("--max must be non-negative");
      if (!catalog::is_triangle(s.name)) throw UsageError("unknown triangle '" + s.name + "'");
      if (s.name == "abar_mk" && (s.d < 2 || s.d % 2 != 0)) throw UsageError("--d must be even");
      emit_triangle(*sink, catalog::triangle(s.name, s.max, s.d), catalog::triangle_key_names(s.name), s.max, format);
      return kOk;
    }
    if (ser->parsed()) {
      if (s.order < 0) throw UsageError("--order must be non-negative");
      const auto& names = gf::series_names();
      if (std::find(names.begin(), names.end(), s.name) == names.end()) {
        throw UsageError("unknown series '" + s.name + "'");
      }
      emit_series(*sink, gf::named_series(s.name, s.order), s.name, format);
      return kOk;
    }
    if (fix->parsed()) {
      require_positive(s.n, "--n");
      emit_fixed(*sink, s.n, format);
      return kOk;
    }
    if (oct->parsed()) {
      require_positive(s.n, "--n");
      if (s.n > octahedron::Options{}.cap) {
        throw UsageError("--n above " + std::to_string(octahedron::Options{}.cap) + " is not enumerated");
      }
      emit_octahedron(*sink, s.n, s.list, format);
      return kOk;
    }
    // verify
    const int oracle_max = verify_max_given ? s.max : 5;
    require_positive(oracle_max, "--max");
    const oracle::Options options{s.oracle_cap, Execution::parallel};
    if (oracle_max > options.cap) {
      throw UsageError("--max " + std::to_string(oracle_max) + " exceeds the oracle cap " +
                       std::to_string(options.cap));
    }
    std::vector<std::pair<std::string, std::vector<std::pair<int, Count>>>> bfiles;
    for (const auto& path : s.bfiles) {
      std::string family = s.family.empty() ? verify::detect_bfile_family(path) : s.family;
      if (family.empty()) throw UsageError("cannot tell the family of " + path + "; pass --family");
      if (!catalog::is_family(family)) throw UsageError("unknown family '" + family + "'");
      try {
        bfiles.emplace_back(family, verify::read_bfile(path));
      } catch (const std::runtime_error& e) {
        throw UsageError(e.what());
      }
    }
    std::vector<CheckResult> checks;
    auto add = [&](const std::vector<CheckResult>& more) { checks.insert(checks.end(), more.begin(), more.end()); };
    add(verify::golden_loopless());
    add(verify::golden_simple());
    if (!s.tables) {
      add(verify::identity_suite());
      add(verify::oracle_suite(oracle_max, options));
      add(verify::series_suite());
      add(verify::burnside_suite(40, std::min(oracle_max, 6), options));
      add(verify::octahedron_suite(std::min(oracle_max, 5)));
    }
    for (const auto& [family, entries] : bfiles) add(verify::bfile_suite(entries, family));
    return emit_checks(*sink, checks, format);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace chordenum::cli
