#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "chordenum/catalog.hpp"
#include "chordenum/cli.hpp"
#include "chordenum/verify.hpp"
#include "doctest.h"

using namespace chordenum;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << contents;
  return path;
}

}  // namespace

TEST_CASE("seq examples") {
  CHECK(run({"seq", "loopless-chord", "--max", "4", "--format", "bfile"}).out == "1 0\n2 1\n3 4\n4 31\n");
  CHECK(run({"seq", "simple-dihedral", "--max", "6", "--format", "bfile"}).out == "1 0\n2 1\n3 1\n4 4\n5 18\n6 116\n");
  CHECK(run({"seq", "all", "--max", "3", "--format", "csv"}).out == "n,all\n1,1\n2,3\n3,15\n");
  const auto table = run({"seq", "loopless-chord", "--max", "4"});
  CHECK(table.code == 0);
  CHECK(lines(table.out) == std::vector<std::string>{"n  loopless-chord", "1  0", "2  1", "3  4", "4  31"});
}

TEST_CASE("exit codes") {
  CHECK(run({"seq", "nope"}).code == cli::kUsage);
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"seq", "all", "--max", "0"}).code == cli::kUsage);
  CHECK(run({"seq", "all", "--format", "xml"}).code == cli::kUsage);
  CHECK(run({"series", "nope"}).code == cli::kUsage);
  CHECK(run({"triangle", "nope"}).code == cli::kUsage);
  CHECK(run({"triangle", "a_nk", "--format", "bfile"}).code == cli::kUsage);
  CHECK(run({"octahedron", "--n", "9"}).code == cli::kUsage);
  CHECK(run({"verify", "--max", "8", "--oracle-cap", "7"}).code == cli::kUsage);
  CHECK(run({"verify", "--bfile", "/nonexistent/b003436.txt"}).code == cli::kUsage);
  CHECK(run({"verify", "--bfile", "/tmp/unnamed.txt"}).code == cli::kUsage);
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("output is deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"seq", "simple-cyclic", "--max", "20", "--format", "json"},
           {"triangle", "a_nkl", "--max", "4"},
           {"series", "w_tzx", "--order", "4", "--format", "csv"},
           {"fixed", "--n", "12"},
           {"octahedron", "--n", "4"}}) {
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("json values round-trip as decimal strings") {
  for (const auto& family : catalog::family_names()) {
    const auto r = run({"seq", family, "--max", "20", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    const auto seq = catalog::family_sequence(family, 20);
    REQUIRE(doc["values"].size() == 20);
    for (const auto& entry : doc["values"]) {
      const int n = entry["n"].get<int>();
      CHECK(from_decimal(entry["value"].get<std::string>()) == seq[static_cast<std::size_t>(n)]);
    }
  }
  const auto doc = nlohmann::json::parse(run({"seq", "loopless-linear", "--max", "20", "--format", "json"}).out);
  CHECK(doc["values"][19]["value"] == "116160936719430292078411");
}

TEST_CASE("b-file output has two fields per line") {
  for (const auto& line : lines(run({"seq", "loopless-dihedral", "--max", "20", "--format", "bfile"}).out)) {
    std::istringstream in(line);
    std::string a, b, c;
    CHECK(static_cast<bool>(in >> a >> b));
    CHECK(!(in >> c));
  }
}

TEST_CASE("series, triangle, fixed and octahedron output") {
  const auto u = lines(run({"series", "U", "--order", "6"}).out);
  REQUIRE(u.size() == 8);
  CHECK(u[5] == "4 7/8 21");
  CHECK(u[7] == "6 41/15 1968");
  const auto t = run({"triangle", "a_nkl", "--max", "3"}).out;
  CHECK(t.find("# n=3 total=105") != std::string::npos);
  const auto f = lines(run({"fixed", "--n", "4", "--format", "csv"}).out);
  CHECK(f[2] == "2,1,15,5");
  CHECK(run({"octahedron", "--n", "3"}).out == "labelled 16\norbits 2\n");
  const auto listed = lines(run({"octahedron", "--n", "3", "--list"}).out);
  CHECK(listed.size() == 18);
}

TEST_CASE("--out writes a file") {
  const auto path = std::filesystem::temp_directory_path() / "chordenum_out_test.txt";
  std::filesystem::remove(path);
  CHECK(run({"seq", "all", "--max", "2", "--format", "bfile", "--out", path.string()}).out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str() == "1 1\n2 3\n");
}

TEST_CASE("verify") {
  const auto ok = run({"verify", "--max", "4"});
  CHECK(ok.code == cli::kOk);
  CHECK(ok.out.find("FAIL") == std::string::npos);
  CHECK(ok.out.find("SUMMARY") != std::string::npos);
  const auto tables = run({"verify", "--tables"});
  CHECK(tables.code == cli::kOk);
  CHECK(lines(tables.out).size() == 161);
}

TEST_CASE("verify against local b-files") {
  const auto good = temp_file("b003436.txt", "# loopless chord diagrams\n1 0\n2 1\n3 4\n4 31\n5 293\n");
  const auto r = run({"verify", "--tables", "--bfile", good.string()});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("CHECK bfile:loopless-chord n=5 expected=293 got=293 OK") != std::string::npos);
  const auto bad = temp_file("b003437.txt", "1 0\n2 1\n3 2\n4 8\n5 29\n");
  const auto b = run({"verify", "--tables", "--bfile", bad.string()});
  CHECK(b.code == cli::kVerifyFailed);
  CHECK(b.out.find("CHECK bfile:loopless-dihedral n=4 expected=8 got=7 FAIL") != std::string::npos);
  CHECK(b.out.find("bfile:loopless-dihedral n=5") == std::string::npos);
  const auto other = temp_file("mine.txt", "1 0\n2 1\n3 1\n");
  CHECK(run({"verify", "--tables", "--bfile", other.string(), "--family", "simple-dihedral"}).code == cli::kOk);
  const auto broken = temp_file("b003436_broken.txt", "1 0 0\n");
  CHECK(run({"verify", "--tables", "--bfile", broken.string()}).code == cli::kUsage);
}

TEST_CASE("b-file parsing") {
  const auto entries = verify::parse_bfile("# c\n\n0 1\n1 0\n  2   1\n");
  REQUIRE(entries.size() == 3);
  CHECK(entries[2].first == 2);
  CHECK(verify::bfile_suite(entries, "loopless-chord").size() == 2);
  CHECK_THROWS(verify::parse_bfile("x 1\n"));
  CHECK(verify::detect_bfile_family("/a/b003436.txt") == "loopless-chord");
  CHECK(verify::detect_bfile_family("/a/b003437.txt") == "loopless-dihedral");
  CHECK(verify::detect_bfile_family("/003436/x.txt").empty());
}
