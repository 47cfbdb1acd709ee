#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "casimir/algebra_file.hpp"
#include "casimir/commands.hpp"

#include "helpers.hpp"

using namespace casimir::cli;
using casimir::exact::Rational;

namespace {

int run_cli(const std::vector<std::string>& args, std::string* out_text = nullptr,
            std::string* err_text = nullptr) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return code;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Writes content to a throwaway file and returns its path.
class TempFile {
 public:
  explicit TempFile(const std::string& content) {
    path_ = (std::filesystem::temp_directory_path() /
             ("casimir_test_" + std::to_string(counter_++) + ".json"))
                .string();
    std::ofstream out(path_, std::ios::binary);
    out << content;
  }
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }

 private:
  static inline int counter_ = 0;
  std::string path_;
};

}  // namespace

TEST_CASE("minimal file parses with defaults") {
  AlgebraFile f = parse_algebra(R"({"dim":2, "brackets":[{"i":1,"j":2,"coeffs":{"2":"1"}}]})");
  CHECK(f.dim == 2);
  CHECK(f.basis == std::vector<std::string>{"e1", "e2"});
  CHECK(f.name.empty());
  auto c = f.to_constants();
  CHECK(c.c(0, 1, 1) == 1);
  CHECK(!f.levi.has_value());
  CHECK(!f.expected.has_value());
}

TEST_CASE("parse rejects malformed input with field diagnostics") {
  auto expect_error = [](const std::string& text, const std::string& needle) {
    try {
      parse_algebra(text);
      FAIL_CHECK("expected ParseError for: " << text);
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };

  expect_error("not json", "malformed JSON");
  expect_error(R"({"brackets":[]})", "dim");
  expect_error(R"({"dim":2, "brackets":[{"i":1,"j":2,"coeffs":{"2":"1/0"}}]})",
               "denominator");
  expect_error(R"({"dim":2, "brackets":[{"i":1,"j":2,"coeffs":{"2":"0.5"}}]})",
               "bad rational");
  expect_error(R"({"dim":2, "brackets":[{"i":1,"j":1,"coeffs":{"2":"1"}}]})", "diagonal");
  expect_error(R"({"dim":2, "brackets":[{"i":2,"j":1,"coeffs":{"2":"1"}}]})", "i < j");
  expect_error(R"({"dim":2, "brackets":[{"i":1,"j":3,"coeffs":{"2":"1"}}]})",
               "out of range");
  expect_error(R"({"dim":2, "brackets":[{"i":1,"j":2,"coeffs":{"7":"1"}}]})",
               "out of range");
  expect_error(
      R"({"dim":2, "brackets":[{"i":1,"j":2,"coeffs":{"2":"1"}},{"i":1,"j":2,"coeffs":{"1":"1"}}]})",
      "duplicate");
  expect_error(R"({"dim":2, "basis":["a"]})", "basis");
  expect_error(R"({"dim":2, "levi":[["1"]]})", "levi[0]");
  expect_error(R"({"dim":2, "unknown_key":1})", "unknown key");
  expect_error(R"({"dim":2, "expected":{"bogus":1}})", "unknown key");
  expect_error(R"({"dim":0})", "dim");
}

TEST_CASE("serialization round-trips every catalog entry") {
  for (const AlgebraFile& f : catalog()) {
    AlgebraFile reparsed = parse_algebra(serialize(f), f.name);
    CHECK(reparsed == f);
    CHECK(serialize(reparsed) == serialize(f));
  }
}

TEST_CASE("bundled catalog files on disk match the built-in catalog") {
  for (const AlgebraFile& f : catalog()) {
    std::string path = testutil::catalog_path(f.name);
    CHECK(read_file(path) == serialize(f));
    AlgebraFile from_disk = load_algebra(path);
    CHECK(from_disk == f);
  }
}

TEST_CASE("count command prints the bare integer") {
  std::string out;
  CHECK(run_cli({"count", testutil::catalog_path("heisenberg3")}, &out) == 0);
  CHECK(out == "1\n");

  CHECK(run_cli({"count", testutil::catalog_path("sl2_h3")}, &out) == 0);
  CHECK(out == "2\n");
}

TEST_CASE("validate command exit codes") {
  std::string out;
  CHECK(run_cli({"validate", testutil::catalog_path("sl2")}, &out) == 0);
  CHECK(out == "ok\n");

  TempFile broken(R"({"dim":3, "brackets":[
    {"i":1,"j":2,"coeffs":{"3":"1"}},
    {"i":1,"j":3,"coeffs":{"1":"-1"}},
    {"i":2,"j":3,"coeffs":{"2":"2"}}]})");
  CHECK(run_cli({"validate", broken.path()}, &out) == 1);
  CHECK(out.find("triple (1, 2, 3)") != std::string::npos);
}

TEST_CASE("invariants command reports an empty set with the count note") {
  std::string out;
  CHECK(run_cli({"invariants", testutil::catalog_path("aff1"), "--max-degree", "3"}, &out) ==
        0);
  CHECK(out.find("invariant count (dim minus generic rank): 0") != std::string::npos);
  CHECK(out.find("count matched: yes") != std::string::npos);
}

TEST_CASE("check command passes on catalog entries") {
  std::string out;
  CHECK(run_cli({"check", testutil::catalog_path("sl2")}, &out) == 0);
  CHECK(out.find("all checks passed") != std::string::npos);

  // A file whose expected block disagrees with the computation fails.
  TempFile wrong(R"({"dim":3, "brackets":[{"i":1,"j":2,"coeffs":{"3":"1"}}],
                     "expected":{"invariant_count":2}})");
  CHECK(run_cli({"check", wrong.path()}, &out) == 1);
  CHECK(out.find("FAIL expected_invariant_count") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
  std::string out, err;
  CHECK(run_cli({"frobnicate", "x.json"}, &out, &err) == 2);
  CHECK(run_cli({}, &out, &err) == 2);
  CHECK(run_cli({"count"}, &out, &err) == 2);
  CHECK(run_cli({"invariants", testutil::catalog_path("sl2"), "--max-degree", "0"}, &out,
                &err) == 2);
  CHECK(run_cli({"count", "/nonexistent/path.json"}, &out, &err) == 2);
  CHECK(err.find("error") != std::string::npos);
}

TEST_CASE("help exits zero") {
  std::string out;
  CHECK(run_cli({"--help"}, &out) == 0);
  CHECK(out.find("casimir") != std::string::npos);
}

TEST_CASE("machine-readable check output is byte-stable") {
  for (const char* name : {"sl2", "aff1", "heisenberg3"}) {
    std::string first, second;
    CHECK(run_cli({"check", testutil::catalog_path(name), "--json"}, &first) == 0);
    CHECK(run_cli({"check", testutil::catalog_path(name), "--json"}, &second) == 0);
    CHECK(first == second);
    CHECK(first.find("\"all_pass\": true") != std::string::npos);
  }
}

TEST_CASE("quiet mode trims informational output") {
  std::string out;
  CHECK(run_cli({"check", testutil::catalog_path("so3"), "--quiet"}, &out) == 0);
  CHECK(out.empty());
  CHECK(run_cli({"validate", testutil::catalog_path("so3"), "--quiet"}, &out) == 0);
  CHECK(out.empty());
}

TEST_CASE("catalog listing") {
  std::string out;
  CHECK(run_cli({"catalog"}, &out) == 0);
  CHECK(out.find("sl2_h3 (dim 6)") != std::string::npos);
  for (const AlgebraFile& f : catalog()) CHECK(out.find(f.name) != std::string::npos);
}
