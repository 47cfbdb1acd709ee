#ifndef CASIMIR_ALGEBRA_FILE_HPP
#define CASIMIR_ALGEBRA_FILE_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "casimir/rational.hpp"
#include "casimir/structure.hpp"

namespace casimir::cli {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One stored bracket [v_i, v_j] = sum_k coeffs[k] v_k with i < j.
/// Indices are 0-based in memory and 1-based in files.
struct BracketEntry {
  int i = 0;
  int j = 0;
  std::map<int, exact::Rational> coeffs;

  bool operator==(const BracketEntry& other) const = default;
};

struct Expected {
  std::optional<int> invariant_count;
  std::optional<bool> radical_nilpotent;
  std::optional<bool> perfect;

  bool operator==(const Expected& other) const = default;
};

/// In-memory form of an algebra description file. Rationals are written as
/// strings ("-3", "1/2") so files stay exact; no floats appear anywhere.
struct AlgebraFile {
  std::string name;
  int dim = 0;
  std::vector<std::string> basis;
  std::vector<BracketEntry> brackets;
  std::optional<std::vector<std::vector<exact::Rational>>> levi;
  std::optional<Expected> expected;

  bool operator==(const AlgebraFile& other) const = default;

  liealg::StructureConstants to_constants() const;
};

/// Strict parse; any malformed field throws ParseError naming the field.
AlgebraFile parse_algebra(const std::string& json_text, const std::string& origin = "");

AlgebraFile load_algebra(const std::string& path);

/// Canonical serialization: fixed key order, brackets sorted by (i, j),
/// coefficients by k. parse(serialize(f)) == f for every valid f.
std::string serialize(const AlgebraFile& f);

/// The bundled test algebras.
std::vector<AlgebraFile> catalog();

}  // namespace casimir::cli

#endif
