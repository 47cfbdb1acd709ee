#include "casimir/algebra_file.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace casimir::cli {

using nlohmann::ordered_json;

liealg::StructureConstants AlgebraFile::to_constants() const {
  liealg::StructureConstants c(dim, basis);
  for (const BracketEntry& entry : brackets)
    for (const auto& [k, value] : entry.coeffs) c.set(entry.i, entry.j, k, value);
  return c;
}

namespace {

[[noreturn]] void fail(const std::string& origin, const std::string& message) {
  throw ParseError(origin.empty() ? message : origin + ": " + message);
}

exact::Rational parse_rational_field(const std::string& origin, const std::string& field,
                                     const ordered_json& node) {
  if (!node.is_string()) fail(origin, field + ": rational must be a string");
  auto value = exact::parse_rational(node.get<std::string>());
  if (!value)
    fail(origin, field + ": bad rational '" + node.get<std::string>() +
                     "' (expected -?digits(/digits)? with nonzero denominator)");
  return *value;
}

int parse_index(const std::string& origin, const std::string& field,
                const ordered_json& node, int dim) {
  if (!node.is_number_integer())
    fail(origin, field + ": index must be an integer");
  long long v = node.get<long long>();
  if (v < 1 || v > dim)
    fail(origin, field + ": index " + std::to_string(v) + " out of range 1.." +
                     std::to_string(dim));
  return static_cast<int>(v - 1);
}

void check_keys(const std::string& origin, const std::string& field,
                const ordered_json& node, const std::vector<std::string>& allowed) {
  for (const auto& [key, value] : node.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      fail(origin, field + ": unknown key '" + key + "'");
  }
}

}  // namespace

AlgebraFile parse_algebra(const std::string& json_text, const std::string& origin) {
  ordered_json root;
  try {
    root = ordered_json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(origin, std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) fail(origin, "top level must be an object");
  check_keys(origin, "top level", root,
             {"name", "dim", "basis", "brackets", "levi", "expected"});

  AlgebraFile f;
  if (root.contains("name")) {
    if (!root["name"].is_string()) fail(origin, "name: must be a string");
    f.name = root["name"].get<std::string>();
  }

  if (!root.contains("dim") || !root["dim"].is_number_integer())
    fail(origin, "dim: required integer");
  long long dim = root["dim"].get<long long>();
  if (dim < 1 || dim > 64) fail(origin, "dim: must be between 1 and 64");
  f.dim = static_cast<int>(dim);

  if (root.contains("basis")) {
    if (!root["basis"].is_array()) fail(origin, "basis: must be an array of strings");
    for (const auto& item : root["basis"]) {
      if (!item.is_string()) fail(origin, "basis: must be an array of strings");
      f.basis.push_back(item.get<std::string>());
    }
    if (static_cast<int>(f.basis.size()) != f.dim)
      fail(origin, "basis: expected " + std::to_string(f.dim) + " labels, got " +
                       std::to_string(f.basis.size()));
  } else {
    for (int i = 0; i < f.dim; ++i) f.basis.push_back("e" + std::to_string(i + 1));
  }

  if (root.contains("brackets")) {
    if (!root["brackets"].is_array()) fail(origin, "brackets: must be an array");
    int index = 0;
    for (const auto& node : root["brackets"]) {
      std::string field = "brackets[" + std::to_string(index) + "]";
      if (!node.is_object()) fail(origin, field + ": must be an object");
      check_keys(origin, field, node, {"i", "j", "coeffs"});
      if (!node.contains("i") || !node.contains("j") || !node.contains("coeffs"))
        fail(origin, field + ": requires keys i, j, coeffs");
      BracketEntry entry;
      entry.i = parse_index(origin, field + ".i", node["i"], f.dim);
      entry.j = parse_index(origin, field + ".j", node["j"], f.dim);
      if (entry.i == entry.j)
        fail(origin, field + ": diagonal bracket forbidden (antisymmetry)");
      if (entry.i > entry.j)
        fail(origin, field + ": requires i < j (store [v_j, v_i] as its negative)");
      for (const BracketEntry& prev : f.brackets)
        if (prev.i == entry.i && prev.j == entry.j)
          fail(origin, field + ": duplicate bracket (" + std::to_string(entry.i + 1) +
                           ", " + std::to_string(entry.j + 1) + ")");
      if (!node["coeffs"].is_object()) fail(origin, field + ".coeffs: must be an object");
      for (const auto& [key, value] : node["coeffs"].items()) {
        int k;
        try {
          size_t used = 0;
          k = std::stoi(key, &used);
          if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
          fail(origin, field + ".coeffs: bad index key '" + key + "'");
        }
        if (k < 1 || k > f.dim)
          fail(origin, field + ".coeffs: index " + key + " out of range 1.." +
                           std::to_string(f.dim));
        exact::Rational r = parse_rational_field(origin, field + ".coeffs." + key, value);
        if (r != 0) entry.coeffs[k - 1] = r;
      }
      f.brackets.push_back(std::move(entry));
      ++index;
    }
    std::sort(f.brackets.begin(), f.brackets.end(),
              [](const BracketEntry& a, const BracketEntry& b) {
                return std::pair(a.i, a.j) < std::pair(b.i, b.j);
              });
  }

  if (root.contains("levi")) {
    if (!root["levi"].is_array()) fail(origin, "levi: must be an array of vectors");
    std::vector<std::vector<exact::Rational>> rows;
    int index = 0;
    for (const auto& row : root["levi"]) {
      std::string field = "levi[" + std::to_string(index) + "]";
      if (!row.is_array()) fail(origin, field + ": must be an array");
      if (static_cast<int>(row.size()) != f.dim)
        fail(origin, field + ": expected " + std::to_string(f.dim) + " entries");
      std::vector<exact::Rational> vec;
      int col = 0;
      for (const auto& item : row) {
        vec.push_back(
            parse_rational_field(origin, field + "[" + std::to_string(col) + "]", item));
        ++col;
      }
      rows.push_back(std::move(vec));
      ++index;
    }
    f.levi = std::move(rows);
  }

  if (root.contains("expected")) {
    const auto& node = root["expected"];
    if (!node.is_object()) fail(origin, "expected: must be an object");
    check_keys(origin, "expected", node,
               {"invariant_count", "radical_nilpotent", "perfect"});
    Expected expected;
    if (node.contains("invariant_count")) {
      if (!node["invariant_count"].is_number_integer() ||
          node["invariant_count"].get<long long>() < 0)
        fail(origin, "expected.invariant_count: must be a nonnegative integer");
      expected.invariant_count = static_cast<int>(node["invariant_count"].get<long long>());
    }
    if (node.contains("radical_nilpotent")) {
      if (!node["radical_nilpotent"].is_boolean())
        fail(origin, "expected.radical_nilpotent: must be a boolean");
      expected.radical_nilpotent = node["radical_nilpotent"].get<bool>();
    }
    if (node.contains("perfect")) {
      if (!node["perfect"].is_boolean()) fail(origin, "expected.perfect: must be a boolean");
      expected.perfect = node["perfect"].get<bool>();
    }
    f.expected = expected;
  }

  return f;
}

AlgebraFile load_algebra(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_algebra(buffer.str(), path);
}

std::string serialize(const AlgebraFile& f) {
  ordered_json root;
  root["name"] = f.name;
  root["dim"] = f.dim;
  root["basis"] = f.basis;
  ordered_json brackets = ordered_json::array();
  std::vector<BracketEntry> sorted = f.brackets;
  std::sort(sorted.begin(), sorted.end(), [](const BracketEntry& a, const BracketEntry& b) {
    return std::pair(a.i, a.j) < std::pair(b.i, b.j);
  });
  for (const BracketEntry& entry : sorted) {
    ordered_json node;
    node["i"] = entry.i + 1;
    node["j"] = entry.j + 1;
    ordered_json coeffs = ordered_json::object();
    for (const auto& [k, value] : entry.coeffs)
      coeffs[std::to_string(k + 1)] = exact::to_string(value);
    node["coeffs"] = coeffs;
    brackets.push_back(node);
  }
  root["brackets"] = brackets;
  if (f.levi) {
    ordered_json levi = ordered_json::array();
    for (const auto& row : *f.levi) {
      ordered_json vec = ordered_json::array();
      for (const auto& value : row) vec.push_back(exact::to_string(value));
      levi.push_back(vec);
    }
    root["levi"] = levi;
  }
  if (f.expected) {
    ordered_json expected = ordered_json::object();
    if (f.expected->invariant_count) expected["invariant_count"] = *f.expected->invariant_count;
    if (f.expected->radical_nilpotent)
      expected["radical_nilpotent"] = *f.expected->radical_nilpotent;
    if (f.expected->perfect) expected["perfect"] = *f.expected->perfect;
    root["expected"] = expected;
  }
  return root.dump(2) + "\n";
}

}  // namespace casimir::cli
