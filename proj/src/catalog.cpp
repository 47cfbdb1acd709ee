#include "casimir/algebra_file.hpp"
#include <algorithm>

namespace casimir::cli {

namespace {

// Brackets are written 1-based here, mirroring the file format.
struct Entry {
  int i, j;
  std::vector<std::pair<int, std::string>> coeffs;
};

AlgebraFile make(const std::string& name, std::vector<std::string> basis,
                 const std::vector<Entry>& entries, std::optional<int> levi_dim,
                 int invariant_count, bool radical_nilpotent, bool perfect) {
  AlgebraFile f;
  f.name = name;
  f.dim = static_cast<int>(basis.size());
  f.basis = std::move(basis);
  for (const Entry& e : entries) {
    BracketEntry b;
    b.i = e.i - 1;
    b.j = e.j - 1;
    for (const auto& [k, text] : e.coeffs) b.coeffs[k - 1] = *exact::parse_rational(text);
    f.brackets.push_back(std::move(b));
  }
  std::sort(f.brackets.begin(), f.brackets.end(),
            [](const BracketEntry& a, const BracketEntry& b) {
              return std::pair(a.i, a.j) < std::pair(b.i, b.j);
            });
  if (levi_dim) {
    std::vector<std::vector<exact::Rational>> rows;
    for (int r = 0; r < *levi_dim; ++r) {
      std::vector<exact::Rational> row(f.dim, exact::Rational(0));
      row[r] = 1;
      rows.push_back(std::move(row));
    }
    f.levi = std::move(rows);
  }
  Expected expected;
  expected.invariant_count = invariant_count;
  expected.radical_nilpotent = radical_nilpotent;
  expected.perfect = perfect;
  f.expected = expected;
  return f;
}

const std::vector<Entry> kSl2{{1, 2, {{3, "1"}}}, {1, 3, {{1, "-2"}}}, {2, 3, {{2, "2"}}}};

std::vector<Entry> with_sl2(std::vector<Entry> extra) {
  std::vector<Entry> all = kSl2;
  all.insert(all.end(), extra.begin(), extra.end());
  return all;
}

}  // namespace

std::vector<AlgebraFile> catalog() {
  std::vector<AlgebraFile> list;

  list.push_back(make("abelian3", {"e1", "e2", "e3"}, {}, 0, 3, true, false));

  list.push_back(
      make("heisenberg3", {"e1", "e2", "e3"}, {{1, 2, {{3, "1"}}}}, 0, 1, true, false));

  list.push_back(make("heisenberg5", {"e1", "e2", "e3", "e4", "e5"},
                      {{1, 2, {{5, "1"}}}, {3, 4, {{5, "1"}}}}, 0, 1, true, false));

  list.push_back(make("aff1", {"e1", "e2"}, {{1, 2, {{2, "1"}}}}, 0, 0, false, false));

  list.push_back(make("r3", {"e1", "e2", "e3"}, {{1, 2, {{2, "1"}}}, {1, 3, {{3, "1"}}}}, 0,
                      1, false, false));

  // Euclidean algebra e(2): a rotation acting on the translations.
  list.push_back(make("e2", {"r", "p1", "p2"}, {{1, 2, {{3, "1"}}}, {1, 3, {{2, "-1"}}}}, 0,
                      1, false, false));

  list.push_back(make("sl2", {"e", "f", "h"}, kSl2, 3, 1, true, true));

  list.push_back(make("so3", {"e1", "e2", "e3"},
                      {{1, 2, {{3, "1"}}}, {1, 3, {{2, "-1"}}}, {2, 3, {{1, "1"}}}}, 3, 1,
                      true, true));

  list.push_back(make("sl2_q", {"e", "f", "h", "u"}, kSl2, 3, 2, true, false));

  // sl(2) acting on its standard two-dimensional module.
  list.push_back(make("sa2", {"e", "f", "h", "p1", "p2"},
                      with_sl2({{1, 5, {{4, "1"}}},
                                {2, 4, {{5, "1"}}},
                                {3, 4, {{4, "1"}}},
                                {3, 5, {{5, "-1"}}}}),
                      3, 1, true, true));

  // sl(2) acting on the Heisenberg algebra, center z untouched.
  list.push_back(make("sl2_h3", {"e", "f", "h", "x", "y", "z"},
                      with_sl2({{1, 5, {{4, "1"}}},
                                {2, 4, {{5, "1"}}},
                                {3, 4, {{4, "1"}}},
                                {3, 5, {{5, "-1"}}},
                                {4, 5, {{6, "1"}}}}),
                      3, 2, true, true));

  return list;
}

}  // namespace casimir::cli
