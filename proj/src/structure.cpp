#include "casimir/structure.hpp"

#include <stdexcept>

namespace casimir::liealg {

using exact::nullspace;
using exact::reduced_row_echelon;

StructureConstants::StructureConstants(int dimension, std::vector<std::string> labels)
    : n_(dimension), labels_(std::move(labels)) {
  if (dimension < 0) throw std::invalid_argument("negative dimension");
  if (labels_.empty()) {
    for (int i = 0; i < n_; ++i) labels_.push_back("e" + std::to_string(i + 1));
  }
  if (static_cast<int>(labels_.size()) != n_)
    throw std::invalid_argument("label count does not match dimension");
}

void StructureConstants::check_index(int i) const {
  if (i < 0 || i >= n_) throw std::invalid_argument("basis index out of range");
}

void StructureConstants::set(int i, int j, int k, const Rational& value) {
  check_index(i);
  check_index(j);
  check_index(k);
  if (i == j) throw std::invalid_argument("diagonal bracket entry");
  Rational v = value;
  if (i > j) {
    std::swap(i, j);
    v = -v;
  }
  auto& coeffs = table_[{i, j}];
  if (v == 0) {
    coeffs.erase(k);
    if (coeffs.empty()) table_.erase({i, j});
  } else {
    coeffs[k] = v;
  }
}

Rational StructureConstants::c(int i, int j, int k) const {
  check_index(i);
  check_index(j);
  check_index(k);
  if (i == j) return 0;
  Rational sign = 1;
  if (i > j) {
    std::swap(i, j);
    sign = -1;
  }
  auto it = table_.find({i, j});
  if (it == table_.end()) return 0;
  auto kt = it->second.find(k);
  if (kt == it->second.end()) return 0;
  return sign * kt->second;
}

std::vector<std::pair<int, Rational>> StructureConstants::bracket_coeffs(int i, int j) const {
  check_index(i);
  check_index(j);
  std::vector<std::pair<int, Rational>> out;
  if (i == j) return out;
  Rational sign = 1;
  if (i > j) {
    std::swap(i, j);
    sign = -1;
  }
  auto it = table_.find({i, j});
  if (it == table_.end()) return out;
  for (const auto& [k, v] : it->second) out.emplace_back(k, sign * v);
  return out;
}

std::vector<Rational> StructureConstants::bracket(const std::vector<Rational>& u,
                                                  const std::vector<Rational>& v) const {
  if (static_cast<int>(u.size()) != n_ || static_cast<int>(v.size()) != n_)
    throw std::invalid_argument("bracket argument dimension mismatch");
  std::vector<Rational> out(n_, Rational(0));
  for (const auto& [ij, coeffs] : table_) {
    auto [i, j] = ij;
    Rational factor = u[i] * v[j] - u[j] * v[i];
    if (factor == 0) continue;
    for (const auto& [k, c] : coeffs) out[k] += factor * c;
  }
  return out;
}

SubSpace SubSpace::full(int ambient) {
  SubSpace s(ambient);
  for (int i = 0; i < ambient; ++i) {
    std::vector<Rational> row(ambient, Rational(0));
    row[i] = 1;
    s.basis_.push_back(std::move(row));
    s.pivots_.push_back(i);
  }
  return s;
}

SubSpace SubSpace::span(int ambient, const std::vector<std::vector<Rational>>& vectors) {
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != ambient)
      throw std::invalid_argument("spanning vector dimension mismatch");
  SubSpace s(ambient);
  if (vectors.empty()) return s;
  exact::Echelon e = reduced_row_echelon(RationalMatrix::from_rows(vectors));
  for (size_t r = 0; r < e.pivot_cols.size(); ++r) {
    std::vector<Rational> row(ambient);
    for (int j = 0; j < ambient; ++j) row[j] = e.mat.at(static_cast<int>(r), j);
    s.basis_.push_back(std::move(row));
  }
  s.pivots_ = e.pivot_cols;
  return s;
}

std::vector<Rational> SubSpace::reduce(const std::vector<Rational>& v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw std::invalid_argument("reduce dimension mismatch");
  std::vector<Rational> r = v;
  for (size_t p = 0; p < pivots_.size(); ++p) {
    Rational f = r[pivots_[p]];
    if (f == 0) continue;
    for (int j = 0; j < ambient_; ++j) r[j] -= f * basis_[p][j];
  }
  return r;
}

bool SubSpace::contains(const std::vector<Rational>& v) const {
  for (const Rational& x : reduce(v))
    if (x != 0) return false;
  return true;
}

bool SubSpace::contains(const SubSpace& other) const {
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

SubSpace SubSpace::sum(const SubSpace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("ambient mismatch");
  std::vector<std::vector<Rational>> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return span(ambient_, all);
}

std::optional<std::vector<Rational>> SubSpace::coordinates_of(
    const std::vector<Rational>& v) const {
  if (!contains(v)) return std::nullopt;
  std::vector<Rational> coords(basis_.size());
  for (size_t p = 0; p < pivots_.size(); ++p) coords[p] = v[pivots_[p]];
  return coords;
}

ValidationResult validate(const StructureConstants& c) {
  int n = c.dimension();
  auto unit = [&](int i) {
    std::vector<Rational> v(n, Rational(0));
    v[i] = 1;
    return v;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int l = j + 1; l < n; ++l) {
        std::vector<Rational> sum =
            c.bracket(c.bracket(unit(i), unit(j)), unit(l));
        std::vector<Rational> t2 = c.bracket(c.bracket(unit(j), unit(l)), unit(i));
        std::vector<Rational> t3 = c.bracket(c.bracket(unit(l), unit(i)), unit(j));
        bool zero = true;
        for (int k = 0; k < n; ++k) {
          sum[k] += t2[k] + t3[k];
          if (sum[k] != 0) zero = false;
        }
        if (!zero) return {false, i, j, l, sum};
      }
  return {};
}

SubSpace bracket_subspaces(const StructureConstants& c, const SubSpace& u,
                           const SubSpace& v) {
  if (u.ambient() != c.dimension() || v.ambient() != c.dimension())
    throw std::invalid_argument("subspace ambient mismatch");
  std::vector<std::vector<Rational>> products;
  for (const auto& a : u.basis())
    for (const auto& b : v.basis()) products.push_back(c.bracket(a, b));
  return SubSpace::span(c.dimension(), products);
}

std::vector<SubSpace> series_of(const StructureConstants& c, const SubSpace& start,
                                SeriesKind kind) {
  std::vector<SubSpace> chain{start};
  SubSpace current = start;
  while (true) {
    SubSpace next = kind == SeriesKind::Derived
                        ? bracket_subspaces(c, current, current)
                        : bracket_subspaces(c, start, current);
    chain.push_back(next);
    if (next.dim() == 0 || next == current) break;
    current = next;
  }
  return chain;
}

std::vector<SubSpace> series(const StructureConstants& c, SeriesKind kind) {
  return series_of(c, SubSpace::full(c.dimension()), kind);
}

RationalMatrix adjoint_matrix(const StructureConstants& c, const std::vector<Rational>& v) {
  int n = c.dimension();
  if (static_cast<int>(v.size()) != n)
    throw std::invalid_argument("adjoint vector dimension mismatch");
  RationalMatrix m(n, n);
  for (int j = 0; j < n; ++j) {
    std::vector<Rational> unit(n, Rational(0));
    unit[j] = 1;
    std::vector<Rational> image = c.bracket(v, unit);
    for (int k = 0; k < n; ++k) m.at(k, j) = image[k];
  }
  return m;
}

bool is_nilpotent_matrix(const RationalMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("nilpotency of non-square matrix");
  int n = m.rows();
  RationalMatrix power = m;
  for (int k = 1; k <= n; ++k) {
    if (power.is_zero()) return true;
    if (k < n) power = power * m;
  }
  return false;
}

namespace {

Rational trace_product(const RationalMatrix& a, const RationalMatrix& b) {
  Rational t = 0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a.at(i, j) != 0 && b.at(j, i) != 0) t += a.at(i, j) * b.at(j, i);
  return t;
}

}  // namespace

RationalMatrix killing_form(const StructureConstants& c) {
  int n = c.dimension();
  std::vector<RationalMatrix> ads;
  ads.reserve(n);
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> unit(n, Rational(0));
    unit[i] = 1;
    ads.push_back(adjoint_matrix(c, unit));
  }
  RationalMatrix k(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Rational value = trace_product(ads[i], ads[j]);
      k.at(i, j) = value;
      k.at(j, i) = value;
    }
  return k;
}

SubSpace radical(const StructureConstants& c) {
  int n = c.dimension();
  SubSpace derived = bracket_subspaces(c, SubSpace::full(n), SubSpace::full(n));
  RationalMatrix k = killing_form(c);

  // v is in the radical iff K(v, w) = 0 for every w in [L,L].
  RationalMatrix system(derived.dim(), n);
  for (int r = 0; r < derived.dim(); ++r) {
    const auto& w = derived.basis()[r];
    for (int j = 0; j < n; ++j) {
      Rational entry = 0;
      for (int a = 0; a < n; ++a)
        if (w[a] != 0 && k.at(a, j) != 0) entry += w[a] * k.at(a, j);
      system.at(r, j) = entry;
    }
  }
  SubSpace rad = SubSpace::span(n, nullspace(system));

  // Internal cross-checks; a failure here is a kernel bug.
  if (!rad.contains(bracket_subspaces(c, SubSpace::full(n), rad)))
    throw std::logic_error("radical: result is not an ideal");
  if (series_of(c, rad, SeriesKind::Derived).back().dim() != 0)
    throw std::logic_error("radical: result is not solvable");
  StructureConstants q = quotient_constants(c, rad);
  if (q.dimension() > 0 && exact::det(killing_form(q)) == 0)
    throw std::logic_error("radical: quotient is not semisimple");
  return rad;
}

StructureConstants subalgebra_constants(const StructureConstants& c,
                                        const std::vector<std::vector<Rational>>& basis) {
  int n = c.dimension();
  int m = static_cast<int>(basis.size());
  RationalMatrix columns(n, m);
  for (int j = 0; j < m; ++j) {
    if (static_cast<int>(basis[j].size()) != n)
      throw std::invalid_argument("subalgebra basis dimension mismatch");
    for (int i = 0; i < n; ++i) columns.at(i, j) = basis[j][i];
  }
  StructureConstants sub(m);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      std::vector<Rational> br = c.bracket(basis[a], basis[b]);
      auto coords = exact::solve(columns, br);
      if (!coords) throw std::invalid_argument("span is not closed under the bracket");
      for (int k = 0; k < m; ++k)
        if ((*coords)[k] != 0) sub.set(a, b, k, (*coords)[k]);
    }
  return sub;
}

StructureConstants quotient_constants(const StructureConstants& c, const SubSpace& ideal) {
  int n = c.dimension();
  std::vector<bool> is_pivot(n, false);
  for (int p : ideal.pivot_columns()) is_pivot[p] = true;
  std::vector<int> complement;
  for (int i = 0; i < n; ++i)
    if (!is_pivot[i]) complement.push_back(i);

  int q = static_cast<int>(complement.size());
  std::vector<std::string> labels;
  for (int i : complement) labels.push_back(c.labels()[i]);
  StructureConstants out(q, labels);
  for (int a = 0; a < q; ++a)
    for (int b = a + 1; b < q; ++b) {
      std::vector<Rational> u(n, Rational(0)), v(n, Rational(0));
      u[complement[a]] = 1;
      v[complement[b]] = 1;
      std::vector<Rational> residue = ideal.reduce(c.bracket(u, v));
      for (int t = 0; t < q; ++t)
        if (residue[complement[t]] != 0) out.set(a, b, t, residue[complement[t]]);
    }
  return out;
}

LeviResult verify_levi(const StructureConstants& c,
                       const std::vector<std::vector<Rational>>& s_basis) {
  int n = c.dimension();
  int m = static_cast<int>(s_basis.size());
  for (const auto& v : s_basis)
    if (static_cast<int>(v.size()) != n)
      return {std::nullopt, "basis vector has wrong dimension"};

  SubSpace s = SubSpace::span(n, s_basis);
  if (s.dim() != m) return {std::nullopt, "basis vectors are not linearly independent"};

  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (!s.contains(c.bracket(s_basis[a], s_basis[b])))
        return {std::nullopt, "span is not a subalgebra"};

  StructureConstants sub = subalgebra_constants(c, s_basis);
  if (m > 0 && exact::det(killing_form(sub)) == 0)
    return {std::nullopt, "Killing form of the subalgebra is degenerate"};

  SubSpace rad = radical(c);
  if (s.sum(rad).dim() != s.dim() + rad.dim())
    return {std::nullopt, "subalgebra intersects the radical nontrivially"};
  if (s.dim() + rad.dim() != n)
    return {std::nullopt, "subalgebra and radical do not span the algebra"};

  return {LeviDecomposition{s, rad}, ""};
}

SubSpace fixed_subspace(const LeviDecomposition& d, const StructureConstants& c) {
  int n = c.dimension();
  int r = d.radical.dim();
  int m = d.levi.dim();
  RationalMatrix rad_columns(n, r);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < n; ++i) rad_columns.at(i, j) = d.radical.basis()[j][i];

  RationalMatrix system(n * m, r);
  for (int s = 0; s < m; ++s) {
    RationalMatrix image = adjoint_matrix(c, d.levi.basis()[s]) * rad_columns;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < r; ++j) system.at(s * n + i, j) = image.at(i, j);
  }

  std::vector<std::vector<Rational>> fixed;
  for (const auto& coeff : nullspace(system)) {
    std::vector<Rational> v(n, Rational(0));
    for (int t = 0; t < r; ++t)
      for (int i = 0; i < n; ++i) v[i] += coeff[t] * d.radical.basis()[t][i];
    fixed.push_back(std::move(v));
  }
  return SubSpace::span(n, fixed);
}

TheoremAReport theorem_a_check(const LeviDecomposition& d, const StructureConstants& c) {
  int n = c.dimension();
  TheoremAReport report;
  SubSpace derived = bracket_subspaces(c, SubSpace::full(n), SubSpace::full(n));
  report.is_perfect = derived.dim() == n;

  SubSpace fixed = fixed_subspace(d, c);
  SubSpace rr = bracket_subspaces(c, d.radical, d.radical);
  report.contained = rr.contains(fixed);
  report.agree = report.is_perfect == report.contained;

  SubSpace sr = bracket_subspaces(c, d.levi, d.radical);
  report.dim_identity = fixed.dim() + sr.dim() == d.radical.dim() &&
                        fixed.sum(sr) == d.radical;
  return report;
}

StructureReport structure_report(
    const StructureConstants& c,
    const std::optional<std::vector<std::vector<Rational>>>& s_basis) {
  StructureReport report;
  std::vector<SubSpace> derived = series(c, SeriesKind::Derived);
  std::vector<SubSpace> lower = series(c, SeriesKind::LowerCentral);
  for (const auto& t : derived) report.derived_series_dims.push_back(t.dim());
  for (const auto& t : lower) report.lower_central_dims.push_back(t.dim());
  report.is_solvable = derived.back().dim() == 0;
  report.is_nilpotent = lower.back().dim() == 0;

  report.radical = radical(c);
  std::vector<SubSpace> rad_lower = series_of(c, report.radical, SeriesKind::LowerCentral);
  for (const auto& t : rad_lower) report.radical_lower_central_dims.push_back(t.dim());
  report.radical_is_nilpotent = rad_lower.back().dim() == 0;
  report.radical_is_abelian =
      bracket_subspaces(c, report.radical, report.radical).dim() == 0;

  int n = c.dimension();
  report.is_perfect = bracket_subspaces(c, SubSpace::full(n), SubSpace::full(n)).dim() == n;
  report.is_semisimple = report.radical.dim() == 0;

  if (s_basis) {
    LeviResult levi = verify_levi(c, *s_basis);
    if (!levi.ok()) throw LeviRejection(levi.rejection);
    report.levi = levi.value;
  }
  return report;
}

}  // namespace casimir::liealg
