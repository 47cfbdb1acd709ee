#include "casimir/invariants.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "casimir/roots.hpp"

namespace casimir::invariants {

using liealg::StructureConstants;
using liealg::SubSpace;

GeneratorField::GeneratorField(const StructureConstants& c, int index)
    : index_(index), n_(c.dimension()), rows_(c.dimension()) {
  if (index < 0 || index >= n_) throw std::invalid_argument("generator index out of range");
  for (int j = 0; j < n_; ++j) {
    for (const auto& [k, value] : c.bracket_coeffs(index, j)) rows_[j].emplace_back(k, value);
  }
}

Rational GeneratorField::coeff(int j, int k) const {
  for (const auto& [kk, v] : rows_.at(j))
    if (kk == k) return v;
  return 0;
}

Polynomial GeneratorField::coefficient_form(int j) const {
  Polynomial form(n_);
  for (const auto& [k, v] : rows_.at(j)) form += Polynomial::variable(n_, k).scale(v);
  return form;
}

Polynomial GeneratorField::apply(const Polynomial& p) const {
  if (p.dimension() != n_) throw std::invalid_argument("apply dimension mismatch");
  Polynomial out(n_);
  for (const auto& [m, coeff] : p.terms()) {
    for (int j = 0; j < n_; ++j) {
      int e = m.exponents[j];
      if (e == 0 || rows_[j].empty()) continue;
      for (const auto& [k, v] : rows_[j]) {
        Monomial shifted = m;
        shifted.exponents[j] -= 1;
        shifted.exponents[k] += 1;
        out.add_term(shifted, coeff * e * v);
      }
    }
  }
  return out;
}

RationalMatrix GeneratorField::action_matrix(const std::vector<Monomial>& mons) const {
  int size = static_cast<int>(mons.size());
  std::map<Monomial, int, exact::GrlexDescending> index;
  for (int t = 0; t < size; ++t) index.emplace(mons[t], t);

  RationalMatrix mat(size, size);
  for (int t = 0; t < size; ++t) {
    Polynomial image = apply(Polynomial::term(n_, mons[t], 1));
    for (const auto& [m, coeff] : image.terms()) {
      auto it = index.find(m);
      if (it == index.end())
        throw std::logic_error("action image leaves the monomial span");
      mat.at(it->second, t) = coeff;
    }
  }
  return mat;
}

std::vector<GeneratorField> generators(const StructureConstants& c) {
  std::vector<GeneratorField> out;
  out.reserve(c.dimension());
  for (int i = 0; i < c.dimension(); ++i) out.emplace_back(c, i);
  return out;
}

PointGenerator::PointGenerator(unsigned seed) : state_(seed) {}

int PointGenerator::draw() {
  // 64-bit LCG; fixed constants keep the stream identical everywhere.
  for (;;) {
    state_ = state_ * 6364136223846793005ull + 1442695040888963407ull;
    int v = static_cast<int>((state_ >> 33) % 201) - 100;
    if (v != 0) return v;
  }
}

std::vector<Rational> PointGenerator::next(int dimension) {
  std::vector<Rational> point(dimension);
  for (int i = 0; i < dimension; ++i) point[i] = draw();
  return point;
}

exact::PolyMatrix commutator_matrix(const StructureConstants& c) {
  int n = c.dimension();
  exact::PolyMatrix a(n, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Polynomial entry(n);
      for (const auto& [k, value] : c.bracket_coeffs(i, j))
        entry += Polynomial::variable(n, k).scale(value);
      a.at(i, j) = entry;
      a.at(j, i) = -entry;
    }
  return a;
}

int invariant_count(const StructureConstants& c) {
  int n = c.dimension();
  exact::PolyMatrix a = commutator_matrix(c);
  int symbolic = rank(a);

  PointGenerator points;
  int best = 0;
  for (int trial = 0; trial < 3; ++trial)
    best = std::max(best, rank(a.eval(points.next(n))));
  if (best != symbolic)
    throw std::logic_error("invariant_count: symbolic and evaluated rank disagree");
  return n - symbolic;
}

std::vector<Polynomial> invariant_space_of_degree(const StructureConstants& c, int degree) {
  int n = c.dimension();
  std::vector<GeneratorField> gens = generators(c);
  std::vector<Monomial> mons = exact::monomials_of_degree(n, degree);
  int cols = static_cast<int>(mons.size());

  std::map<Monomial, int, exact::GrlexDescending> index;
  for (int t = 0; t < cols; ++t) index.emplace(mons[t], t);

  RationalMatrix system(n * cols, cols);
  for (int t = 0; t < cols; ++t) {
    Polynomial basis = Polynomial::term(n, mons[t], 1);
    for (int i = 0; i < n; ++i) {
      Polynomial image = gens[i].apply(basis);
      for (const auto& [m, coeff] : image.terms())
        system.at(i * cols + index.at(m), t) = coeff;
    }
  }

  std::vector<Polynomial> out;
  for (const auto& vec : exact::nullspace(system)) {
    Polynomial p(n);
    for (int t = 0; t < cols; ++t)
      if (vec[t] != 0) p.add_term(mons[t], vec[t]);
    for (const auto& g : gens)
      if (!g.apply(p).is_zero())
        throw std::logic_error("solver produced a non-invariant polynomial");
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

// Jacobian of the polynomials at the point: one row per polynomial.
RationalMatrix jacobian_at(const std::vector<Polynomial>& polys,
                           const std::vector<Rational>& point) {
  int n = static_cast<int>(point.size());
  RationalMatrix j(static_cast<int>(polys.size()), n);
  for (size_t r = 0; r < polys.size(); ++r)
    for (int col = 0; col < n; ++col) j.at(static_cast<int>(r), col) = polys[r].diff(col).eval(point);
  return j;
}

}  // namespace

InvariantSet polynomial_invariants(const StructureConstants& c, int max_degree) {
  if (max_degree < 1) throw std::invalid_argument("max_degree must be at least 1");
  int n = c.dimension();

  InvariantSet result;
  result.expected_count = invariant_count(c);

  PointGenerator points;
  std::vector<Rational> current = points.next(n);

  for (int degree = 1; degree <= max_degree; ++degree) {
    for (Polynomial& candidate : invariant_space_of_degree(c, degree)) {
      // Greedy functional-independence test: keep the candidate iff the
      // Jacobian with the already selected polynomials has full rank at some
      // test point. A dependent set fails at every point, so retries can only
      // rescue candidates hurt by a bad point.
      std::vector<Polynomial> trial = result.polys;
      trial.push_back(candidate);
      int want = static_cast<int>(trial.size());
      bool accepted = false;
      if (rank(jacobian_at(trial, current)) == want) {
        accepted = true;
      } else {
        for (int retry = 0; retry < 3 && !accepted; ++retry) {
          std::vector<Rational> fresh = points.next(n);
          if (rank(jacobian_at(trial, fresh)) == want) {
            current = fresh;
            accepted = true;
          }
        }
      }
      if (accepted) result.polys.push_back(std::move(candidate));
    }
  }

  result.certificate.point = current;
  result.certificate.jacobian_rank = rank(jacobian_at(result.polys, current));
  if (result.certificate.jacobian_rank != static_cast<int>(result.polys.size()))
    throw std::logic_error("independence certificate failed the final re-check");
  result.count_matched = static_cast<int>(result.polys.size()) == result.expected_count;
  return result;
}

namespace {

struct ComponentSplitter {
  int n;
  const std::vector<Monomial>& mons;
  const std::vector<RationalMatrix>& actions;  // one per basis direction
  const std::vector<int>& complement;          // directions outside [L,L]
  int* skipped;
  std::vector<std::pair<std::vector<std::vector<Rational>>, std::vector<Rational>>> emitted;

  // Splits the span of `vectors` by common eigenvectors of the remaining
  // complement directions; `values` holds eigenvalues fixed so far.
  void split(const std::vector<std::vector<Rational>>& vectors, size_t dir,
             std::vector<Rational>& values) {
    int size = static_cast<int>(mons.size());
    SubSpace w = SubSpace::span(size, vectors);
    if (w.dim() == 0) return;
    if (dir == complement.size()) {
      emitted.emplace_back(w.basis(), values);
      return;
    }

    const RationalMatrix& action = actions[complement[dir]];
    int m = w.dim();
    RationalMatrix restricted(m, m);
    for (int j = 0; j < m; ++j) {
      auto coords = w.coordinates_of(action.apply(w.basis()[j]));
      if (!coords) throw std::logic_error("weight-space split left the subspace");
      for (int t = 0; t < m; ++t) restricted.at(t, j) = (*coords)[t];
    }

    std::vector<Rational> roots = exact::rational_roots(exact::char_poly(restricted));
    *skipped += m - static_cast<int>(roots.size());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());

    for (const Rational& value : roots) {
      RationalMatrix shifted = restricted;
      for (int t = 0; t < m; ++t) shifted.at(t, t) -= value;
      std::vector<std::vector<Rational>> eigen;
      for (const auto& coeff : exact::nullspace(shifted)) {
        std::vector<Rational> v(size, Rational(0));
        for (int t = 0; t < m; ++t)
          if (coeff[t] != 0)
            for (int s = 0; s < size; ++s) v[s] += coeff[t] * w.basis()[t][s];
        eigen.push_back(std::move(v));
      }
      values.push_back(value);
      split(eigen, dir + 1, values);
      values.pop_back();
    }
  }
};

}  // namespace

SemiInvariantResult semi_invariants(const StructureConstants& c, int max_degree) {
  if (max_degree < 1) throw std::invalid_argument("max_degree must be at least 1");
  int n = c.dimension();
  std::vector<GeneratorField> gens = generators(c);

  SubSpace full = SubSpace::full(n);
  SubSpace derived = liealg::bracket_subspaces(c, full, full);
  std::vector<bool> in_derived_pivots(n, false);
  for (int p : derived.pivot_columns()) in_derived_pivots[p] = true;
  std::vector<int> complement;
  for (int i = 0; i < n; ++i)
    if (!in_derived_pivots[i]) complement.push_back(i);

  SemiInvariantResult result;

  for (int degree = 1; degree <= max_degree; ++degree) {
    std::vector<Monomial> mons = exact::monomials_of_degree(n, degree);
    int size = static_cast<int>(mons.size());

    std::vector<RationalMatrix> actions;
    actions.reserve(n);
    for (int i = 0; i < n; ++i) actions.push_back(gens[i].action_matrix(mons));

    // Base space: common kernel of the directions lying in [L,L], whose
    // weight values are forced to zero.
    RationalMatrix stacked(derived.dim() * size, size);
    for (int r = 0; r < derived.dim(); ++r) {
      const auto& w = derived.basis()[r];
      for (int a = 0; a < n; ++a) {
        if (w[a] == 0) continue;
        for (int row = 0; row < size; ++row)
          for (int col = 0; col < size; ++col)
            if (actions[a].at(row, col) != 0)
              stacked.at(r * size + row, col) += w[a] * actions[a].at(row, col);
      }
    }
    std::vector<std::vector<Rational>> base = exact::nullspace(stacked);

    ComponentSplitter splitter{n, mons, actions, complement, &result.skipped_dimension, {}};
    std::vector<Rational> values;
    splitter.split(base, 0, values);

    for (const auto& [vectors, eigenvalues] : splitter.emitted) {
      // Assemble the weight on the whole basis: eigenvalues on the
      // complement directions, zero on [L,L], extended linearly.
      Weight weight;
      weight.components.assign(n, Rational(0));
      for (size_t t = 0; t < complement.size(); ++t)
        weight.components[complement[t]] = eigenvalues[t];
      for (int p = 0; p < derived.dim(); ++p) {
        const auto& row = derived.basis()[p];
        Rational value = 0;
        for (size_t t = 0; t < complement.size(); ++t)
          value -= row[complement[t]] * eigenvalues[t];
        weight.components[derived.pivot_columns()[p]] = value;
      }

      for (const auto& vec : vectors) {
        Polynomial p(n);
        for (int t = 0; t < size; ++t)
          if (vec[t] != 0) p.add_term(mons[t], vec[t]);
        for (int i = 0; i < n; ++i)
          if (gens[i].apply(p) != p.scale(weight.components[i]))
            throw std::logic_error("semi-invariant failed its defining identity");
        result.items.push_back({std::move(p), weight});
      }
    }
  }
  return result;
}

bool quotient_invariant_check(const StructureConstants& c, const Polynomial& p1,
                              const Polynomial& p2) {
  if (p2.is_zero()) throw std::invalid_argument("quotient denominator is zero");
  if (p1.dimension() != c.dimension() || p2.dimension() != c.dimension())
    throw std::invalid_argument("polynomial dimension mismatch");
  for (const GeneratorField& g : generators(c)) {
    if (g.apply(p1) * p2 != p1 * g.apply(p2)) return false;
  }
  return true;
}

ZeroWeightCertificate zero_weight_certificate(const StructureConstants& c) {
  int n = c.dimension();
  SubSpace full = SubSpace::full(n);
  SubSpace rad = liealg::radical(c);
  if (liealg::series_of(c, rad, liealg::SeriesKind::LowerCentral).back().dim() != 0)
    throw std::invalid_argument("zero_weight_certificate requires a nilpotent radical");

  for (const auto& v : rad.basis())
    if (!liealg::is_nilpotent_matrix(liealg::adjoint_matrix(c, v)))
      throw std::logic_error("nilpotent radical with non-nilpotent adjoint");

  SubSpace derived = liealg::bracket_subspaces(c, full, full);
  SubSpace covered = derived.sum(rad);

  ZeroWeightCertificate cert;
  std::vector<std::vector<Rational>> units(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i) units[i][i] = 1;

  for (int i = 0; i < n; ++i)
    if (!covered.contains(units[i])) cert.uncovered.push_back(i);
  if (!cert.uncovered.empty()) return cert;

  cert.ok = true;
  for (int i = 0; i < n; ++i) {
    DirectionReason reason{i, {}};
    if (rad.contains(units[i]))
      reason.reason = "lies in the radical, which acts nilpotently";
    else if (derived.contains(units[i]))
      reason.reason = "lies in the derived subalgebra";
    else
      reason.reason = "sum of a derived-subalgebra part and a nilpotently-acting radical part";
    cert.reasons.push_back(std::move(reason));
  }
  return cert;
}

}  // namespace casimir::invariants
