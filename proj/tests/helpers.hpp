#ifndef CASIMIR_TESTS_HELPERS_HPP
#define CASIMIR_TESTS_HELPERS_HPP

#include <random>
#include <string>
#include <vector>

#include "casimir/algebra_file.hpp"
#include "casimir/matrix.hpp"
#include "casimir/polynomial.hpp"
#include "casimir/structure.hpp"

namespace testutil {

using casimir::exact::Monomial;
using casimir::exact::PolyMatrix;
using casimir::exact::Polynomial;
using casimir::exact::Rational;
using casimir::exact::RationalMatrix;
using casimir::liealg::StructureConstants;

inline std::string catalog_dir() { return CASIMIR_CATALOG_DIR; }

inline std::string catalog_path(const std::string& name) {
  return catalog_dir() + "/" + name + ".json";
}

// --- small algebra builders (0-based indices) ---------------------------

inline StructureConstants make_abelian(int n) { return StructureConstants(n); }

// [e1,e2] = e3.
inline StructureConstants make_h3() {
  StructureConstants c(3);
  c.set(0, 1, 2, 1);
  return c;
}

// [e1,e2] = e2.
inline StructureConstants make_aff1() {
  StructureConstants c(2);
  c.set(0, 1, 1, 1);
  return c;
}

// basis (e, f, h): [e,f] = h, [h,e] = 2e, [h,f] = -2f.
inline StructureConstants make_sl2() {
  StructureConstants c(3, {"e", "f", "h"});
  c.set(0, 1, 2, 1);
  c.set(0, 2, 0, -2);
  c.set(1, 2, 1, 2);
  return c;
}

// [e1,e2] = e2, [e1,e3] = e3.
inline StructureConstants make_r3() {
  StructureConstants c(3);
  c.set(0, 1, 1, 1);
  c.set(0, 2, 2, 1);
  return c;
}

// [e1,e2] = e3 cyclic.
inline StructureConstants make_so3() {
  StructureConstants c(3);
  c.set(0, 1, 2, 1);
  c.set(1, 2, 0, 1);
  c.set(0, 2, 1, -1);
  return c;
}

// sl(2) plus a one-dimensional center.
inline StructureConstants make_sl2_q() {
  StructureConstants c(4, {"e", "f", "h", "u"});
  c.set(0, 1, 2, 1);
  c.set(0, 2, 0, -2);
  c.set(1, 2, 1, 2);
  return c;
}

// --- deterministic randomness -------------------------------------------

inline std::mt19937 rng(unsigned seed) { return std::mt19937(seed); }

inline int rand_int(std::mt19937& g, int lo, int hi) {
  return lo + static_cast<int>(g() % static_cast<unsigned>(hi - lo + 1));
}

inline Rational rand_rational(std::mt19937& g) {
  int num = rand_int(g, -9, 9);
  int den = rand_int(g, 1, 3);
  return Rational(num, den);
}

inline std::vector<Rational> rand_vector(std::mt19937& g, int n) {
  std::vector<Rational> v(n);
  for (auto& x : v) x = rand_rational(g);
  return v;
}

inline Polynomial rand_polynomial(std::mt19937& g, int dim, int max_terms = 4,
                                  int max_exp = 2) {
  Polynomial p(dim);
  int terms = rand_int(g, 0, max_terms);
  for (int t = 0; t < terms; ++t) {
    Monomial m(dim);
    for (int i = 0; i < dim; ++i) m.exponents[i] = rand_int(g, 0, max_exp);
    p.add_term(m, rand_rational(g));
  }
  return p;
}

inline RationalMatrix rand_matrix(std::mt19937& g, int rows, int cols) {
  RationalMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (rand_int(g, 0, 2) != 0) m.at(i, j) = rand_rational(g);
  return m;
}

// --- independent oracles -------------------------------------------------

// Plain Gaussian elimination over Q, no fraction-free tricks: pivot count.
inline int naive_rank(const RationalMatrix& m) {
  std::vector<std::vector<Rational>> grid(m.rows(), std::vector<Rational>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) grid[i][j] = m.at(i, j);
  int rank = 0;
  for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
    int pivot = -1;
    for (int r = rank; r < m.rows(); ++r)
      if (grid[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(grid[rank], grid[pivot]);
    for (int r = rank + 1; r < m.rows(); ++r) {
      if (grid[r][c] == 0) continue;
      Rational f = grid[r][c] / grid[rank][c];
      for (int j = c; j < m.cols(); ++j) grid[r][j] -= f * grid[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Symbolic determinant by Laplace expansion along the first row.
inline Polynomial laplace_det(const std::vector<std::vector<Polynomial>>& a, int vars) {
  int n = static_cast<int>(a.size());
  if (n == 0) return Polynomial::constant(vars, 1);
  if (n == 1) return a[0][0];
  Polynomial total(vars);
  for (int c = 0; c < n; ++c) {
    if (a[0][c].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (int r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (int j = 0; j < n; ++j)
        if (j != c) row.push_back(a[r][j]);
      minor.push_back(std::move(row));
    }
    Polynomial cofactor = a[0][c] * laplace_det(minor, vars);
    if (c % 2 == 0)
      total += cofactor;
    else
      total -= cofactor;
  }
  return total;
}

// Generic rank of a polynomial matrix through its minors: the largest k with
// some nonzero k x k minor. Independent of the elimination-based rank.
inline int minors_rank(const PolyMatrix& m, int vars) {
  int n = std::min(m.rows(), m.cols());
  for (int k = n; k >= 1; --k) {
    // Enumerate k-subsets of rows and columns.
    std::vector<int> rsel(k);
    for (int i = 0; i < k; ++i) rsel[i] = i;
    while (true) {
      std::vector<int> csel(k);
      for (int i = 0; i < k; ++i) csel[i] = i;
      while (true) {
        std::vector<std::vector<Polynomial>> sub(k, std::vector<Polynomial>(k, Polynomial(vars)));
        for (int r = 0; r < k; ++r)
          for (int c = 0; c < k; ++c) sub[r][c] = m.at(rsel[r], csel[c]);
        if (!laplace_det(sub, vars).is_zero()) return k;
        // next column subset
        int pos = k - 1;
        while (pos >= 0 && csel[pos] == m.cols() - k + pos) --pos;
        if (pos < 0) break;
        ++csel[pos];
        for (int t = pos + 1; t < k; ++t) csel[t] = csel[t - 1] + 1;
      }
      int pos = k - 1;
      while (pos >= 0 && rsel[pos] == m.rows() - k + pos) --pos;
      if (pos < 0) break;
      ++rsel[pos];
      for (int t = pos + 1; t < k; ++t) rsel[t] = rsel[t - 1] + 1;
    }
  }
  return 0;
}

// Kernel dimension of the invariant equations on the full homogeneous
// component, assembled with dense naive polynomial arithmetic and row-reduced
// by plain Gaussian elimination. Shares nothing with the production solver
// beyond the structure constants.
inline int dense_invariant_kernel_dim(const StructureConstants& c, int degree) {
  using casimir::exact::monomials_of_degree;
  int n = c.dimension();
  std::vector<Monomial> mons = monomials_of_degree(n, degree);
  int cols = static_cast<int>(mons.size());

  auto index_of = [&](const Monomial& m) {
    for (int t = 0; t < cols; ++t)
      if (mons[t] == m) return t;
    return -1;
  };

  std::vector<std::vector<Rational>> rows;
  for (int i = 0; i < n; ++i) {
    // v_i applied to each basis monomial: for every x^a and every j with
    // a_j > 0, the term sum_k c(i,j,k) x_k * a_j * x^(a - e_j).
    std::vector<std::vector<Rational>> block(cols, std::vector<Rational>(cols, Rational(0)));
    for (int t = 0; t < cols; ++t) {
      for (int j = 0; j < n; ++j) {
        int e = mons[t].exponents[j];
        if (e == 0) continue;
        for (int k = 0; k < n; ++k) {
          Rational coeff = c.c(i, j, k);
          if (coeff == 0) continue;
          Monomial image = mons[t];
          image.exponents[j] -= 1;
          image.exponents[k] += 1;
          block[index_of(image)][t] += Rational(e) * coeff;
        }
      }
    }
    for (auto& row : block) rows.push_back(std::move(row));
  }

  RationalMatrix system = RationalMatrix::from_rows(rows);
  return cols - naive_rank(system);
}

}  // namespace testutil

#endif
