#ifndef CASIMIR_MATRIX_HPP
#define CASIMIR_MATRIX_HPP

#include <optional>
#include <vector>

#include "casimir/polynomial.hpp"
#include "casimir/rational.hpp"

namespace casimir::exact {

/// Dense matrix over the rationals.
class RationalMatrix {
 public:
  RationalMatrix() : rows_(0), cols_(0) {}
  RationalMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols, Rational(0)) {}

  static RationalMatrix identity(int n);
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return entries_[static_cast<size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const {
    return entries_[static_cast<size_t>(r) * cols_ + c];
  }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  RationalMatrix operator*(const RationalMatrix& other) const;
  RationalMatrix operator+(const RationalMatrix& other) const;
  RationalMatrix operator-(const RationalMatrix& other) const;
  bool operator==(const RationalMatrix& other) const = default;

  Rational trace() const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;

 private:
  int rows_, cols_;
  std::vector<Rational> entries_;
};

/// Exact rank by fraction-free (Bareiss) elimination.
int rank(const RationalMatrix& m);

/// Determinant by fraction-free elimination; requires a square matrix.
Rational det(const RationalMatrix& m);

/// Basis of the right kernel derived from the reduced row echelon form.
/// Each vector is scaled so its first nonzero entry is 1; vectors are ordered
/// by the position of their free column.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);

/// One solution x of A x = b picked with all free variables zero, or nullopt
/// when the system is inconsistent.
std::optional<std::vector<Rational>> solve(const RationalMatrix& a,
                                           const std::vector<Rational>& b);

/// Reduced row echelon form together with the pivot column list.
struct Echelon {
  RationalMatrix mat;
  std::vector<int> pivot_cols;
};
Echelon reduced_row_echelon(const RationalMatrix& m);

/// Coefficients of det(tI - M), ascending in t (size n+1, monic).
/// Faddeev-LeVerrier on the denominator-cleared integer matrix.
std::vector<Rational> char_poly(const RationalMatrix& m);

/// Matrix with polynomial entries; rank is taken over the fraction field.
class PolyMatrix {
 public:
  PolyMatrix(int rows, int cols, int variables)
      : rows_(rows), cols_(cols),
        entries_(static_cast<size_t>(rows) * cols, Polynomial(variables)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Polynomial& at(int r, int c) { return entries_[static_cast<size_t>(r) * cols_ + c]; }
  const Polynomial& at(int r, int c) const {
    return entries_[static_cast<size_t>(r) * cols_ + c];
  }

  RationalMatrix eval(const std::vector<Rational>& point) const;

 private:
  int rows_, cols_;
  std::vector<Polynomial> entries_;
};

/// Generic rank of a polynomial matrix: Bareiss elimination with polynomial
/// entries, all divisions exact in the polynomial ring.
int rank(const PolyMatrix& m);

}  // namespace casimir::exact

#endif
