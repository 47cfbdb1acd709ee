#ifndef CASIMIR_POLYNOMIAL_HPP
#define CASIMIR_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "casimir/monomial.hpp"
#include "casimir/rational.hpp"

namespace casimir::exact {

/// Sparse multivariate polynomial over the rationals in a fixed number of
/// variables x_1..x_n. Terms are kept in descending graded-lex order and
/// zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexDescending>;

  Polynomial() : dimension_(0) {}
  explicit Polynomial(int dimension) : dimension_(dimension) {}

  static Polynomial constant(int dimension, const Rational& value);
  /// The coordinate x_{index+1} (index is 0-based).
  static Polynomial variable(int dimension, int index);
  static Polynomial term(int dimension, const Monomial& m, const Rational& coeff);

  int dimension() const { return dimension_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  const TermMap& terms() const { return terms_; }

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;
  Rational coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& coeff);

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  bool operator==(const Polynomial& other) const = default;

  Polynomial scale(const Rational& c) const;
  /// Partial derivative with respect to x_{index+1} (index is 0-based).
  Polynomial diff(int index) const;
  Rational eval(const std::vector<Rational>& point) const;

  /// Divides leading coefficient out so it becomes 1. Zero stays zero.
  Polynomial monic() const;

  /// Quotient of an exact division; throws std::domain_error when `divisor`
  /// does not divide this polynomial (used by fraction-free elimination,
  /// where divisibility is guaranteed).
  Polynomial divide_exact(const Polynomial& divisor) const;

  /// Rendering like "x1*x2 + 1/4*x3^2"; variables may be renamed via `names`.
  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  void check_dimension(const Polynomial& other) const;

  int dimension_;
  TermMap terms_;
};

}  // namespace casimir::exact

#endif
