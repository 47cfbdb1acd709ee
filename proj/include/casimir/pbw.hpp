#ifndef CASIMIR_PBW_HPP
#define CASIMIR_PBW_HPP

#include <map>
#include <string>
#include <vector>

#include "casimir/polynomial.hpp"
#include "casimir/structure.hpp"

namespace casimir::enveloping {

using exact::Monomial;
using exact::Polynomial;
using exact::Rational;

/// Element of the universal enveloping algebra, written in the Poincare-
/// Birkhoff-Witt basis: each monomial stands for the ordered product
/// v_1^{a_1} ... v_n^{a_n} in the fixed basis order. Terms are kept in
/// descending graded-lex order with no zero coefficients.
class PBWElement {
 public:
  using TermMap = std::map<Monomial, Rational, exact::GrlexDescending>;

  PBWElement() : dimension_(0) {}
  explicit PBWElement(int dimension) : dimension_(dimension) {}

  static PBWElement constant(int dimension, const Rational& value);
  /// The generator v_{index+1} as an element of the enveloping algebra.
  static PBWElement generator(int dimension, int index);
  static PBWElement term(int dimension, const Monomial& m, const Rational& coeff);

  int dimension() const { return dimension_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  void add_term(const Monomial& m, const Rational& coeff);

  PBWElement operator+(const PBWElement& other) const;
  PBWElement operator-(const PBWElement& other) const;
  PBWElement scale(const Rational& c) const;
  bool operator==(const PBWElement& other) const = default;

  /// Total degree of the filtration; -1 for zero.
  int degree() const;

  /// Top-degree part as a commutative polynomial (the principal symbol).
  Polynomial symbol() const;

  std::string str(const std::vector<std::string>& labels = {}) const;

 private:
  int dimension_;
  TermMap terms_;
};

/// Product in the enveloping algebra, returned in PBW normal form. Out-of-
/// order adjacent factors are straightened with v_j v_i = v_i v_j + [v_j, v_i];
/// each rewrite lowers (degree, inversions) lexicographically, so the
/// procedure terminates.
PBWElement pbw_mul(const liealg::StructureConstants& c, const PBWElement& a,
                   const PBWElement& b);

/// The symmetrization map from polynomials into the enveloping algebra:
/// x_{i1}...x_{ik} maps to the average of all k! ordered products. Exact but
/// factorial in the degree, which is fine at the degrees used here.
PBWElement symmetrize(const liealg::StructureConstants& c, const Polynomial& p);

struct CentralityResult {
  bool central = false;
  /// First basis generator that fails to commute, with the commutator
  /// [v_i, u] as the witness; -1 when central.
  int witness_index = -1;
  PBWElement commutator;
};

/// Centrality test against every basis generator; sufficient because the
/// generators generate the enveloping algebra.
CentralityResult is_central(const liealg::StructureConstants& c, const PBWElement& u);

}  // namespace casimir::enveloping

#endif
