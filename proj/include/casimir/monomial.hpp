#ifndef CASIMIR_MONOMIAL_HPP
#define CASIMIR_MONOMIAL_HPP

#include <string>
#include <vector>

namespace casimir::exact {

/// Power product x_1^{a_1}...x_n^{a_n}, stored as its exponent vector.
struct Monomial {
  std::vector<int> exponents;

  Monomial() = default;
  explicit Monomial(int dimension) : exponents(dimension, 0) {}
  explicit Monomial(std::vector<int> exps) : exponents(std::move(exps)) {}

  int dimension() const { return static_cast<int>(exponents.size()); }

  int degree() const {
    int total = 0;
    for (int e : exponents) total += e;
    return total;
  }

  bool operator==(const Monomial& other) const = default;
};

/// Graded lexicographic order: compare by total degree, then lexicographically
/// on the exponent vector.
bool grlex_less(const Monomial& a, const Monomial& b);

/// Comparator placing the graded-lex largest monomial first; this is the
/// canonical term order throughout.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grlex_less(b, a);
  }
};

/// All monomials in `dimension` variables of total degree exactly `degree`,
/// listed in descending graded-lex order.
std::vector<Monomial> monomials_of_degree(int dimension, int degree);

}  // namespace casimir::exact

#endif
