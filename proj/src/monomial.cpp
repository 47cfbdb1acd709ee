#include "casimir/monomial.hpp"

#include <cassert>

namespace casimir::exact {

bool grlex_less(const Monomial& a, const Monomial& b) {
  assert(a.dimension() == b.dimension());
  int da = a.degree();
  int db = b.degree();
  if (da != db) return da < db;
  return a.exponents < b.exponents;
}

namespace {

void enumerate(int remaining_vars, int remaining_degree, std::vector<int>& prefix,
               std::vector<Monomial>& out) {
  if (remaining_vars == 1) {
    prefix.push_back(remaining_degree);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int e = remaining_degree; e >= 0; --e) {
    prefix.push_back(e);
    enumerate(remaining_vars - 1, remaining_degree - e, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int dimension, int degree) {
  std::vector<Monomial> out;
  if (dimension == 0) {
    if (degree == 0) out.emplace_back(std::vector<int>{});
    return out;
  }
  std::vector<int> prefix;
  prefix.reserve(dimension);
  enumerate(dimension, degree, prefix, out);
  return out;
}

}  // namespace casimir::exact
