#include "casimir/roots.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace casimir::exact {

namespace {

Rational eval_poly(const std::vector<Rational>& coeffs, const Rational& t) {
  Rational value = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) value = value * t + *it;
  return value;
}

// Synthetic division by (t - root); the division must be exact.
std::vector<Rational> deflate(const std::vector<Rational>& coeffs, const Rational& root) {
  int deg = static_cast<int>(coeffs.size()) - 1;
  std::vector<Rational> quotient(deg, Rational(0));
  Rational carry = coeffs[deg];
  for (int k = deg - 1; k >= 0; --k) {
    quotient[k] = carry;
    carry = coeffs[k] + carry * root;
  }
  if (carry != 0) throw std::logic_error("deflation by a non-root");
  return quotient;
}

std::vector<Int> positive_divisors(Int v) {
  if (v < 0) v = -v;
  std::vector<Int> divs;
  for (Int i = 1; i * i <= v; ++i) {
    if (v % i == 0) {
      divs.push_back(i);
      if (i * i != v) divs.push_back(v / i);
    }
  }
  return divs;
}

}  // namespace

std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs_in) {
  // Trim high-order zeros.
  std::vector<Rational> coeffs = coeffs_in;
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  if (coeffs.empty()) throw std::invalid_argument("rational_roots of zero polynomial");

  std::vector<Rational> roots;
  int deg = static_cast<int>(coeffs.size()) - 1;
  if (deg == 0) return roots;

  // Factor out t^m.
  int low = 0;
  while (coeffs[low] == 0) ++low;
  for (int k = 0; k < low; ++k) roots.emplace_back(0);
  std::vector<Rational> work(coeffs.begin() + low, coeffs.end());
  deg = static_cast<int>(work.size()) - 1;
  if (deg == 0) {
    std::sort(roots.begin(), roots.end());
    return roots;
  }

  // Clear denominators and divide out the integer content.
  Int lcm = 1;
  for (const Rational& c : work) lcm = boost::multiprecision::lcm(lcm, den(c));
  std::vector<Int> zints(deg + 1);
  Int content = 0;
  for (int k = 0; k <= deg; ++k) {
    zints[k] = num(work[k] * Rational(lcm));
    content = boost::multiprecision::gcd(content, zints[k]);
  }
  for (Int& z : zints) z /= content;

  std::set<Rational> candidates;
  for (const Int& p : positive_divisors(zints[0]))
    for (const Int& q : positive_divisors(zints[deg])) {
      candidates.insert(Rational(p, q));
      candidates.insert(Rational(-p, q));
    }

  for (const Rational& cand : candidates) {
    while (static_cast<int>(work.size()) > 1 && eval_poly(work, cand) == 0) {
      roots.push_back(cand);
      work = deflate(work, cand);
    }
  }

  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace casimir::exact
