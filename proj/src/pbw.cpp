#include "casimir/pbw.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace casimir::enveloping {

using liealg::StructureConstants;

PBWElement PBWElement::constant(int dimension, const Rational& value) {
  PBWElement u(dimension);
  u.add_term(Monomial(dimension), value);
  return u;
}

PBWElement PBWElement::generator(int dimension, int index) {
  if (index < 0 || index >= dimension)
    throw std::invalid_argument("generator index out of range");
  Monomial m(dimension);
  m.exponents[index] = 1;
  PBWElement u(dimension);
  u.add_term(m, 1);
  return u;
}

PBWElement PBWElement::term(int dimension, const Monomial& m, const Rational& coeff) {
  if (m.dimension() != dimension) throw std::invalid_argument("monomial dimension mismatch");
  PBWElement u(dimension);
  u.add_term(m, coeff);
  return u;
}

void PBWElement::add_term(const Monomial& m, const Rational& coeff) {
  if (m.dimension() != dimension_)
    throw std::invalid_argument("monomial dimension mismatch");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

PBWElement PBWElement::operator+(const PBWElement& other) const {
  if (dimension_ != other.dimension_) throw std::invalid_argument("dimension mismatch");
  PBWElement out = *this;
  for (const auto& [m, c] : other.terms_) out.add_term(m, c);
  return out;
}

PBWElement PBWElement::operator-(const PBWElement& other) const {
  if (dimension_ != other.dimension_) throw std::invalid_argument("dimension mismatch");
  PBWElement out = *this;
  for (const auto& [m, c] : other.terms_) out.add_term(m, -c);
  return out;
}

PBWElement PBWElement::scale(const Rational& c) const {
  PBWElement out(dimension_);
  if (c == 0) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
  return out;
}

int PBWElement::degree() const {
  if (terms_.empty()) return -1;
  return terms_.begin()->first.degree();
}

Polynomial PBWElement::symbol() const {
  Polynomial p(dimension_);
  if (terms_.empty()) return p;
  int top = degree();
  for (const auto& [m, c] : terms_) {
    if (m.degree() != top) break;  // descending graded order
    p.add_term(m, c);
  }
  return p;
}

std::string PBWElement::str(const std::vector<std::string>& labels) const {
  Polynomial rendered(dimension_);
  for (const auto& [m, c] : terms_) rendered.add_term(m, c);
  return rendered.str(labels);
}

namespace {

std::vector<int> word_of(const Monomial& m) {
  std::vector<int> word;
  for (int i = 0; i < m.dimension(); ++i)
    for (int e = 0; e < m.exponents[i]; ++e) word.push_back(i);
  return word;
}

Monomial monomial_of(int dimension, const std::vector<int>& word) {
  Monomial m(dimension);
  for (int i : word) m.exponents[i] += 1;
  return m;
}

// Rewrites an arbitrary word of generators into PBW normal form and adds the
// result, scaled by coeff, into out.
void straighten_into(const StructureConstants& c, std::vector<int> word, Rational coeff,
                     PBWElement& out) {
  int n = c.dimension();
  std::vector<std::pair<std::vector<int>, Rational>> stack;
  stack.emplace_back(std::move(word), std::move(coeff));
  while (!stack.empty()) {
    auto [w, cf] = std::move(stack.back());
    stack.pop_back();

    int pos = -1;
    for (int t = 0; t + 1 < static_cast<int>(w.size()); ++t) {
      if (w[t] > w[t + 1]) {
        pos = t;
        break;
      }
    }
    if (pos < 0) {
      out.add_term(monomial_of(n, w), cf);
      continue;
    }

    // v_j v_i = v_i v_j + [v_j, v_i] for the out-of-order pair (j, i).
    std::vector<int> swapped = w;
    std::swap(swapped[pos], swapped[pos + 1]);
    for (const auto& [k, value] : c.bracket_coeffs(w[pos], w[pos + 1])) {
      std::vector<int> contracted;
      contracted.reserve(w.size() - 1);
      contracted.insert(contracted.end(), w.begin(), w.begin() + pos);
      contracted.push_back(k);
      contracted.insert(contracted.end(), w.begin() + pos + 2, w.end());
      stack.emplace_back(std::move(contracted), cf * value);
    }
    stack.emplace_back(std::move(swapped), std::move(cf));
  }
}

}  // namespace

PBWElement pbw_mul(const StructureConstants& c, const PBWElement& a, const PBWElement& b) {
  if (a.dimension() != c.dimension() || b.dimension() != c.dimension())
    throw std::invalid_argument("pbw_mul dimension mismatch");
  PBWElement out(c.dimension());
  for (const auto& [ma, ca] : a.terms()) {
    std::vector<int> left = word_of(ma);
    for (const auto& [mb, cb] : b.terms()) {
      std::vector<int> word = left;
      for (int i : word_of(mb)) word.push_back(i);
      straighten_into(c, std::move(word), ca * cb, out);
    }
  }
  return out;
}

PBWElement symmetrize(const StructureConstants& c, const Polynomial& p) {
  if (p.dimension() != c.dimension())
    throw std::invalid_argument("symmetrize dimension mismatch");
  int n = c.dimension();
  PBWElement out(n);
  for (const auto& [m, coeff] : p.terms()) {
    std::vector<int> letters = word_of(m);
    int k = static_cast<int>(letters.size());
    if (k == 0) {
      out.add_term(m, coeff);
      continue;
    }
    exact::Int factorial = 1;
    for (int t = 2; t <= k; ++t) factorial *= t;
    Rational share = coeff / Rational(factorial);

    std::vector<int> order(k);
    for (int t = 0; t < k; ++t) order[t] = t;
    do {
      std::vector<int> word(k);
      for (int t = 0; t < k; ++t) word[t] = letters[order[t]];
      straighten_into(c, std::move(word), share, out);
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return out;
}

CentralityResult is_central(const StructureConstants& c, const PBWElement& u) {
  int n = c.dimension();
  for (int i = 0; i < n; ++i) {
    PBWElement xi = PBWElement::generator(n, i);
    PBWElement commutator = pbw_mul(c, xi, u) - pbw_mul(c, u, xi);
    if (!commutator.is_zero()) return {false, i, std::move(commutator)};
  }
  return {true, -1, PBWElement(n)};
}

}  // namespace casimir::enveloping
