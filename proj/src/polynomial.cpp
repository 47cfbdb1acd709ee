#include "casimir/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace casimir::exact {

Polynomial Polynomial::constant(int dimension, const Rational& value) {
  Polynomial p(dimension);
  p.add_term(Monomial(dimension), value);
  return p;
}

Polynomial Polynomial::variable(int dimension, int index) {
  if (index < 0 || index >= dimension)
    throw std::invalid_argument("variable index out of range");
  Monomial m(dimension);
  m.exponents[index] = 1;
  Polynomial p(dimension);
  p.add_term(m, 1);
  return p;
}

Polynomial Polynomial::term(int dimension, const Monomial& m, const Rational& coeff) {
  if (m.dimension() != dimension)
    throw std::invalid_argument("monomial dimension mismatch");
  Polynomial p(dimension);
  p.add_term(m, coeff);
  return p;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return terms_.begin()->first.degree();
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  return true;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.begin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.begin()->second;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& coeff) {
  if (m.dimension() != dimension_)
    throw std::invalid_argument("monomial dimension mismatch");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_dimension(const Polynomial& other) const {
  if (dimension_ != other.dimension_)
    throw std::invalid_argument("polynomial dimension mismatch");
}

Polynomial Polynomial::operator-() const {
  Polynomial out(dimension_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_dimension(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_dimension(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial out = *this;
  out += other;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  Polynomial out = *this;
  out -= other;
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_dimension(other);
  Polynomial out(dimension_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      Monomial m(dimension_);
      for (int i = 0; i < dimension_; ++i)
        m.exponents[i] = ma.exponents[i] + mb.exponents[i];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::scale(const Rational& c) const {
  Polynomial out(dimension_);
  if (c == 0) return out;
  for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
  return out;
}

Polynomial Polynomial::diff(int index) const {
  if (index < 0 || index >= dimension_)
    throw std::invalid_argument("derivative index out of range");
  Polynomial out(dimension_);
  for (const auto& [m, c] : terms_) {
    int e = m.exponents[index];
    if (e == 0) continue;
    Monomial dm = m;
    dm.exponents[index] = e - 1;
    out.add_term(dm, c * e);
  }
  return out;
}

Rational Polynomial::eval(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != dimension_)
    throw std::invalid_argument("evaluation point dimension mismatch");
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational value = c;
    for (int i = 0; i < dimension_; ++i) {
      for (int e = 0; e < m.exponents[i]; ++e) value *= point[i];
    }
    total += value;
  }
  return total;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scale(Rational(1) / leading_coefficient());
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
  check_dimension(divisor);
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  Polynomial quotient(dimension_);
  Polynomial remainder = *this;
  const Monomial& dlm = divisor.leading_monomial();
  while (!remainder.is_zero()) {
    const Monomial& rlm = remainder.leading_monomial();
    Monomial q(dimension_);
    for (int i = 0; i < dimension_; ++i) {
      int e = rlm.exponents[i] - dlm.exponents[i];
      if (e < 0) throw std::domain_error("inexact polynomial division");
      q.exponents[i] = e;
    }
    Rational qc = remainder.leading_coefficient() / divisor.leading_coefficient();
    Polynomial qt = Polynomial::term(dimension_, q, qc);
    quotient += qt;
    remainder -= qt * divisor;
  }
  return quotient;
}

std::string Polynomial::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  auto var_name = [&](int i) {
    if (i < static_cast<int>(names.size())) return names[i];
    return "x" + std::to_string(i + 1);
  };
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool has_vars = m.degree() > 0;
    if (mag != 1 || !has_vars) {
      os << to_string(mag);
      if (has_vars) os << "*";
    }
    bool first_var = true;
    for (int i = 0; i < dimension_; ++i) {
      int e = m.exponents[i];
      if (e == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << var_name(i);
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace casimir::exact
