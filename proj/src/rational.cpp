#include "casimir/rational.hpp"

#include <cctype>

namespace casimir::exact {

std::string to_string(const Rational& r) {
  std::string s = num(r).str();
  if (den(r) != 1) {
    s += "/";
    s += den(r).str();
  }
  return s;
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& text) {
  std::string body = text;
  bool negative = false;
  if (!body.empty() && body[0] == '-') {
    negative = true;
    body = body.substr(1);
  }
  std::string num_part = body;
  std::string den_part = "1";
  if (auto slash = body.find('/'); slash != std::string::npos) {
    num_part = body.substr(0, slash);
    den_part = body.substr(slash + 1);
  }
  if (!all_digits(num_part) || !all_digits(den_part)) return std::nullopt;
  Int n(num_part);
  Int d(den_part);
  if (d == 0) return std::nullopt;
  if (negative) n = -n;
  return Rational(n, d);
}

}  // namespace casimir::exact
