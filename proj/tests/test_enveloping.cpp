#include <doctest.h>

#include "casimir/algebra_file.hpp"
#include "casimir/invariants.hpp"
#include "casimir/pbw.hpp"

#include "helpers.hpp"

using namespace casimir::enveloping;
using casimir::exact::Monomial;
using casimir::exact::Polynomial;
using casimir::exact::Rational;
using casimir::liealg::StructureConstants;
using testutil::make_abelian;
using testutil::make_h3;
using testutil::make_sl2;

namespace {

PBWElement gen(int n, int i) { return PBWElement::generator(n, i); }

// Multiplies single generators together with a chosen association order.
PBWElement fold_word(const StructureConstants& c, const std::vector<int>& word,
                     bool left_to_right) {
  int n = c.dimension();
  if (word.empty()) return PBWElement::constant(n, 1);
  if (left_to_right) {
    PBWElement acc = gen(n, word[0]);
    for (size_t t = 1; t < word.size(); ++t) acc = pbw_mul(c, acc, gen(n, word[t]));
    return acc;
  }
  PBWElement acc = gen(n, word.back());
  for (size_t t = word.size() - 1; t-- > 0;) acc = pbw_mul(c, gen(n, word[t]), acc);
  return acc;
}

}  // namespace

TEST_CASE("straightening in sl(2): f e = ef - h") {
  StructureConstants sl2 = make_sl2();
  PBWElement fe = pbw_mul(sl2, gen(3, 1), gen(3, 0));
  PBWElement expected(3);
  expected.add_term(Monomial({1, 1, 0}), 1);
  expected.add_term(Monomial({0, 0, 1}), -1);
  CHECK(fe == expected);

  // Already ordered pairs square without correction terms.
  PBWElement ee = pbw_mul(sl2, gen(3, 0), gen(3, 0));
  CHECK(ee == PBWElement::term(3, Monomial({2, 0, 0}), 1));
}

TEST_CASE("abelian enveloping algebra multiplies commutatively") {
  StructureConstants ab = make_abelian(3);
  auto g = testutil::rng(201);
  for (int t = 0; t < 30; ++t) {
    Polynomial p = testutil::rand_polynomial(g, 3, 3, 2);
    Polynomial q = testutil::rand_polynomial(g, 3, 3, 2);
    PBWElement a(3), b(3);
    for (const auto& [m, c] : p.terms()) a.add_term(m, c);
    for (const auto& [m, c] : q.terms()) b.add_term(m, c);
    PBWElement prod = pbw_mul(ab, a, b);
    Polynomial expected = p * q;
    PBWElement expected_el(3);
    for (const auto& [m, c] : expected.terms()) expected_el.add_term(m, c);
    CHECK(prod == expected_el);
    CHECK(pbw_mul(ab, b, a) == prod);
  }
}

TEST_CASE("multiplication is associative regardless of association order") {
  auto g = testutil::rng(203);
  for (const auto& f : casimir::cli::catalog()) {
    StructureConstants c = f.to_constants();
    int n = c.dimension();
    for (int t = 0; t < 25; ++t) {
      int len = testutil::rand_int(g, 1, 5);
      std::vector<int> word(len);
      for (int& w : word) w = testutil::rand_int(g, 0, n - 1);
      CHECK(fold_word(c, word, true) == fold_word(c, word, false));
    }
  }
}

TEST_CASE("top symbol of a product is the product of symbols") {
  StructureConstants sl2 = make_sl2();
  auto g = testutil::rng(207);
  for (int t = 0; t < 30; ++t) {
    Polynomial p = testutil::rand_polynomial(g, 3, 2, 2);
    Polynomial q = testutil::rand_polynomial(g, 3, 2, 2);
    if (p.is_zero() || q.is_zero()) continue;
    // Promote the polynomials to PBW elements term by term.
    PBWElement a(3), b(3);
    for (const auto& [m, c] : p.terms()) a.add_term(m, c);
    for (const auto& [m, c] : q.terms()) b.add_term(m, c);
    PBWElement prod = pbw_mul(sl2, a, b);
    CHECK(prod.symbol() == a.symbol() * b.symbol());
  }
}

TEST_CASE("symmetrization fixes degree one and abelian inputs") {
  StructureConstants sl2 = make_sl2();
  Polynomial x3 = Polynomial::variable(3, 2);
  CHECK(symmetrize(sl2, x3) == gen(3, 2));

  StructureConstants ab = make_abelian(3);
  auto g = testutil::rng(211);
  for (int t = 0; t < 20; ++t) {
    Polynomial p = testutil::rand_polynomial(g, 3, 3, 2);
    PBWElement expected(3);
    for (const auto& [m, c] : p.terms()) expected.add_term(m, c);
    CHECK(symmetrize(ab, p) == expected);
  }
}

TEST_CASE("symmetrizing the sl(2) Casimir polynomial") {
  StructureConstants sl2 = make_sl2();
  Polynomial p = Polynomial::variable(3, 2) * Polynomial::variable(3, 2) +
                 (Polynomial::variable(3, 0) * Polynomial::variable(3, 1)).scale(4);
  PBWElement casimir = symmetrize(sl2, p);

  PBWElement expected(3);
  expected.add_term(Monomial({0, 0, 2}), 1);   // h^2
  expected.add_term(Monomial({1, 1, 0}), 4);   // 4 ef
  expected.add_term(Monomial({0, 0, 1}), -2);  // -2 h
  CHECK(casimir == expected);
  CHECK(casimir.str({"e", "f", "h"}) == "4*e*f + h^2 - 2*h");
}

TEST_CASE("symmetrization is linear") {
  StructureConstants sl2 = make_sl2();
  auto g = testutil::rng(223);
  for (int t = 0; t < 15; ++t) {
    Polynomial p = testutil::rand_polynomial(g, 3, 2, 2);
    Polynomial q = testutil::rand_polynomial(g, 3, 2, 2);
    Rational a = testutil::rand_rational(g);
    CHECK(symmetrize(sl2, p.scale(a) + q) ==
          symmetrize(sl2, p).scale(a) + symmetrize(sl2, q));
  }
}

TEST_CASE("centrality certificates") {
  StructureConstants sl2 = make_sl2();

  PBWElement casimir(3);
  casimir.add_term(Monomial({0, 0, 2}), 1);
  casimir.add_term(Monomial({1, 1, 0}), 4);
  casimir.add_term(Monomial({0, 0, 1}), -2);
  CentralityResult yes = is_central(sl2, casimir);
  CHECK(yes.central);
  CHECK(yes.witness_index == -1);

  // z is central in the Heisenberg algebra.
  CHECK(is_central(make_h3(), gen(3, 2)).central);

  // A bare generator of sl(2) is not central; the first failing generator in
  // basis order is f, with [f, e] = -h.
  CentralityResult no = is_central(sl2, gen(3, 0));
  CHECK(!no.central);
  CHECK(no.witness_index == 1);
  CHECK(no.commutator == PBWElement::term(3, Monomial({0, 0, 1}), -1));
  CHECK(!no.commutator.is_zero());
}

TEST_CASE("symmetrized invariants are central across the catalog") {
  for (const auto& f : casimir::cli::catalog()) {
    StructureConstants c = f.to_constants();
    auto set = casimir::invariants::polynomial_invariants(c, 3);
    for (const auto& p : set.polys) {
      CentralityResult res = is_central(c, symmetrize(c, p));
      CHECK(res.central);
    }
  }

  // And a non-invariant fails with a nonzero witness.
  StructureConstants sl2 = make_sl2();
  CentralityResult res = is_central(sl2, symmetrize(sl2, Polynomial::variable(3, 0)));
  CHECK(!res.central);
  CHECK(!res.commutator.is_zero());
}
