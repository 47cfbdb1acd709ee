#ifndef CASIMIR_INVARIANTS_HPP
#define CASIMIR_INVARIANTS_HPP

#include <string>
#include <vector>

#include "casimir/polynomial.hpp"
#include "casimir/structure.hpp"

namespace casimir::invariants {

using exact::Monomial;
using exact::Polynomial;
using exact::Rational;
using exact::RationalMatrix;

/// Linear vector field attached to the basis direction v_i: it acts on a
/// polynomial p as sum_j (sum_k c(i,j,k) x_k) dp/dx_j. These fields generate
/// the adjoint action on polynomials; their common kernel is the invariant
/// ring.
class GeneratorField {
 public:
  GeneratorField(const liealg::StructureConstants& c, int index);

  int index() const { return index_; }
  int dimension() const { return n_; }

  /// Coefficient of x_k in the linear form multiplying d/dx_j.
  Rational coeff(int j, int k) const;

  /// The linear form multiplying d/dx_j, as a polynomial.
  Polynomial coefficient_form(int j) const;

  Polynomial apply(const Polynomial& p) const;

  /// Matrix of the action on the span of `mons`, which must be closed under
  /// the action (any full homogeneous component is).
  RationalMatrix action_matrix(const std::vector<Monomial>& mons) const;

 private:
  int index_;
  int n_;
  // Sparse rows: for each j, the nonzero (k, coefficient) pairs.
  std::vector<std::vector<std::pair<int, Rational>>> rows_;
};

std::vector<GeneratorField> generators(const liealg::StructureConstants& c);

/// Deterministic stream of rational points with coordinates in
/// {-100..100} \ {0}; fixed seed so certificates are reproducible.
class PointGenerator {
 public:
  explicit PointGenerator(unsigned seed = kDefaultSeed);
  std::vector<Rational> next(int dimension);

  static constexpr unsigned kDefaultSeed = 987654321u;

 private:
  unsigned long long state_;
  int draw();
};

/// Number of functionally independent invariants: n minus the generic rank of
/// the matrix A(x), A[i][j] = sum_k c(i,j,k) x_k. The symbolic rank is
/// cross-checked against evaluations at three deterministic points; any
/// disagreement throws std::logic_error.
int invariant_count(const liealg::StructureConstants& c);

/// The A(x) matrix above, exposed for oracles and diagnostics.
exact::PolyMatrix commutator_matrix(const liealg::StructureConstants& c);

/// Monic basis of the space of invariant polynomials homogeneous of the given
/// degree (the common kernel of all generator fields on that component).
std::vector<Polynomial> invariant_space_of_degree(const liealg::StructureConstants& c,
                                                  int degree);

struct IndependenceCertificate {
  std::vector<Rational> point;
  int jacobian_rank = 0;
};

struct InvariantSet {
  std::vector<Polynomial> polys;
  IndependenceCertificate certificate;
  int expected_count = 0;
  bool count_matched = false;
};

/// Solves for invariants degree by degree up to max_degree and prunes the
/// union to a functionally independent set (greedy, certified by the Jacobian
/// rank at a random rational point with retries). A shortfall against
/// invariant_count is reported through count_matched, not an error: the
/// degree bound may simply be too small.
InvariantSet polynomial_invariants(const liealg::StructureConstants& c, int max_degree);

/// A linear functional on the algebra, given by its values on the basis.
struct Weight {
  std::vector<Rational> components;

  bool is_zero() const {
    for (const auto& v : components)
      if (v != 0) return false;
    return true;
  }
  bool operator==(const Weight& other) const = default;
};

struct SemiInvariant {
  Polynomial poly;
  Weight weight;
};

struct SemiInvariantResult {
  std::vector<SemiInvariant> items;
  /// Dimensions lost to eigenvalues that are not rational (counted with
  /// algebraic multiplicity); such weight spaces are out of reach over Q.
  int skipped_dimension = 0;
};

/// Simultaneous eigenvectors of the generator fields per homogeneous degree:
/// first intersect the kernels of directions lying in [L,L] (their weight
/// value is forced to zero), then split by common eigenvectors of the
/// remaining directions, with eigenvalues found through characteristic
/// polynomials and rational root extraction.
SemiInvariantResult semi_invariants(const liealg::StructureConstants& c, int max_degree);

/// True iff p1/p2 is invariant under every generator, checked as the exact
/// polynomial identity (v_i p1) p2 = p1 (v_i p2). Throws on zero p2.
bool quotient_invariant_check(const liealg::StructureConstants& c, const Polynomial& p1,
                              const Polynomial& p2);

struct DirectionReason {
  int index = -1;
  std::string reason;
};

struct ZeroWeightCertificate {
  bool ok = false;
  std::vector<DirectionReason> reasons;  // one per basis direction when ok
  std::vector<int> uncovered;            // directions outside [L,L] + radical
};

/// For an algebra whose radical is nilpotent, certifies that any weight of
/// the adjoint action on polynomials vanishes on every basis direction:
/// each direction lies in [L,L], in the radical (where ad is nilpotent), or
/// splits across the two. Throws std::invalid_argument when the radical is
/// not nilpotent.
ZeroWeightCertificate zero_weight_certificate(const liealg::StructureConstants& c);

}  // namespace casimir::invariants

#endif
