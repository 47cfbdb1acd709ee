#ifndef CASIMIR_STRUCTURE_HPP
#define CASIMIR_STRUCTURE_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "casimir/matrix.hpp"
#include "casimir/rational.hpp"

namespace casimir::liealg {

using exact::Rational;
using exact::RationalMatrix;

/// A Lie algebra presented by its structure constants: [v_i, v_j] =
/// sum_k c(i,j,k) v_k in a fixed basis. Only entries with i < j are stored;
/// antisymmetry is implied. All indices are 0-based.
class StructureConstants {
 public:
  explicit StructureConstants(int dimension, std::vector<std::string> labels = {});

  int dimension() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Sets c(i,j,k) for i != j; a value with i > j is stored as -c at (j,i).
  void set(int i, int j, int k, const Rational& value);

  Rational c(int i, int j, int k) const;

  /// Nonzero coefficients of [v_i, v_j] as (k, c) pairs; handles either order
  /// of i and j.
  std::vector<std::pair<int, Rational>> bracket_coeffs(int i, int j) const;

  /// [u, v] extended bilinearly from the basis brackets.
  std::vector<Rational> bracket(const std::vector<Rational>& u,
                                const std::vector<Rational>& v) const;

  /// Stored (i, j) -> {k -> c} table with i < j; iteration order is fixed.
  const std::map<std::pair<int, int>, std::map<int, Rational>>& table() const {
    return table_;
  }

 private:
  void check_index(int i) const;

  int n_;
  std::vector<std::string> labels_;
  std::map<std::pair<int, int>, std::map<int, Rational>> table_;
};

/// Subspace of the ambient coordinate space, kept as a reduced-echelon basis
/// so equality and containment are direct comparisons.
class SubSpace {
 public:
  explicit SubSpace(int ambient) : ambient_(ambient) {}
  static SubSpace full(int ambient);
  static SubSpace span(int ambient, const std::vector<std::vector<Rational>>& vectors);

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<std::vector<Rational>>& basis() const { return basis_; }
  const std::vector<int>& pivot_columns() const { return pivots_; }

  bool contains(const std::vector<Rational>& v) const;
  bool contains(const SubSpace& other) const;
  bool operator==(const SubSpace& other) const = default;

  SubSpace sum(const SubSpace& other) const;

  /// Residue of v after eliminating the pivot coordinates; zero iff v lies in
  /// the subspace, and the map v -> reduce(v) is linear with this kernel.
  std::vector<Rational> reduce(const std::vector<Rational>& v) const;

  /// Coordinates of v in the stored basis, if v lies in the subspace.
  std::optional<std::vector<Rational>> coordinates_of(const std::vector<Rational>& v) const;

 private:
  int ambient_;
  std::vector<std::vector<Rational>> basis_;
  std::vector<int> pivots_;
};

struct ValidationResult {
  bool ok = true;
  // First violating triple (i, j, l), 0-based, with the nonzero cyclic sum.
  int i = -1, j = -1, l = -1;
  std::vector<Rational> cyclic_sum;
};

/// Checks the Jacobi identity over all triples i < j < l.
ValidationResult validate(const StructureConstants& c);

/// Span of all pairwise brackets of basis vectors of U and V.
SubSpace bracket_subspaces(const StructureConstants& c, const SubSpace& u,
                           const SubSpace& v);

enum class SeriesKind { Derived, LowerCentral };

/// Derived series L >= [L,L] >= [[L,L],[L,L]] >= ... or lower central series
/// L >= [L,L] >= [L,[L,L]] >= ...; the chain starts at L and stops at the
/// first zero term or the first repetition.
std::vector<SubSpace> series(const StructureConstants& c, SeriesKind kind);

/// Series of a subalgebra computed inside the ambient coordinates.
std::vector<SubSpace> series_of(const StructureConstants& c, const SubSpace& start,
                                SeriesKind kind);

/// Matrix of ad v : u -> [v, u] in the given basis.
RationalMatrix adjoint_matrix(const StructureConstants& c, const std::vector<Rational>& v);

bool is_nilpotent_matrix(const RationalMatrix& m);

/// Killing form K(i,j) = trace(ad v_i ad v_j).
RationalMatrix killing_form(const StructureConstants& c);

/// The radical as the Killing-orthogonal complement of [L,L]. The result is
/// cross-checked to be a solvable ideal with semisimple quotient; a failure
/// of that check is a bug and throws std::logic_error.
SubSpace radical(const StructureConstants& c);

/// Structure constants of the subalgebra spanned by `basis`, written in that
/// basis. Requires the span to be closed under the bracket.
StructureConstants subalgebra_constants(const StructureConstants& c,
                                        const std::vector<std::vector<Rational>>& basis);

/// Structure constants of the quotient L / ideal on the coordinate directions
/// complementary to the ideal.
StructureConstants quotient_constants(const StructureConstants& c, const SubSpace& ideal);

struct LeviDecomposition {
  SubSpace levi;
  SubSpace radical;
};

struct LeviResult {
  std::optional<LeviDecomposition> value;
  std::string rejection;
  bool ok() const { return value.has_value(); }
};

/// Verifies that span(s_basis) is a Levi factor: a subalgebra with
/// nondegenerate Killing form meeting the radical trivially and of
/// complementary dimension. Never attempts to construct one.
LeviResult verify_levi(const StructureConstants& c,
                       const std::vector<std::vector<Rational>>& s_basis);

/// Fixed points of the Levi factor acting on the radical:
/// {v in R : [s, v] = 0 for all s in the Levi basis}.
SubSpace fixed_subspace(const LeviDecomposition& d, const StructureConstants& c);

struct TheoremAReport {
  bool is_perfect = false;   // [L,L] = L
  bool contained = false;    // fixed subspace of R lies inside [R,R]
  bool agree = false;        // is_perfect == contained
  bool dim_identity = false; // R = R^S (+) [S,R] as a direct sum of subspaces
};

TheoremAReport theorem_a_check(const LeviDecomposition& d, const StructureConstants& c);

struct StructureReport {
  bool is_solvable = false;
  bool is_nilpotent = false;
  SubSpace radical;
  bool radical_is_nilpotent = false;
  bool radical_is_abelian = false;
  bool is_perfect = false;
  bool is_semisimple = false;
  std::vector<int> derived_series_dims;
  std::vector<int> lower_central_dims;
  std::vector<int> radical_lower_central_dims;
  std::optional<LeviDecomposition> levi;

  StructureReport() : radical(0) {}
};

/// Raised when a declared Levi basis fails verification.
struct LeviRejection : std::runtime_error {
  explicit LeviRejection(const std::string& what) : std::runtime_error(what) {}
};

/// Aggregated structural flags. When s_basis is given it is verified first
/// and a rejection propagates as LeviRejection.
StructureReport structure_report(
    const StructureConstants& c,
    const std::optional<std::vector<std::vector<Rational>>>& s_basis = std::nullopt);

}  // namespace casimir::liealg

#endif
