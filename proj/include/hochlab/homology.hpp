#pragma once

// Homology and cohomology of the cyclic-face and bar complexes of a finite
// presentation, degreewise as exact subquotients, plus maps induced on
// classes by chain maps.  Column budgets guard against accidentally
// materializing a differential too large for exact elimination.

#include <optional>
#include <string>

#include "hochlab/complexes.hpp"

namespace hochlab {

enum class ComplexKind { hochschild, bar };

inline const char* kind_name(ComplexKind k) {
  return k == ComplexKind::hochschild ? "hochschild" : "bar";
}

constexpr Index kDefaultColumnBudget = 250000;

struct DegreeReport {
  int degree = 0;
  Index space_dim = 0;
  Index cycle_rank = 0;
  Index boundary_rank = 0;
  Index dim = 0;
  std::vector<SparseVec> representatives;
};

struct HomologyReport {
  std::string algebra_hash;
  ComplexKind kind = ComplexKind::hochschild;
  int max_degree = 0;
  std::vector<DegreeReport> degrees;  // index == degree
};

// Degree 0 has no outgoing differential: H_0 is C_0 modulo the image of the
// degree-1 differential (commutators for the cyclic complex, products for
// the bar complex).  Throws std::length_error when a needed differential
// would exceed budget_cols source columns.
HomologyReport homology(const AlgebraPresentation& a, ComplexKind kind,
                        int max_degree, Index budget_cols = kDefaultColumnBudget);

// Dual complex via transposed differentials; representatives are cocycles.
// The dimensions agree with homology degreewise over a field, which callers
// may use as a consistency check.
HomologyReport cohomology(const AlgebraPresentation& a, int max_degree,
                          Index budget_cols = kDefaultColumnBudget);

struct HUnitality {
  int checked_up_to = 0;
  std::vector<Index> bar_dims;        // bar homology dimension per degree
  bool h_unital = false;              // all dimensions zero up to checked_up_to
  std::optional<int> first_failure;   // smallest degree with a nonzero class
};

// Rank-based bar acyclicity up to a degree.  Degree 0 participates: the
// degree-1 bar differential must already be onto.
HUnitality h_unitality(const AlgebraPresentation& a, int max_degree,
                       Index budget_cols = kDefaultColumnBudget);

struct InducedMap {
  int degree = 0;
  Index source_dim = 0;
  Index target_dim = 0;
  SparseMatrix on_classes;  // target_dim x source_dim in representative bases
  bool iso = false;
};

// Image of homology classes under a chain map whose source is a full chain
// space.  Verifies the chain-map property at the two degrees that feed the
// classes (throws std::invalid_argument if the map fails to commute with the
// differentials there).
InducedMap induced_map(const GradedMap& f, const AlgebraPresentation& target,
                       ComplexKind kind, int degree,
                       Index budget_cols = kDefaultColumnBudget);

// The cyclic contraction  E(i0,j0) (x) ... (x) E(in,jn)  |->
// [j0==i1][j1==i2]...[jn==i0] * (basis tuple of scalars); a chain map from
// the complex of a matrix algebra to the complex of the scalars that induces
// an isomorphism on homology in every degree.
GradedMap trace_map(const AlgebraPresentation& matrix_alg,
                    const AlgebraPresentation& scalars);

}  // namespace hochlab
