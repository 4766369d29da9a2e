#pragma once

// Finite-dimensional associative Q-algebras given by sparse structure
// constants over a distinguished basis.  Every constructor validates
// associativity exhaustively over basis triples before anything downstream
// may touch the presentation; a failed law names the witness triple.

#include <optional>
#include <string>
#include <vector>

#include "hochlab/linalg.hpp"
#include "hochlab/sparse.hpp"

namespace hochlab {

// Elements are sparse coordinate vectors over the algebra basis; operations
// keep them free of explicit zeros.
using Element = SparseVec;

struct AlgebraPresentation {
  Index dim = 0;
  std::vector<std::string> labels;
  std::optional<Index> unit;  // set when a basis element is the unit
  // products[i][j]: coordinates of basis_i * basis_j
  std::vector<std::vector<SparseVec>> products;
  std::string content_hash;

  // Present when the basis is the matrix-unit basis of M_m: basis index b
  // stands for E_{row(b)+1, col(b)+1}.  Norm computations require it.
  struct MatrixView {
    Index m = 0;
    Index row(Index b) const { return b / m; }
    Index col(Index b) const { return b % m; }
    Index unit_index(Index r, Index c) const { return r * m + c; }
  };
  std::optional<MatrixView> matrix_view;

  // Optional per-basis norm override for algebras without a matrix view.
  std::optional<std::map<Index, Rat>> norm_assignment;

  bool is_zero_product(Index i, Index j) const {
    return products[i][j].is_zero();
  }
};

// Validates shapes, label count, index ranges, associativity over all basis
// triples and the unit law when `unit` is set; computes the content hash.
// Throws std::invalid_argument with a witness on any violation.
AlgebraPresentation finalize_presentation(AlgebraPresentation p);

AlgebraPresentation make_matrix_algebra(Index m);
AlgebraPresentation make_scalar_algebra();              // dim 1, unital
AlgebraPresentation make_square_zero_algebra(Index d);  // all products zero
AlgebraPresentation unitization(const AlgebraPresentation& a);

Element multiply(const AlgebraPresentation& a, const Element& x, const Element& y);
Element unit_element(const AlgebraPresentation& a);  // throws if no unit index

struct ExtensionSpec {
  AlgebraPresentation ideal;
  AlgebraPresentation total;
  AlgebraPresentation quotient;
  SparseMatrix inclusion;   // total.dim x ideal.dim, algebra map, injective
  SparseMatrix projection;  // quotient.dim x total.dim, algebra map, onto
  SparseMatrix section;     // total.dim x quotient.dim, linear right inverse
};

// Checks the maps are algebra maps where required, the inclusion lands on a
// two-sided ideal equal to ker(projection), and projection * section == id.
void validate_extension(const ExtensionSpec& ext);

// B = A (+) C with product (a,c)(a',c') = (aa' + c.a' + a.c', cc').
// `left[c]` / `right[c]` are A->A matrices for the action of basis c of C.
// The action must satisfy the bimodule laws; violations report the witness.
ExtensionSpec semidirect_product(const AlgebraPresentation& ideal,
                                 const AlgebraPresentation& multipliers,
                                 const std::vector<SparseMatrix>& left,
                                 const std::vector<SparseMatrix>& right);

// Unitization packaged as an extension 0 -> A -> A~ -> Q -> 0.
ExtensionSpec unitization_extension(const AlgebraPresentation& a);

}  // namespace hochlab
