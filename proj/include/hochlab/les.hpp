#pragma once

// The six-term-per-degree ladder of an algebra extension: the chain complex
// of the ideal embeds factorwise into the complex of the total algebra, the
// quotient complex lives on the canonical complement coordinates, and the
// connecting map is computed by the explicit lift / boundary / unembed
// zig-zag.  Exactness is certified junction by junction: the composite of
// consecutive maps must vanish and the incoming rank must equal the
// outgoing nullity.
//
// The comparison map from the quotient complex to the complex of the
// quotient algebra (factorwise projection, which kills the embedded
// subcomplex) is checked separately; whether it is a degreewise isomorphism
// on classes is exactly the excision question for the extension.

#include "hochlab/homology.hpp"
#include "hochlab/structures.hpp"

namespace hochlab {

struct LESWorkspace {
  const ExtensionSpec* ext = nullptr;
  ComplexKind kind = ComplexKind::hochschild;
  int max_degree = 0;
  // Indexed by degree 0..max_degree+1 (chain data) / 0..max_degree (classes).
  std::vector<SparseMatrix> iota;        // embedded complex, one matrix per degree
  std::vector<SubspaceBasis> sub;        // its column span
  std::vector<std::vector<Index>> axes;  // complement coordinates = Q basis
  std::vector<SparseMatrix> dq;          // dq[n]: Q_n -> Q_{n-1}, n >= 1
  std::vector<Subquotient> ha, hb, hq;
};

LESWorkspace les_workspace(const ExtensionSpec& ext, ComplexKind kind,
                           int max_degree, Index budget_cols = kDefaultColumnBudget);

// Coordinates of a total-complex vector in the quotient basis of degree n.
SparseVec quotient_project(const LESWorkspace& ws, int n, const SparseVec& b_vec);

// The complement-axes section: the canonical lift of a quotient vector.
// Any two lifts of the same vector differ by an element of sub[n].
SparseVec quotient_lift(const LESWorkspace& ws, int n, const SparseVec& q_vec);

// Connecting value on a lift of a degree-n quotient cycle: boundary in the
// total complex, unembed through iota, read off the class in H_{n-1}(ideal).
// Throws std::logic_error if the boundary fails to land in the embedded
// subcomplex (i.e. the input was not a lift of a cycle).
SparseVec connecting_class(const LESWorkspace& ws, int n, const SparseVec& b_lift);

struct JunctionCheck {
  std::string node;  // "ideal", "total" or "quotient"
  int degree = 0;
  Index incoming_rank = 0;
  Index outgoing_nullity = 0;
  bool composite_zero = true;
  bool exact = false;
};

struct LESReport {
  ComplexKind kind = ComplexKind::hochschild;
  int max_degree = 0;
  std::vector<Index> ideal_dims, total_dims, quotient_dims;  // class counts
  std::vector<SparseMatrix> iota_star;   // H_n(A) -> H_n(B)
  std::vector<SparseMatrix> pi_star;     // H_n(B) -> H_n(Q)
  std::vector<SparseMatrix> connecting;  // H_n(Q) -> H_{n-1}(A), n >= 1
  std::vector<JunctionCheck> junctions;
  bool exact = true;
};

// Junctions where one side would need degree max_degree+1 class data are
// omitted rather than guessed (the quotient node at max_degree still gets
// its incoming map checked against the connecting map below it).
LESReport les_of_subcomplex(const ExtensionSpec& ext, ComplexKind kind,
                            int max_degree, Index budget_cols = kDefaultColumnBudget);

struct ExcisionDegree {
  int degree = 0;
  Index quotient_complex_dim = 0;  // classes of the complement-coordinate complex
  Index quotient_algebra_dim = 0;  // classes of the quotient algebra's complex
  bool iso = false;
};

struct ExcisionReport {
  ComplexKind kind = ComplexKind::hochschild;
  std::vector<ExcisionDegree> degrees;
  bool all_iso = true;
};

ExcisionReport excision_compare(const ExtensionSpec& ext, ComplexKind kind,
                                int max_degree, Index budget_cols = kDefaultColumnBudget);

}  // namespace hochlab
