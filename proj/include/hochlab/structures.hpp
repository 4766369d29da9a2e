#pragma once

// Finite shift frames: the ambient matrix algebra M_M with M = N*k + spare,
// the one-step down/up shifts S and R, the k-sized block projections, the
// order-2 conjugators realizing corner-to-block conjugation, and
// multiplication splittings of matrix algebras.
//
// Truncation policy: S drops the last coordinate, so R*S == 1 - E_{M,M};
// the defect sits in the spare tail whenever spare >= 1 and the identities
// that matter act on elements supported in the leading N*k block.

#include "hochlab/complexes.hpp"

namespace hochlab {

Element matrix_unit(const AlgebraPresentation& matrix_alg, Index row, Index col);

struct ShiftFrame {
  Index k = 1;
  Index N = 1;
  Index spare = 0;
  Index M = 1;  // N*k + spare
  AlgebraPresentation ambient;  // M_M with matrix view
  Element S;                    // down shift: S e_j = e_{j+1}, e_{M-1} -> 0
  Element R;                    // up shift, R == S^T
  std::vector<Element> P;       // P[l] projects onto coordinates [l*k, (l+1)*k), l = 0..N-1
};

// Validates the shift identities at construction: R == S^T, R*S == 1 - E_MM,
// P[l] orthogonal idempotents summing to the leading projection, and the
// corner membership predicate (R^k a == 0 and a S^k == 0 iff a is supported
// in the leading k x k corner).
ShiftFrame make_shift_frame(Index k, Index N, Index spare = 0);

Element shift_power(const ShiftFrame& f, Index j);     // S^j
Element coshift_power(const ShiftFrame& f, Index j);   // R^j

// Basis indices of the ambient algebra spanning the leading k x k corner.
std::vector<Index> corner_basis(const ShiftFrame& f);
ChainSpace corner_space(const ShiftFrame& f);
bool in_corner(const ShiftFrame& f, const Element& a);

// sum_{l=0}^{count-1} S^{lk} a R^{lk}; requires corner support and count*k <= M.
Element block_amplify(const ShiftFrame& f, const Element& a, Index count);

// Signed coordinate permutations u e_j = sign[p(j)] e_{p(j)}, stored
// combinatorially (sign indexed by output coordinate).
struct SignedPermutation {
  std::vector<Index> perm;
  std::vector<int> sign;

  Index size() const { return perm.size(); }
  static SignedPermutation identity(Index n);
  SignedPermutation compose(const SignedPermutation& other) const;  // this after other
  SignedPermutation inverse() const;
  std::vector<int> signs_by_input() const;  // D' with  D Pi == Pi D'
  Element to_element(const AlgebraPresentation& matrix_alg) const;
  SparseMatrix to_matrix() const;
  bool operator==(const SignedPermutation& other) const = default;
};

// The order-2 permutation swapping the leading k coordinates with the next k;
// conjugation by it realizes a |-> S^k a R^k on the corner (validated over
// the corner basis at construction).  Requires 2k <= M.
SignedPermutation shift_conjugator(const ShiftFrame& f, Index k);

// Multiplication splitting of a matrix algebra through a pivot index:
// E_{ij} |-> E_{i,pivot} (x) E_{pivot,j}.  Validated at construction:
// mu(s(x)) == x and the bimodule laws s(xy) == x.s(y) == s(x).y on basis pairs.
struct SplittingData {
  const AlgebraPresentation* alg = nullptr;
  Index pivot = 0;
};

SplittingData corner_splitting(const AlgebraPresentation& matrix_alg, Index pivot);
Chain apply_splitting(const SplittingData& s, const Element& x);  // degree 1

// Module actions of the algebra on chains: multiply the first factor from the
// left / the last factor from the right.
Chain left_mult(const Element& a, const Chain& c);
Chain right_mult(const Chain& c, const Element& a);

// The extension 0 -> M_M -> M_M (+) span{1, u} -> span{1, u} -> 0 where u is
// the order-2 conjugator of the frame and the multipliers act by matrix
// multiplication.
ExtensionSpec conjugator_extension(const ShiftFrame& f, Index k);

}  // namespace hochlab
