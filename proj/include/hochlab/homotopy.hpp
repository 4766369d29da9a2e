#pragma once

// Chain operators attached to a shift frame, and exact verdicts for the
// identities they satisfy.
//
// On corner chains (all factors in the leading k x k block) we provide the
// factorwise conjugation by l block-shift steps, the factorwise block
// amplification onto all N diagonal blocks, and the grade +1 insertion
// operators that place a block projection after a chosen slot, conjugating
// the factors before it and amplifying the factors after it.  The signed sum
// of the insertion operators is a chain homotopy interpolating between the
// conjugation and its leading-factor front term.
//
// Identity checks materialize both sides column by column over the corner
// tuple basis and compare exactly; a fail verdict carries the first failing
// source tuple and a pointwise re-evaluated residual, which is guaranteed
// nonzero.  Commutator insertion with its null-homotopy, the contraction
// built from a multiplication splitting, and boundary membership of
// conjugated cycles follow the same pattern on their own domains.
//
// All maps returned here keep references to the frame's ambient algebra (or
// the algebra passed in); the caller keeps those alive.

#include <map>
#include <string>
#include <vector>

#include "hochlab/complexes.hpp"
#include "hochlab/homology.hpp"
#include "hochlab/structures.hpp"

namespace hochlab {

// Factorwise a |-> S^{lk} a R^{lk}; grade 0.  Input must be a corner chain
// over the frame ambient; 0 <= l < N.
Chain shift_conjugate(const ShiftFrame& f, Index l, const Chain& c);

// Factorwise a |-> sum of the N shifted block copies of a; grade 0.
Chain amplify(const ShiftFrame& f, const Chain& c);

// Conjugate factors 0..i, insert P[l], amplify factors i+1..degree; grade +1.
Chain insert_projection(const ShiftFrame& f, Index l, int i, const Chain& c);

// sum_{i=0}^{degree} (-1)^{i+1} insert_projection(f, l, i, c).
Chain insertion_homotopy(const ShiftFrame& f, Index l, const Chain& c);

// The same operators as graded maps on the corner chain space.
GradedMap shift_conjugation_map(const ShiftFrame& f, Index l);
GradedMap amplification_map(const ShiftFrame& f);
GradedMap insertion_homotopy_map(const ShiftFrame& f, Index l);
GradedMap summed_insertion_homotopy_map(const ShiftFrame& f);

// a_0 x ... x a_n |-> conjugated a_0 x amplified tail; grade 0.  This is the
// defect term of the insertion homotopy.
GradedMap front_factor_map(const ShiftFrame& f, Index l);

// c |-> sum_i a_0 x ... x [h a_i - a_i h] x ... x a_n; grade 0.
GradedMap commutator_insertion(const AlgebraPresentation& a, const Element& h);

// c |-> sum_i (-1)^{i+1} a_0 x ... x a_i x h x a_{i+1} x ... x a_n; grade +1.
// The null-homotopy of commutator insertion.
GradedMap element_insertion(const AlgebraPresentation& a, const Element& h);

// Apply a multiplication splitting to the first factor; grade +1.  With a
// valid splitting this contracts both differentials in degrees >= 1.
GradedMap splitting_homotopy(const SplittingData& split);

// Outcome of one exact identity check.  `witness` is the source tuple of the
// first failing column (ambient factor indices) and `residual` the
// re-evaluated difference there; both are empty/zero on pass.
struct HomotopyVerdict {
  std::string identity;
  std::map<std::string, Index> parameters;
  bool pass = false;
  std::vector<Index> witness;
  Chain residual;
};

// d(conj c) == conj(d c) on corner chains at `degree` (>= 1).
HomotopyVerdict shift_chain_map_check(const ShiftFrame& f, Index l, int degree,
                                      Index budget_cols = kDefaultColumnBudget);

// d(amplified c) == amplified(d c) at `degree` (>= 1).
HomotopyVerdict amplify_chain_map_check(const ShiftFrame& f, int degree,
                                        Index budget_cols = kDefaultColumnBudget);

// Every face/insertion exchange law at `degree`, including the two boundary
// cases (face 0 of the slot-0 insertion is the front term; the wrap face of
// the last insertion is the conjugation).  One verdict for the whole family;
// a failure records the (face, slot) pair in `parameters`.
HomotopyVerdict face_relations_check(const ShiftFrame& f, Index l, int degree,
                                     Index budget_cols = kDefaultColumnBudget);

// conj == front + d H + H d with H the insertion homotopy for block l (the
// H d term is dropped at degree 0).  The three-argument form checks a caller
// supplied candidate in place of the canonical H (negative controls).
HomotopyVerdict insertion_homotopy_check(const ShiftFrame& f, Index l, int degree,
                                         Index budget_cols = kDefaultColumnBudget);
HomotopyVerdict insertion_homotopy_check(const ShiftFrame& f, Index l, int degree,
                                         const GradedMap& homotopy,
                                         Index budget_cols = kDefaultColumnBudget);

// sum_l conj_l == amplification + d H + H d with H the summed homotopy.
HomotopyVerdict amplify_homotopy_check(const ShiftFrame& f, int degree,
                                       Index budget_cols = kDefaultColumnBudget);
HomotopyVerdict amplify_homotopy_check(const ShiftFrame& f, int degree,
                                       const GradedMap& homotopy,
                                       Index budget_cols = kDefaultColumnBudget);

// (1/N) sum_l (conj_l - d H_l) applied to d tau equals (1/N) d(amplified tau)
// for every corner tau at `degree` (>= 1).
HomotopyVerdict averaged_boundary_check(const ShiftFrame& f, int degree,
                                        Index budget_cols = kDefaultColumnBudget);

// Commutator insertion equals d s + s d at `degree` (s d dropped at 0),
// exhaustively over the full tuple basis of `a`.
HomotopyVerdict commutator_homotopy_check(const AlgebraPresentation& a, const Element& h,
                                          int degree,
                                          Index budget_cols = kDefaultColumnBudget);

// d h + h d == identity at `degree` >= 1 for a grade +1 candidate on a full
// chain space; at degree 0 only the bar kind is defined and the h d term is
// dropped.  The wrapper builds the canonical splitting contraction.
HomotopyVerdict contraction_check(const GradedMap& homotopy, ComplexKind kind, int degree,
                                  Index budget_cols = kDefaultColumnBudget);
HomotopyVerdict splitting_contraction_check(const SplittingData& split, ComplexKind kind,
                                            int degree,
                                            Index budget_cols = kDefaultColumnBudget);

// For a corner cycle, the conjugated cycle minus the cycle is a boundary in
// the ambient complex; the witness is found by exact solve.  Infeasibility
// would falsify the framework and throws std::logic_error.
Chain shift_boundary_witness(const ShiftFrame& f, Index l, const Chain& cycle,
                             Index budget_cols = kDefaultColumnBudget);
HomotopyVerdict shift_boundary_check(const ShiftFrame& f, Index l, const Chain& cycle,
                                     Index budget_cols = kDefaultColumnBudget);

// The whole battery for one frame: chain-map, face-relation, homotopy and
// averaged-boundary checks for every block at degrees 1..max_degree, then
// boundary membership for up to two corner kernel cycles per block and
// degree (skipped where the ambient solve would exceed the budget).
std::vector<HomotopyVerdict> verify_shift_identities(const ShiftFrame& f, int max_degree,
                                                     Index budget_cols = kDefaultColumnBudget);

}  // namespace hochlab
