#pragma once

// Cocycle solving and block averaging over a shift frame.
//
// A validated cocycle D of degree n either admits a primitive phi with
// phi(d c) = D(c) for every chain c, found by an exact solve, or a
// certificate cycle z with D(z) != 0.  Given a primitive, the averaged
// functional smears phi over N shifted blocks,
//
//   avg(tau) = phi((1/N) sum_{l<N} (sigma_l - d H_l) tau),
//
// and the defect psi = phi - avg satisfies exact identities on corner
// chains: avg(d tau) = D(amplify_N tau) / N for every primitive, hence
// D = psi . d + (1/N) D . amplify_N.  No limits are taken anywhere; the
// harness records the finite sequences a limit argument would consume and
// measures their stabilization.

#include <cstdint>
#include <string>
#include <vector>

#include "hochlab/homology.hpp"
#include "hochlab/homotopy.hpp"
#include "hochlab/norms.hpp"
#include "hochlab/structures.hpp"

namespace hochlab {

struct CocycleInstance {
  const AlgebraPresentation* alg = nullptr;
  int degree = 0;  // D consumes chains of this degree
  Cochain d;
  std::string provenance;  // "random-coboundary" | "handcrafted" | "zero"
};

// Validates d . boundary = 0 exactly (enumerated one degree up); throws
// std::invalid_argument naming a witness tuple otherwise.
CocycleInstance make_cocycle(const AlgebraPresentation& a, Cochain d,
                             std::string provenance,
                             Index budget_cols = kDefaultColumnBudget);

// D = (seeded random cochain of degree n-1) composed with the boundary;
// always a cocycle, and by construction solvable.
CocycleInstance coboundary_instance(const AlgebraPresentation& a, int degree,
                                    std::uint64_t seed,
                                    Index budget_cols = kDefaultColumnBudget);
CocycleInstance zero_instance(const AlgebraPresentation& a, int degree);

struct PrimitiveResult {
  bool feasible = false;
  Cochain primitive;  // degree n-1, primitive . boundary == D when feasible
  Chain certificate;  // cycle z with D(z) != 0 otherwise
};

// Exact transpose solve.  Degree 0 has no lower cochain group: feasible only
// for D == 0, with the first basis element carrying a nonzero value as the
// certificate (every 0-chain is a cycle).
PrimitiveResult solve_primitive(const CocycleInstance& inst,
                                Index budget_cols = kDefaultColumnBudget);

struct AveragedPair {
  ShiftFrame frame;   // the blocks-sized subframe the operators ran on
  Index blocks = 0;   // equals frame.N
  Cochain averaged;   // defined on corner tuples of phi's degree
  Cochain defect;     // psi = phi - averaged, same support
};

// Requires 1 <= blocks <= f.N and phi over the frame's ambient algebra.
// The insertion homotopies amplify their suffix factors over the full block
// count of their frame, so averaging over fewer blocks runs on the
// (f.k, blocks) subframe of the same ambient; it is built internally and
// returned in the pair.
AveragedPair averaged_functional(const ShiftFrame& f, const Cochain& phi,
                                 Index blocks,
                                 Index budget_cols = kDefaultColumnBudget);

struct GenerationCheck {
  Index blocks = 0;
  bool substitution = false;  // averaged(d t) == D(amplify t)/N, all corner t
  bool generation = false;    // D(t) == defect(d t) + D(amplify t)/N likewise
  std::vector<Index> witness;  // first failing tuple, empty on pass
};

GenerationCheck generation_check(const CocycleInstance& inst,
                                 const AveragedPair& pair,
                                 Index budget_cols = kDefaultColumnBudget);

struct DecayRow {
  Index blocks = 0;
  Rat averaged_abs;    // |avg_N(d tau)|
  Rat pairing_abs;     // |D(amplify_N tau)|; equals blocks * averaged_abs
  Rat tuple_constant;  // max |D(amplify_N t)| over corner basis tuples t
  Rat tuple_bound;     // tuple_constant * ||tau||
  bool identity = false;  // blocks * avg_N(d tau) == D(amplify_N tau), signed
  bool bounded = false;   // pairing_abs <= tuple_bound
};

struct DecayReport {
  NormKind kind = NormKind::linf;
  int degree = 0;  // degree of tau
  Rat d_norm;
  Rat tau_norm;
  std::vector<DecayRow> rows;
  bool all_identities = false;
  bool all_bounded = false;
};

// Verifies phi is a primitive of D, then tabulates the averaged boundary
// values against the exact pairing and the per-tuple bound for each block
// count.  tau must be a corner chain of D's degree (>= 1).
DecayReport decay_table(const ShiftFrame& f, const CocycleInstance& inst,
                        const Cochain& phi, const Chain& tau,
                        const std::vector<Index>& block_counts, NormKind kind,
                        Index budget_cols = kDefaultColumnBudget);

struct AveragingCell {
  Index k = 0;
  Index blocks = 0;        // M / k copies fit the frame
  Index cycles_tested = 0;
  Rat sup_defect;          // sup |psi(tau)| / ||tau|| over the test cycles
  Rat sup_ratio;           // sup_defect / ||D||, or 0 when D == 0
  bool substitution = false;
  bool generation = false;
};

struct AveragingReport {
  std::string provenance;
  int degree = 0;  // degree of D
  NormKind kind = NormKind::linf;
  Rat d_norm;
  bool primitive_found = false;
  Chain obstruction;  // certificate cycle when no primitive exists
  std::vector<AveragingCell> cells;  // one per corner size, ascending
  // Per fixed test cycle (drawn from the smallest corner): the sequence of
  // defect values across the cells, in cell order.
  std::vector<std::vector<Rat>> stabilization;
  bool all_identities = false;
};

// For each corner size k the frame is (k, M/k, M mod k) over the instance's
// ambient matrix algebra M_M; the defect of one solved primitive is measured
// on a cycle basis of each corner (full kernel basis when it has at most 100
// elements, otherwise 100 seeded combinations).  `primitive_override`
// replaces the solved primitive; it must satisfy the same cocycle equation,
// which the generation identities then re-certify.
AveragingReport averaging_harness(const CocycleInstance& inst,
                                  const std::vector<Index>& corner_sizes,
                                  NormKind kind, std::uint64_t seed,
                                  Index budget_cols = kDefaultColumnBudget,
                                  const Cochain* primitive_override = nullptr);

}  // namespace hochlab
