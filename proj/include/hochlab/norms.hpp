#pragma once

// Norms on matrix-algebra elements, chains, and cochains.
//
// l1 (max column abs sum) and linf (max row abs sum) are exact rationals.
// l2 is numeric: power iteration on A^T A with a certified enclosure, where
// the reported value is the converged Rayleigh estimate (a lower bound up to
// floating round-off) and value + error_bound = sqrt(l1 * linf) is an exact
// upper bound.  l2 values never enter pass/fail verdicts; they are reported
// alongside the exact kinds.
//
// Chain norms use the stored sparse representation: sum over terms of
// |coefficient| times the product of the factor norms.  This is an upper
// bound for any cross norm and is representation-dependent by design; no
// attempt is made to minimize over equivalent representations.  Basis
// factors of a matrix algebra have norm 1 in all three kinds; algebras
// without a matrix view fall back to the per-basis norm assignment when one
// is present and weight 1 otherwise.

#include <random>
#include <string>
#include <vector>

#include "hochlab/algebra.hpp"
#include "hochlab/chain.hpp"
#include "hochlab/structures.hpp"

namespace hochlab {

enum class NormKind { l1, linf, l2 };

const char* norm_name(NormKind kind);
NormKind parse_norm_kind(const std::string& name);  // throws on unknown name

struct NormValue {
  bool exact = true;
  Rat value;                 // meaningful when exact
  double approx = 0.0;       // double view, always set
  double error_bound = 0.0;  // enclosure width above approx (numeric kinds)
};

NormValue exact_norm(const Rat& v);
NormValue numeric_norm(double v, double error_bound);

// Enclosure-aware quotient; exact when both inputs are exact.  Throws
// std::invalid_argument on a zero denominator.
NormValue norm_ratio(const NormValue& num, const NormValue& den);

// Induced operator norm of an element of a matrix-type algebra.
// Throws std::invalid_argument when the algebra has no matrix view.
NormValue matrix_norm(const AlgebraPresentation& a, const Element& x,
                      NormKind kind);

// Norm of a single basis factor: 1 for matrix units, the assigned value for
// algebras carrying a norm assignment, 1 otherwise.  Exact in every kind.
Rat factor_norm(const AlgebraPresentation& a, Index basis);

// Sum over stored terms of |coeff| * product of factor norms (see header
// comment for the representation caveat).  Exact.
NormValue chain_norm(const Chain& c, NormKind kind);

// Dual norm over stored values: max |D(tuple)| / product of factor norms.
// Exact.  Satisfies |D(c)| <= cochain_norm(D) * chain_norm(c).
NormValue cochain_norm(const Cochain& f, NormKind kind);

struct NormRatioRow {
  Index label = 0;  // copy count, or 2*pair (left) / 2*pair+1 (right)
  NormValue lhs;
  NormValue rhs;
  NormValue ratio;
};

struct NormRatioReport {
  std::string check;
  NormKind kind = NormKind::l1;
  std::vector<NormRatioRow> rows;
  NormValue max_ratio;
  Index arg_max = 0;       // label of the row attaining max_ratio
  double tolerance = 0.0;  // 0 for exact kinds, numeric slack otherwise
  bool all_one = false;    // every ratio is 1 (exactly, or within tolerance)
};

// ||sum_{l<N} S^{lk} a R^{lk}|| / ||a|| for N = 1..max_copies.  The amplified
// element is block diagonal with N copies of a, so the exact kinds give
// ratio 1 at every N.  Requires nonzero corner-supported a.
NormRatioReport amplification_isometry(const ShiftFrame& f, const Element& a,
                                       Index max_copies, NormKind kind);

// ||U a|| / ||a|| and ||a U|| / ||a|| over zipped sample pairs; signed
// permutations are isometries of the exact kinds, so every ratio is 1.
// Requires matching sample sizes and nonzero elements.
NormRatioReport permutation_isometry(const AlgebraPresentation& a,
                                     const std::vector<SignedPermutation>& us,
                                     const std::vector<Element>& as,
                                     NormKind kind);

// Samplers used by the isometry checks and the scenario runner.  They draw
// from the engine directly (rng() % n style) so streams are identical across
// standard libraries.
SignedPermutation random_signed_permutation(std::mt19937_64& rng, Index n);

// Uniform small-rational coordinates over the listed basis indices; the
// result is never zero (the first index is forced on a zero draw).
Element random_element_on(std::mt19937_64& rng,
                          const std::vector<Index>& support, int bound);
Element random_matrix_element(std::mt19937_64& rng,
                              const AlgebraPresentation& a, int bound);
Element random_corner_element(std::mt19937_64& rng, const ShiftFrame& f,
                              int bound);

}  // namespace hochlab
