#pragma once

// Chain spaces, face maps, the bar and cyclic-wrap differentials, dual
// differentials, and lazily materialized graded linear maps.
//
// A ChainSpace is the full tuple space of an algebra, or the tuple space over
// a sub-basis (e.g. the corner of a shift frame).  Materialized matrices have
// one column per source-space tuple (in code order) and rows indexed by
// ambient tuple codes of the target degree, so materializations of composable
// maps multiply directly.

#include <functional>
#include <memory>
#include <mutex>

#include "hochlab/chain.hpp"

namespace hochlab {

class ChainSpace {
 public:
  explicit ChainSpace(const AlgebraPresentation& a);
  ChainSpace(const AlgebraPresentation& a, std::vector<Index> sub_basis);

  const AlgebraPresentation& algebra() const { return *alg_; }
  bool full() const { return sub_.empty(); }
  Index basis_size() const { return sub_.empty() ? alg_->dim : sub_.size(); }
  Index dim(int degree) const { return chain_dim(basis_size(), degree); }

  // Ambient tuple of the local basis element `local` (0 <= local < dim(degree)).
  std::vector<Index> tuple(int degree, Index local) const;
  Index ambient_code(int degree, Index local) const;
  Chain basis(int degree, Index local) const;

  // True when every factor of every term lies in the sub-basis.
  bool contains(const Chain& c) const;

 private:
  const AlgebraPresentation* alg_;
  std::vector<Index> sub_;        // sorted; empty means full basis
  std::vector<bool> member_;      // ambient membership mask (empty when full)
};

// Face maps on basis tuples, linearly extended.  For 0 <= i < degree the i-th
// and (i+1)-th factors multiply; i == degree multiplies the last factor onto
// the first (the wrap face).
Chain face_map(const Chain& c, int i);

// Alternating sum of faces 0..degree-1 (no wrap term).  Degree must be >= 1.
Chain bar_differential(const Chain& c);
// bar_differential plus (-1)^degree times the wrap face.
Chain hochschild_differential(const Chain& c);

// (df)(c) = f(dc) for every chain c one degree up; enumerated over the full
// tuple basis of degree f.degree + 1, guarded by `budget_cols`.
Cochain dual_differential(const Cochain& f, Index budget_cols = 250000);

// A graded linear map bound to its source space.  The rule receives the
// degree and an ambient tuple from the source space and returns a chain of
// degree  degree + shift  over the target algebra.  Materializations are
// cached per degree; apply() works term by term on arbitrary chains supported
// on the source space.
class GradedMap {
 public:
  using Rule = std::function<Chain(int degree, const std::vector<Index>& tuple)>;

  GradedMap(std::string name, ChainSpace source, const AlgebraPresentation& target,
            int shift, Rule rule);

  const std::string& name() const { return name_; }
  int shift() const { return shift_; }
  const ChainSpace& source() const { return source_; }
  const AlgebraPresentation& target() const { return *target_; }

  Chain apply(const Chain& c) const;
  const SparseMatrix& matrix(int degree) const;  // cached materialization

 private:
  std::string name_;
  ChainSpace source_;
  const AlgebraPresentation* target_;
  int shift_;
  Rule rule_;
  mutable std::mutex mu_;
  mutable std::map<int, SparseMatrix> cache_;
};

const SparseMatrix& materialize(const GradedMap& map, int degree);

// Differentials of the full complex of `a` as graded maps (shift -1, defined
// for degrees >= 1).
GradedMap hochschild_map(const AlgebraPresentation& a);
GradedMap bar_map(const AlgebraPresentation& a);

// Chain map induced by an algebra map given on coordinates (target_dim x
// source_dim): every factor is pushed through the matrix.
GradedMap factorwise_map(std::string name, const AlgebraPresentation& source,
                         const AlgebraPresentation& target, SparseMatrix coeff);

}  // namespace hochlab
