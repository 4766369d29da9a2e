#pragma once

// Exact sparse rational elimination: rank, canonical kernels, solving with
// infeasibility certificates, and reduced subspace bases for quotient work.
//
// Pivoting is deterministic: columns are processed in index order and each
// column's pivot is its smallest nonzero row after reduction against earlier
// pivots.  Rank, kernel, residuals and certificates are therefore canonical:
// the kernel holds, per free column j, the unique kernel vector with a 1 at j
// and zeros at every other free column.  A dense fallback handles small
// systems; both paths produce identical output.

#include <optional>
#include <vector>

#include "hochlab/sparse.hpp"

namespace hochlab {

struct RankKernel {
  Index rank = 0;
  std::vector<Index> pivot_cols;       // ascending
  std::vector<Index> pivot_rows;       // pivot_rows[i] matches pivot_cols[i]
  std::vector<SparseVec> kernel;       // canonical reduced kernel basis
};

RankKernel rank_and_kernel(const SparseMatrix& m);

struct SolveResult {
  bool feasible = false;
  SparseVec x;            // m * x == b when feasible
  SparseVec certificate;  // y with y^T m == 0 and y^T b != 0 otherwise
};

SolveResult solve(const SparseMatrix& m, const SparseVec& b);

// Row-reduced basis of a subspace: basis vectors have distinct pivot rows,
// leading coefficient 1, and every other basis vector is zero at each pivot
// row.  reduce() is then the canonical projection onto the complementary
// coordinates along the subspace.
class SubspaceBasis {
 public:
  explicit SubspaceBasis(Index ambient_dim) : ambient_(ambient_dim) {}

  static SubspaceBasis span(Index ambient_dim, const std::vector<SparseVec>& vs);
  static SubspaceBasis column_span(const SparseMatrix& m);

  // Returns true when v was independent and the dimension grew.
  bool insert(SparseVec v);

  SparseVec reduce(SparseVec v) const;
  bool contains(const SparseVec& v) const { return reduce(v).is_zero(); }

  Index ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<SparseVec>& basis() const { return basis_; }
  const std::map<Index, std::size_t>& pivot_map() const { return pivots_; }

  // Ambient coordinate axes not used as pivots, ascending.  The images of
  // these axes form the canonical basis of ambient/subspace.
  std::vector<Index> complement_axes() const;

 private:
  Index ambient_;
  std::vector<SparseVec> basis_;
  std::map<Index, std::size_t> pivots_;  // pivot row -> basis position
};

// Coordinates of the given vectors in the canonical quotient basis of
// ambient/sub (the complement axes of sub).  Two vectors get equal
// coordinates iff they differ by an element of sub.
std::vector<SparseVec> quotient_coordinates(const SubspaceBasis& sub,
                                            const std::vector<SparseVec>& vectors);

// Homology-style subquotient ker(out)/im(in) of a coordinate space.
// Either matrix may be absent: a missing `out` means the whole space is
// cycles (degree 0), a missing `in` means there are no boundaries.
// Asserts im(in) <= ker(out).
struct Subquotient {
  Index space_dim = 0;
  Index cycle_rank = 0;
  Index boundary_rank = 0;
  Index dim = 0;
  std::vector<SparseVec> representatives;  // canonical boundary-reduced cycles
  SubspaceBasis boundaries{0};
};

Subquotient subquotient(Index space_dim, const SparseMatrix* out,
                        const SparseMatrix* in);

// Coordinates of a cycle's class in the representative basis of sq.
// Throws if the vector is not a combination of representatives modulo
// boundaries (i.e. not a cycle of the same space).
SparseVec coords_in_homology(const Subquotient& sq, const SparseVec& cycle);

}  // namespace hochlab
