#include "hochlab/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace hochlab {

namespace {

// Shared elimination state.  Pivot columns are kept keyed by their leading
// (smallest) row; every pivot column's support lies at or below its leading
// row, so reducing a vector strictly advances its leading row and terminates.
struct Eliminator {
  struct Pivot {
    SparseVec v;     // reduced column
    SparseVec comb;  // combination of source columns with m * comb == v
  };
  std::map<Index, Pivot> pivots;

  // w -= sum of pivot multiples until w == 0 or its leading row is free.
  // cw tracks the same combination, preserving  w - m * cw  as an invariant
  // (cw starts at e_j for column reduction, at 0 for solves).
  void reduce(SparseVec& w, SparseVec& cw) const {
    while (!w.is_zero()) {
      Index r = w.leading();
      auto it = pivots.find(r);
      if (it == pivots.end()) return;
      Rat t = w.get(r) / it->second.v.get(r);
      w.axpy(-t, it->second.v);
      cw.axpy(-t, it->second.comb);
    }
  }

  void insert(SparseVec w, SparseVec cw) {
    // Take the key before the moves: argument evaluation order is unspecified.
    const Index lead = w.leading();
    pivots.emplace(lead, Pivot{std::move(w), std::move(cw)});
  }
};

constexpr Index kDenseFallbackCols = 64;

// Dense mirror of the same algorithm for small systems.  Rows are compacted
// to the ones that actually occur; the pivot choice (smallest row after
// reduction) is identical, so the output matches the sparse path exactly.
RankKernel rank_and_kernel_dense(const SparseMatrix& m) {
  std::vector<Index> row_ids;
  for (const auto& c : m.col)
    for (const auto& [r, v] : c.e) row_ids.push_back(r);
  std::sort(row_ids.begin(), row_ids.end());
  row_ids.erase(std::unique(row_ids.begin(), row_ids.end()), row_ids.end());
  std::map<Index, std::size_t> row_pos;
  for (std::size_t i = 0; i < row_ids.size(); ++i) row_pos[row_ids[i]] = i;
  const std::size_t nr = row_ids.size();

  struct DPivot {
    std::size_t lead;
    std::vector<Rat> v;
    SparseVec comb;
  };
  std::vector<DPivot> pivots;
  std::vector<std::size_t> lead_to_pivot(nr + 1, SIZE_MAX);

  RankKernel out;
  for (Index j = 0; j < m.cols; ++j) {
    std::vector<Rat> w(nr, Rat(0));
    for (const auto& [r, v] : m.col[j].e) w[row_pos[r]] = v;
    SparseVec cw;
    cw.set(j, Rat(1));
    std::size_t lead = 0;
    for (;;) {
      while (lead < nr && w[lead] == 0) ++lead;
      if (lead == nr) break;
      std::size_t p = lead_to_pivot[lead];
      if (p == SIZE_MAX) break;
      Rat t = w[lead] / pivots[p].v[lead];
      for (std::size_t i = lead; i < nr; ++i)
        if (pivots[p].v[i] != 0) w[i] -= t * pivots[p].v[i];
      cw.axpy(-t, pivots[p].comb);
    }
    if (lead == nr) {
      out.kernel.push_back(std::move(cw));
    } else {
      out.pivot_cols.push_back(j);
      out.pivot_rows.push_back(row_ids[lead]);
      lead_to_pivot[lead] = pivots.size();
      pivots.push_back(DPivot{lead, std::move(w), std::move(cw)});
    }
  }
  out.rank = out.pivot_cols.size();
  return out;
}

}  // namespace

RankKernel rank_and_kernel(const SparseMatrix& m) {
  if (m.cols <= kDenseFallbackCols) return rank_and_kernel_dense(m);
  Eliminator el;
  RankKernel out;
  for (Index j = 0; j < m.cols; ++j) {
    SparseVec w = m.col[j];
    SparseVec cw;
    cw.set(j, Rat(1));
    el.reduce(w, cw);
    if (w.is_zero()) {
      out.kernel.push_back(std::move(cw));
    } else {
      out.pivot_cols.push_back(j);
      out.pivot_rows.push_back(w.leading());
      el.insert(std::move(w), std::move(cw));
    }
  }
  out.rank = out.pivot_cols.size();
  return out;
}

SolveResult solve(const SparseMatrix& m, const SparseVec& b) {
  if (!b.is_zero() && b.e.rbegin()->first >= m.rows)
    throw std::out_of_range("solve: rhs index out of range");
  Eliminator el;
  for (Index j = 0; j < m.cols; ++j) {
    SparseVec w = m.col[j];
    SparseVec cw;
    cw.set(j, Rat(1));
    el.reduce(w, cw);
    if (!w.is_zero()) el.insert(std::move(w), std::move(cw));
  }

  SolveResult res;
  SparseVec w = b;
  SparseVec cw;
  // Invariant of this reduction: w == b - m * x with x = -cw after sign flip;
  // reduce() subtracts pivot combinations from cw, so m * (-cw) == b - w.
  el.reduce(w, cw);
  if (w.is_zero()) {
    res.feasible = true;
    cw.scale(Rat(-1));
    res.x = std::move(cw);
    return res;
  }

  // Residual w is nonzero and independent of the pivot columns.  A functional
  // y with y ^T (pivot column) == 0 for every pivot and <y, w> != 0 kills the
  // whole column space but not b.
  res.feasible = false;
  std::vector<Index> row_ids;
  for (const auto& [lead, p] : el.pivots)
    for (const auto& [r, v] : p.v.e) row_ids.push_back(r);
  for (const auto& [r, v] : w.e) row_ids.push_back(r);
  std::sort(row_ids.begin(), row_ids.end());
  row_ids.erase(std::unique(row_ids.begin(), row_ids.end()), row_ids.end());
  std::map<Index, Index> row_pos;
  for (std::size_t i = 0; i < row_ids.size(); ++i) row_pos[row_ids[i]] = i;

  // Rows of `sys` are the pivot columns, written over the compacted row set.
  SparseMatrix sys(el.pivots.size(), row_ids.size());
  Index pi = 0;
  for (const auto& [lead, p] : el.pivots) {
    for (const auto& [r, v] : p.v.e) sys.add(pi, row_pos[r], v);
    ++pi;
  }
  RankKernel rk = rank_and_kernel(sys);
  SparseVec w_compact;
  for (const auto& [r, v] : w.e) w_compact.set(row_pos[r], v);
  for (const auto& y : rk.kernel) {
    if (y.dot(w_compact) != 0) {
      for (const auto& [i, v] : y.e) res.certificate.set(row_ids[i], v);
      return res;
    }
  }
  throw std::logic_error("solve: infeasible system without certificate");
}

SubspaceBasis SubspaceBasis::span(Index ambient_dim,
                                  const std::vector<SparseVec>& vs) {
  SubspaceBasis sb(ambient_dim);
  for (const auto& v : vs) sb.insert(v);
  return sb;
}

SubspaceBasis SubspaceBasis::column_span(const SparseMatrix& m) {
  SubspaceBasis sb(m.rows);
  for (const auto& c : m.col) sb.insert(c);
  return sb;
}

bool SubspaceBasis::insert(SparseVec v) {
  v = reduce(std::move(v));
  if (v.is_zero()) return false;
  Index lead = v.leading();
  v.scale(Rat(1) / v.get(lead));
  // Back-eliminate: existing basis vectors lose their entry at the new pivot
  // row, keeping the basis fully reduced.
  for (auto& bvec : basis_) {
    Rat c = bvec.get(lead);
    if (c != 0) bvec.axpy(-c, v);
  }
  pivots_[lead] = basis_.size();
  basis_.push_back(std::move(v));
  return true;
}

SparseVec SubspaceBasis::reduce(SparseVec v) const {
  // Basis vectors are zero at every pivot row except their own, so each
  // subtraction clears one pivot row for good.
  for (;;) {
    Index hit = 0;
    bool found = false;
    for (const auto& [r, val] : v.e) {
      if (pivots_.count(r)) {
        hit = r;
        found = true;
        break;
      }
    }
    if (!found) return v;
    const SparseVec& bvec = basis_[pivots_.at(hit)];
    v.axpy(-v.get(hit), bvec);
  }
}

std::vector<Index> SubspaceBasis::complement_axes() const {
  std::vector<Index> axes;
  axes.reserve(ambient_ - pivots_.size());
  for (Index i = 0; i < ambient_; ++i)
    if (!pivots_.count(i)) axes.push_back(i);
  return axes;
}

std::vector<SparseVec> quotient_coordinates(const SubspaceBasis& sub,
                                            const std::vector<SparseVec>& vectors) {
  std::vector<SparseVec> out;
  out.reserve(vectors.size());
  for (const auto& v : vectors) out.push_back(sub.reduce(v));
  return out;
}

Subquotient subquotient(Index space_dim, const SparseMatrix* out_map,
                        const SparseMatrix* in_map) {
  Subquotient sq;
  sq.space_dim = space_dim;
  sq.boundaries = SubspaceBasis(space_dim);

  std::vector<SparseVec> cycles;
  if (out_map) {
    if (out_map->cols != space_dim)
      throw std::invalid_argument("subquotient: out map shape mismatch");
    RankKernel rk = rank_and_kernel(*out_map);
    sq.cycle_rank = space_dim - rk.rank;
    cycles = std::move(rk.kernel);
  } else {
    sq.cycle_rank = space_dim;
  }

  if (in_map) {
    if (in_map->rows != space_dim)
      throw std::invalid_argument("subquotient: in map shape mismatch");
    for (const auto& c : in_map->col) {
      if (out_map && !out_map->apply(c).is_zero())
        throw std::logic_error("subquotient: boundary is not a cycle");
      sq.boundaries.insert(c);
    }
  }
  sq.boundary_rank = sq.boundaries.dim();
  sq.dim = sq.cycle_rank - sq.boundary_rank;

  // Representatives: boundary-reduced cycles, mutually independent.  `acc`
  // starts at the boundary space so only genuinely new classes survive.
  SubspaceBasis acc = sq.boundaries;
  auto consider = [&](const SparseVec& z) {
    if (sq.representatives.size() == sq.dim) return;
    SparseVec residual = acc.reduce(z);
    if (residual.is_zero()) return;
    sq.representatives.push_back(residual);
    acc.insert(std::move(residual));
  };
  if (out_map) {
    for (const auto& z : cycles) consider(z);
  } else {
    for (Index i = 0; i < space_dim && sq.representatives.size() < sq.dim; ++i) {
      SparseVec e;
      e.set(i, Rat(1));
      consider(e);
    }
  }
  if (sq.representatives.size() != sq.dim)
    throw std::logic_error("subquotient: representative count mismatch");
  return sq;
}

SparseVec coords_in_homology(const Subquotient& sq, const SparseVec& cycle) {
  SparseVec r = sq.boundaries.reduce(cycle);
  if (sq.representatives.empty()) {
    if (!r.is_zero())
      throw std::invalid_argument("coords_in_homology: nonzero class in zero homology");
    return {};
  }
  // Solve r = sum lambda_i rep_i over the compacted support.
  std::vector<Index> row_ids;
  for (const auto& rep : sq.representatives)
    for (const auto& [i, v] : rep.e) row_ids.push_back(i);
  for (const auto& [i, v] : r.e) row_ids.push_back(i);
  std::sort(row_ids.begin(), row_ids.end());
  row_ids.erase(std::unique(row_ids.begin(), row_ids.end()), row_ids.end());
  std::map<Index, Index> pos;
  for (std::size_t i = 0; i < row_ids.size(); ++i) pos[row_ids[i]] = i;
  SparseMatrix m(row_ids.size(), sq.representatives.size());
  for (std::size_t j = 0; j < sq.representatives.size(); ++j)
    for (const auto& [i, v] : sq.representatives[j].e) m.add(pos[i], j, v);
  SparseVec b;
  for (const auto& [i, v] : r.e) b.set(pos[i], v);
  SolveResult sr = solve(m, b);
  if (!sr.feasible)
    throw std::invalid_argument("coords_in_homology: vector is not a cycle class");
  return sr.x;
}

}  // namespace hochlab
