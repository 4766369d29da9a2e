#include <algorithm>
#include <random>

#include "doctest.h"
#include "hochlab/linalg.hpp"
#include "oracle.hpp"

using namespace hochlab;

namespace {

// Seeded sparse matrix with small rational entries.
SparseMatrix random_matrix(std::mt19937_64& rng, Index rows, Index cols, Index nnz) {
  SparseMatrix m(rows, cols);
  std::uniform_int_distribution<Index> ri(0, rows - 1), ci(0, cols - 1);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
  for (Index t = 0; t < nnz; ++t) {
    int n = num(rng);
    if (n == 0) n = 1;
    m.set(ri(rng), ci(rng), rat_of(n, den(rng)));
  }
  return m;
}

SparseVec random_vec(std::mt19937_64& rng, Index dim, Index nnz) {
  SparseVec v;
  std::uniform_int_distribution<Index> ix(0, dim - 1);
  std::uniform_int_distribution<int> num(-4, 4);
  for (Index t = 0; t < nnz; ++t) {
    int n = num(rng);
    if (n == 0) n = 2;
    v.set(ix(rng), Rat(n));
  }
  return v;
}

}  // namespace

TEST_CASE("zero and identity matrices") {
  SparseMatrix z(7, 5);
  auto rz = rank_and_kernel(z);
  CHECK(rz.rank == 0);
  CHECK(rz.kernel.size() == 5);
  for (Index j = 0; j < 5; ++j) {
    CHECK(rz.kernel[j].nnz() == 1);
    CHECK(rz.kernel[j].get(j) == 1);
  }

  auto id = SparseMatrix::identity(6);
  auto ri = rank_and_kernel(id);
  CHECK(ri.rank == 6);
  CHECK(ri.kernel.empty());
  CHECK(ri.pivot_cols == std::vector<Index>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("hand-worked 3x4 system") {
  // Rows: (1 2 0 1), (2 4 1 0), (0 0 1 -2).  Row3 = Row2 - 2*Row1, so rank 2.
  SparseMatrix m(3, 4);
  m.set(0, 0, 1); m.set(0, 1, 2); m.set(0, 3, 1);
  m.set(1, 0, 2); m.set(1, 1, 4); m.set(1, 2, 1);
  m.set(2, 2, 1); m.set(2, 3, -2);

  auto rk = rank_and_kernel(m);
  CHECK(rk.rank == 2);
  CHECK(rk.pivot_cols == std::vector<Index>{0, 2});
  REQUIRE(rk.kernel.size() == 2);
  // Canonical kernel: vector j has a 1 at free column j and 0 at the other.
  CHECK(rk.kernel[0].get(1) == 1);
  CHECK(rk.kernel[0].get(3) == 0);
  CHECK(rk.kernel[1].get(3) == 1);
  CHECK(rk.kernel[1].get(1) == 0);
  // Solved by hand: x0 = -2 x1 - x3, x2 = 2 x3.
  CHECK(rk.kernel[0].get(0) == -2);
  CHECK(rk.kernel[1].get(0) == -1);
  CHECK(rk.kernel[1].get(2) == 2);
  for (const auto& k : rk.kernel) CHECK(m.apply(k).is_zero());

  CHECK(oracle::rank(m) == 2);
}

TEST_CASE("rank agrees with the dense oracle on seeded matrices") {
  std::mt19937_64 rng(20240811);
  for (int round = 0; round < 40; ++round) {
    const Index rows = 1 + rng() % 40;
    const Index cols = 1 + rng() % 40;
    auto m = random_matrix(rng, rows, cols, (rows * cols) / 3 + 1);
    auto rk = rank_and_kernel(m);
    CHECK(rk.rank == oracle::rank(m));
    CHECK(rk.kernel.size() == cols - rk.rank);
    for (const auto& k : rk.kernel) CHECK(m.apply(k).is_zero());
    CHECK(oracle::columns_independent_mod_p(m, rk.pivot_cols));
  }
}

TEST_CASE("rank equals rank of the transpose") {
  std::mt19937_64 rng(7);
  struct Shape { Index rows, cols, nnz; };
  for (const Shape s : {Shape{60, 45, 300}, Shape{400, 300, 1200},
                        Shape{1500, 1000, 2500}, Shape{5000, 5000, 5000}}) {
    auto m = random_matrix(rng, s.rows, s.cols, s.nnz);
    CHECK(rank_and_kernel(m).rank == rank_and_kernel(m.transpose()).rank);
  }
}

TEST_CASE("solve returns exact solutions or certificates") {
  std::mt19937_64 rng(99);
  int feasible_seen = 0, infeasible_seen = 0;
  for (int round = 0; round < 60; ++round) {
    const Index rows = 2 + rng() % 25;
    const Index cols = 2 + rng() % 25;
    auto m = random_matrix(rng, rows, cols, (rows * cols) / 4 + 1);
    SparseVec b;
    if (round % 2 == 0) {
      b = m.apply(random_vec(rng, cols, cols / 2 + 1));  // consistent by construction
    } else {
      b = random_vec(rng, rows, rows / 2 + 1);
    }
    auto sr = solve(m, b);
    auto ob = oracle::solve(m, b);
    CHECK(sr.feasible == ob.has_value());
    if (sr.feasible) {
      ++feasible_seen;
      SparseVec res = m.apply(sr.x);
      res.axpy(-1, b);
      CHECK(res.is_zero());
    } else {
      ++infeasible_seen;
      CHECK(m.transpose().apply(sr.certificate).is_zero());
      CHECK(sr.certificate.dot(b) != 0);
    }
  }
  CHECK(feasible_seen > 10);
  CHECK(infeasible_seen > 10);
}

TEST_CASE("subspace basis is canonical under insertion order") {
  std::mt19937_64 rng(314);
  std::vector<SparseVec> vs;
  for (int i = 0; i < 8; ++i) vs.push_back(random_vec(rng, 12, 5));
  // Throw in dependent combinations.
  SparseVec dep = vs[0];
  dep.axpy(rat_of(3, 2), vs[1]);
  vs.push_back(dep);

  auto a = SubspaceBasis::span(12, vs);
  auto shuffled = vs;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  auto b = SubspaceBasis::span(12, shuffled);

  REQUIRE(a.dim() == b.dim());
  // Positions follow insertion order, but the vector owning each pivot row is
  // uniquely determined by the subspace.
  REQUIRE(a.pivot_map().size() == b.pivot_map().size());
  for (const auto& [row, pos_a] : a.pivot_map()) {
    REQUIRE(b.pivot_map().count(row) == 1);
    CHECK(a.basis()[pos_a] == b.basis()[b.pivot_map().at(row)]);
  }

  // Fully reduced: each basis vector is 1 at its own pivot, 0 at the others.
  for (const auto& [row, pos] : a.pivot_map()) {
    for (std::size_t i = 0; i < a.dim(); ++i)
      CHECK(a.basis()[i].get(row) == (i == pos ? 1 : 0));
  }

  // reduce() kills members and is idempotent outside.
  SparseVec member = vs[2];
  member.axpy(-2, vs[5]);
  CHECK(a.contains(member));
  SparseVec out = random_vec(rng, 12, 6);
  SparseVec r1 = a.reduce(out);
  CHECK(a.reduce(r1) == r1);
  SparseVec diff = out;
  diff.axpy(-1, r1);
  CHECK(a.contains(diff));
}

TEST_CASE("quotient coordinates separate exactly modulo the subspace") {
  std::mt19937_64 rng(2718);
  auto m = random_matrix(rng, 10, 4, 14);
  auto sub = SubspaceBasis::column_span(m);
  SparseVec v = random_vec(rng, 10, 4);
  SparseVec w = v;
  w.axpy(rat_of(5, 3), m.col[1]);
  w.axpy(-2, m.col[3]);
  auto coords = quotient_coordinates(sub, {v, w});
  CHECK(coords[0] == coords[1]);

  SparseVec off = v;
  off.add(sub.complement_axes().front(), 1);
  auto coords2 = quotient_coordinates(sub, {v, off});
  CHECK(!(coords2[0] == coords2[1]));
}

TEST_CASE("subquotient of a two-step complex") {
  // out = (1 1 1) : Q^3 -> Q, in = (1, -1, 0)^T : Q -> Q^3, out*in == 0.
  SparseMatrix out(1, 3);
  out.set(0, 0, 1); out.set(0, 1, 1); out.set(0, 2, 1);
  SparseMatrix in(3, 1);
  in.set(0, 0, 1); in.set(1, 0, -1);

  auto sq = subquotient(3, &out, &in);
  CHECK(sq.cycle_rank == 2);
  CHECK(sq.boundary_rank == 1);
  CHECK(sq.dim == 1);
  REQUIRE(sq.representatives.size() == 1);
  CHECK(out.apply(sq.representatives[0]).is_zero());

  // Classes are invariant under adding boundaries.
  SparseVec shifted = sq.representatives[0];
  shifted.axpy(rat_of(7, 2), in.col[0]);
  CHECK(coords_in_homology(sq, shifted) == coords_in_homology(sq, sq.representatives[0]));

  // A non-cycle is rejected.
  SparseVec bad;
  bad.set(0, 1);
  CHECK_THROWS_AS(coords_in_homology(sq, bad), std::invalid_argument);

  // Degenerate ends: no out map means everything is a cycle, no in map means
  // no boundaries.
  auto top = subquotient(3, nullptr, &in);
  CHECK(top.dim == 2);
  auto bottom = subquotient(3, &out, nullptr);
  CHECK(bottom.dim == 2);
  auto whole = subquotient(3, nullptr, nullptr);
  CHECK(whole.dim == 3);
}

TEST_CASE("subquotient rejects non-complexes") {
  SparseMatrix out(1, 2);
  out.set(0, 0, 1);
  SparseMatrix in(2, 1);
  in.set(0, 0, 1);  // out * in != 0
  CHECK_THROWS_AS(subquotient(2, &out, &in), std::logic_error);
}
