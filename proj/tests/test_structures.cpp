#include <stdexcept>

#include "doctest.h"
#include "hochlab/structures.hpp"

using namespace hochlab;

TEST_CASE("shift frame invariants hold for a frame with spare room") {
  // k=2, N=3, spare=1: M=7.  Construction itself validates R == S^T,
  // R S == 1 - E_MM, S R == 1 - E_11 and the projection algebra.
  auto f = make_shift_frame(2, 3, 1);
  CHECK(f.M == 7);
  CHECK(f.P.size() == 3);

  const auto& v = *f.ambient.matrix_view;
  // S e_j = e_{j+1}: entries sit one below the diagonal.
  for (Index j = 0; j + 1 < f.M; ++j) CHECK(f.S.get(v.unit_index(j + 1, j)) == 1);
  CHECK(f.S.nnz() == f.M - 1);

  // S^m R^m projects onto coordinates m..M-1.
  Element p2 = multiply(f.ambient, shift_power(f, 2), coshift_power(f, 2));
  for (Index i = 0; i < f.M; ++i)
    CHECK(p2.get(v.unit_index(i, i)) == (i >= 2 ? 1 : 0));
  CHECK(p2.nnz() == f.M - 2);

  // P[l] equals S^{lk} R^{lk} - S^{(l+1)k} R^{(l+1)k}.
  for (Index l = 0; l < f.N; ++l) {
    Element diff = multiply(f.ambient, shift_power(f, l * f.k), coshift_power(f, l * f.k));
    diff.axpy(-1, multiply(f.ambient, shift_power(f, (l + 1) * f.k),
                           coshift_power(f, (l + 1) * f.k)));
    diff.axpy(-1, f.P[l]);
    CHECK(diff.is_zero());
  }
}

TEST_CASE("degenerate frames are rejected") {
  CHECK_THROWS_AS(make_shift_frame(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_shift_frame(2, 0), std::invalid_argument);
}

TEST_CASE("corner membership tracks the leading block") {
  auto f = make_shift_frame(2, 2);  // M=4
  auto cb = corner_basis(f);
  CHECK(cb == std::vector<Index>{0, 1, 4, 5});

  Element in = matrix_unit(f.ambient, 1, 0);
  Element out = matrix_unit(f.ambient, 1, 2);
  CHECK(in_corner(f, in));
  CHECK(!in_corner(f, out));

  CHECK(corner_space(f).basis_size() == 4);
}

TEST_CASE("block amplification repeats the corner down the diagonal") {
  auto f = make_shift_frame(1, 3);  // M=3, scalar corner
  Element a = matrix_unit(f.ambient, 0, 0);
  Element amp = block_amplify(f, a, 3);
  const auto& v = *f.ambient.matrix_view;
  CHECK(amp.get(v.unit_index(0, 0)) == 1);
  CHECK(amp.get(v.unit_index(1, 1)) == 1);
  CHECK(amp.get(v.unit_index(2, 2)) == 1);
  CHECK(amp.nnz() == 3);

  CHECK_THROWS_AS(block_amplify(f, a, 4), std::invalid_argument);
  Element off = matrix_unit(f.ambient, 0, 1);
  CHECK_THROWS_AS(block_amplify(f, off, 2), std::invalid_argument);
}

TEST_CASE("block amplification is multiplicative on the corner") {
  auto f = make_shift_frame(2, 2, 1);  // M=5
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j)
      for (Index p = 0; p < 2; ++p)
        for (Index q = 0; q < 2; ++q) {
          Element a = matrix_unit(f.ambient, i, j);
          Element b = matrix_unit(f.ambient, p, q);
          Element lhs = block_amplify(f, multiply(f.ambient, a, b), 2);
          Element rhs = multiply(f.ambient, block_amplify(f, a, 2),
                                 block_amplify(f, b, 2));
          lhs.axpy(-1, rhs);
          CHECK(lhs.is_zero());
        }
}

TEST_CASE("signed permutations compose like their matrices") {
  // u: 3-cycle with a sign, w: transposition.
  SignedPermutation u = SignedPermutation::identity(4);
  u.perm = {1, 2, 0, 3};
  u.sign = {1, -1, 1, 1};
  SignedPermutation w = SignedPermutation::identity(4);
  w.perm = {0, 3, 2, 1};
  w.sign = {1, 1, -1, 1};

  auto uw = u.compose(w);
  CHECK(uw.to_matrix() == u.to_matrix().multiply(w.to_matrix()));
  auto wu = w.compose(u);
  CHECK(wu.to_matrix() == w.to_matrix().multiply(u.to_matrix()));

  auto inv = u.inverse();
  CHECK(u.compose(inv) == SignedPermutation::identity(4));
  CHECK(inv.compose(u) == SignedPermutation::identity(4));
  CHECK(inv.to_matrix() == u.to_matrix().transpose());  // signed orthogonality

  // Diagonal normal form: diag(sign) * Pi == Pi * diag(signs_by_input).
  SparseMatrix d_out(4, 4), d_in(4, 4), pi(4, 4);
  auto by_input = u.signs_by_input();
  for (Index j = 0; j < 4; ++j) {
    d_out.set(j, j, u.sign[j]);
    d_in.set(j, j, by_input[j]);
    pi.set(u.perm[j], j, 1);
  }
  CHECK(d_out.multiply(pi) == pi.multiply(d_in));
  CHECK(d_out.multiply(pi) == u.to_matrix());
}

TEST_CASE("shift conjugator swaps the two leading blocks") {
  auto f = make_shift_frame(2, 2, 1);  // M=5
  auto u = shift_conjugator(f, 2);
  CHECK(u.compose(u) == SignedPermutation::identity(5));

  // Independent check of the conjugation law through coordinate matrices.
  auto um = u.to_matrix();
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j) {
      SparseMatrix a(5, 5);
      a.set(i, j, 1);
      SparseMatrix conj = um.multiply(a).multiply(um);
      SparseMatrix target(5, 5);
      target.set(i + 2, j + 2, 1);
      CHECK(conj == target);
    }

  auto tight = make_shift_frame(1, 2);
  CHECK_THROWS_AS(shift_conjugator(tight, 2), std::invalid_argument);
}

TEST_CASE("corner splitting factors basis units through the pivot") {
  auto m3 = make_matrix_algebra(3);
  auto s = corner_splitting(m3, 1);

  Element e02 = matrix_unit(m3, 0, 2);
  Chain image = apply_splitting(s, e02);
  REQUIRE(image.terms.size() == 1);
  const Index e01 = m3.matrix_view->unit_index(0, 1);
  const Index e12 = m3.matrix_view->unit_index(1, 2);
  CHECK(image.terms.begin()->first == encode_tuple({e01, e12}, 9));
  CHECK(image.terms.begin()->second == 1);

  // Every pivot works; bad pivots are rejected.
  corner_splitting(m3, 0);
  corner_splitting(m3, 2);
  CHECK_THROWS_AS(corner_splitting(m3, 3), std::out_of_range);
}

TEST_CASE("module actions on chains compose with the product") {
  auto m2 = make_matrix_algebra(2);
  Chain c = zero_chain(m2, 1);
  c.add_term(encode_tuple({1, 2}, 4), rat_of(1, 2));
  c.add_term(encode_tuple({0, 0}, 4), 3);

  Element a = matrix_unit(m2, 1, 0);
  Element b = matrix_unit(m2, 0, 0);

  Chain lhs = left_mult(a, left_mult(b, c));
  Chain rhs = left_mult(multiply(m2, a, b), c);
  lhs.axpy(-1, rhs);
  CHECK(lhs.is_zero());

  Chain lhs2 = right_mult(right_mult(c, a), b);
  Chain rhs2 = right_mult(c, multiply(m2, a, b));
  lhs2.axpy(-1, rhs2);
  CHECK(lhs2.is_zero());

  // Left action touches only the first factor.
  Chain la = left_mult(a, c);
  for (const auto& [code, coeff] : la.terms) {
    (void)coeff;
    auto t = decode_tuple(code, 4, 2);
    CHECK(m2.matrix_view->row(t[0]) == 1);
  }
}

TEST_CASE("conjugator extension validates and multiplies as expected") {
  auto f = make_shift_frame(1, 2);  // M=2, corner is the (1,1) slot
  auto ext = conjugator_extension(f, 1);
  CHECK(ext.ideal.dim == 4);
  CHECK(ext.total.dim == 6);
  CHECK(ext.quotient.dim == 2);
  REQUIRE(ext.total.unit.has_value());
  CHECK(*ext.total.unit == 4);
  validate_extension(ext);

  // u . E11 = E21 inside the total algebra (u is the coordinate swap).
  const Index u_idx = 5;
  const Index e11 = 0;
  const Index e21 = f.ambient.matrix_view->unit_index(1, 0);
  CHECK(ext.total.products[u_idx][e11].get(e21) == 1);
  CHECK(ext.total.products[u_idx][e11].nnz() == 1);
  // u^2 = 1 in the quotient and in the total algebra.
  CHECK(ext.quotient.products[1][1].get(0) == 1);
  CHECK(ext.total.products[u_idx][u_idx].get(4) == 1);
}
