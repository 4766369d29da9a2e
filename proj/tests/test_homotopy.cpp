#include <random>
#include <stdexcept>

#include "doctest.h"
#include "hochlab/homotopy.hpp"

using namespace hochlab;

namespace {

Chain corner_chain(const ShiftFrame& f, const std::vector<Index>& tuple) {
  return basis_chain(f.ambient, static_cast<int>(tuple.size()) - 1,
                     encode_tuple(tuple, f.ambient.dim));
}

}  // namespace

TEST_CASE("conjugation and amplification on hand-worked chains") {
  auto f = make_shift_frame(1, 2);  // M = 2; corner basis is {E11} = {0}

  Chain c = corner_chain(f, {0, 0});
  Chain moved = shift_conjugate(f, 1, c);
  // E11 x E11 conjugated one step is E22 x E22.
  CHECK(moved.terms == std::map<Index, Rat>{{15, rat_of(1)}});

  CHECK(shift_conjugate(f, 0, c).terms == c.terms);

  Chain wide = amplify(f, c);
  // (E11 + E22) x (E11 + E22)
  CHECK(wide.terms == std::map<Index, Rat>{{0, rat_of(1)},
                                           {3, rat_of(1)},
                                           {12, rat_of(1)},
                                           {15, rat_of(1)}});

  Chain ins = insert_projection(f, 0, 0, corner_chain(f, {0}));
  CHECK(ins.degree == 1);
  CHECK(ins.terms == std::map<Index, Rat>{{0, rat_of(1)}});  // E11 x P0 = E11 x E11

  Chain hom = insertion_homotopy(f, 0, corner_chain(f, {0}));
  CHECK(hom.terms == std::map<Index, Rat>{{0, rat_of(-1)}});
}

TEST_CASE("operator preconditions") {
  auto f = make_shift_frame(1, 2);
  Chain c = corner_chain(f, {0, 0});
  CHECK_THROWS_AS(shift_conjugate(f, 2, c), std::out_of_range);
  CHECK_THROWS_AS(insert_projection(f, 0, 2, c), std::out_of_range);

  Chain off = basis_chain(f.ambient, 1, encode_tuple({3, 0}, f.ambient.dim));
  CHECK_THROWS_AS(amplify(f, off), std::invalid_argument);
}

TEST_CASE("graded maps agree with the chain operators") {
  auto f = make_shift_frame(2, 2, 1);  // M = 5, a frame with slack
  Chain c = corner_chain(f, {1, 5});   // E12 x E21
  c.axpy(rat_of(-2, 3), corner_chain(f, {0, 6}));

  CHECK(shift_conjugation_map(f, 1).apply(c).terms == shift_conjugate(f, 1, c).terms);
  CHECK(amplification_map(f).apply(c).terms == amplify(f, c).terms);
  CHECK(insertion_homotopy_map(f, 1).apply(c).terms == insertion_homotopy(f, 1, c).terms);

  Chain summed = zero_chain(f.ambient, 2);
  for (Index l = 0; l < f.N; ++l) summed.axpy(rat_of(1), insertion_homotopy(f, l, c));
  CHECK(summed_insertion_homotopy_map(f).apply(c).terms == summed.terms);
}

TEST_CASE("conjugation and amplification are chain maps") {
  for (auto [k, n_blocks, spare] : {std::tuple<Index, Index, Index>{1, 2, 0},
                                    {1, 3, 0},
                                    {2, 2, 0},
                                    {2, 2, 1},
                                    {2, 3, 0}}) {
    auto f = make_shift_frame(k, n_blocks, spare);
    for (int degree = 1; degree <= 2; ++degree) {
      for (Index l = 0; l < f.N; ++l) {
        auto v = shift_chain_map_check(f, l, degree);
        CAPTURE(k);
        CAPTURE(l);
        CAPTURE(degree);
        CHECK(v.pass);
        CHECK(v.witness.empty());
      }
      CHECK(amplify_chain_map_check(f, degree).pass);
    }
  }
}

TEST_CASE("face maps exchange with the projection insertions") {
  for (auto [k, n_blocks] : {std::pair<Index, Index>{1, 2}, {1, 3}, {2, 2}}) {
    auto f = make_shift_frame(k, n_blocks);
    for (int degree = 0; degree <= 2; ++degree)
      for (Index l = 0; l < f.N; ++l) {
        auto v = face_relations_check(f, l, degree);
        CAPTURE(k);
        CAPTURE(l);
        CAPTURE(degree);
        CHECK(v.pass);
      }
  }
}

TEST_CASE("the insertion homotopy interpolates conjugation and its front term") {
  for (auto [k, n_blocks] : {std::pair<Index, Index>{1, 2}, {1, 3}, {2, 2}, {2, 3}}) {
    auto f = make_shift_frame(k, n_blocks);
    for (int degree = 0; degree <= 2; ++degree)
      for (Index l = 0; l < f.N; ++l) {
        auto v = insertion_homotopy_check(f, l, degree);
        CAPTURE(k);
        CAPTURE(n_blocks);
        CAPTURE(l);
        CAPTURE(degree);
        CHECK(v.pass);
      }
  }
}

TEST_CASE("summed homotopy connects the conjugation sum to amplification") {
  for (auto [k, n_blocks] : {std::pair<Index, Index>{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}}) {
    auto f = make_shift_frame(k, n_blocks);
    for (int degree = 0; degree <= 2; ++degree) {
      auto v = amplify_homotopy_check(f, degree);
      CAPTURE(k);
      CAPTURE(n_blocks);
      CAPTURE(degree);
      CHECK(v.pass);
    }
  }
}

TEST_CASE("averaged boundary identity") {
  for (auto [k, n_blocks] : {std::pair<Index, Index>{1, 2}, {1, 3}, {2, 2}}) {
    auto f = make_shift_frame(k, n_blocks);
    for (int degree = 1; degree <= 2; ++degree) {
      auto v = averaged_boundary_check(f, degree);
      CAPTURE(k);
      CAPTURE(degree);
      CHECK(v.pass);
    }
  }
}

TEST_CASE("sign sabotage breaks the homotopy identities") {
  auto f = make_shift_frame(1, 2);

  GradedMap flipped("flipped-signs", corner_space(f), f.ambient, 1,
                    [&f](int degree, const std::vector<Index>& t) {
                      Chain b = basis_chain(f.ambient, degree, encode_tuple(t, f.ambient.dim));
                      Chain out = zero_chain(f.ambient, degree + 1);
                      for (int i = 0; i <= degree; ++i)
                        out.axpy(rat_of(i % 2 == 0 ? 1 : -1), insert_projection(f, 1, i, b));
                      return out;
                    });
  auto v = insertion_homotopy_check(f, 1, 1, flipped);
  CHECK(!v.pass);
  CHECK(!v.witness.empty());
  CHECK(!v.residual.is_zero());

  GradedMap partial("dropped-block", corner_space(f), f.ambient, 1,
                    [&f](int degree, const std::vector<Index>& t) {
                      Chain b = basis_chain(f.ambient, degree, encode_tuple(t, f.ambient.dim));
                      return insertion_homotopy(f, 1, b);  // misses block 0 entirely
                    });
  auto w = amplify_homotopy_check(f, 1, partial);
  CHECK(!w.pass);
  CHECK(!w.residual.is_zero());
}

TEST_CASE("commutator insertion is null-homotopic") {
  auto m2 = make_matrix_algebra(2);
  Element e12;
  e12.set(1, rat_of(1));
  CHECK(commutator_homotopy_check(m2, e12, 1).pass);
  CHECK(commutator_homotopy_check(m2, e12, 2).pass);

  auto ext = unitization_extension(make_matrix_algebra(2));
  const auto& b = ext.total;

  // A central element inserts commutators that all vanish.
  Element one = unit_element(b);
  CHECK(commutator_insertion(b, one).apply(basis_chain(b, 1, 7)).is_zero());
  CHECK(commutator_homotopy_check(b, one, 1).pass);

  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<long> num(-5, 5);
  for (int round = 0; round < 6; ++round) {
    Element h;
    for (Index i = 0; i < b.dim; ++i) h.set(i, rat_of(num(rng), 1 + round));
    CAPTURE(round);
    CHECK(commutator_homotopy_check(b, h, 1).pass);
    CHECK(commutator_homotopy_check(b, h, 2).pass);
  }
}

TEST_CASE("splitting contraction on matrix algebras") {
  for (Index size : {Index{2}, Index{3}}) {
    auto alg = make_matrix_algebra(size);
    for (Index pivot = 0; pivot < size; ++pivot) {
      auto split = corner_splitting(alg, pivot);
      for (int degree = 1; degree <= 2; ++degree) {
        CAPTURE(size);
        CAPTURE(pivot);
        CAPTURE(degree);
        CHECK(splitting_contraction_check(split, ComplexKind::hochschild, degree).pass);
        CHECK(splitting_contraction_check(split, ComplexKind::bar, degree).pass);
      }
      CHECK(splitting_contraction_check(split, ComplexKind::bar, 0).pass);
    }
  }

  auto alg = make_matrix_algebra(2);
  auto split = corner_splitting(alg, 0);
  CHECK_THROWS_AS(splitting_contraction_check(split, ComplexKind::hochschild, 0),
                  std::invalid_argument);
}

TEST_CASE("a non-splitting candidate fails the contraction check") {
  auto alg = make_matrix_algebra(2);
  GradedMap bad("mismatched-pivots", ChainSpace(alg), alg, 1,
                [&alg](int degree, const std::vector<Index>& t) {
                  // E_ij -> E_i1 x E_21: inner indexes disagree, so the
                  // multiplication composite is zero rather than the identity.
                  std::vector<Index> u{(t[0] / 2) * 2, 2 + t[0] % 2};
                  u.insert(u.end(), t.begin() + 1, t.end());
                  return basis_chain(alg, degree + 1, encode_tuple(u, alg.dim));
                });
  auto v = contraction_check(bad, ComplexKind::hochschild, 1);
  CHECK(!v.pass);
  CHECK(!v.residual.is_zero());
  auto w = contraction_check(bad, ComplexKind::bar, 1);
  CHECK(!w.pass);
}

TEST_CASE("conjugated corner cycles bound in the ambient complex") {
  auto f = make_shift_frame(1, 2);
  Chain tau = corner_chain(f, {0, 0});  // E11 x E11, a cycle
  Chain w = shift_boundary_witness(f, 1, tau);
  Chain expect = shift_conjugate(f, 1, tau);
  expect.axpy(rat_of(-1), tau);
  CHECK(hochschild_differential(w).terms == expect.terms);
  CHECK(shift_boundary_check(f, 1, tau).pass);

  auto g = make_shift_frame(2, 2);
  Chain not_cycle = basis_chain(g.ambient, 1, encode_tuple({0, 1}, g.ambient.dim));
  CHECK_THROWS_AS(shift_boundary_witness(g, 1, not_cycle), std::invalid_argument);

  auto m6 = make_shift_frame(2, 3);
  Chain small = basis_chain(m6.ambient, 1, encode_tuple({0, 0}, m6.ambient.dim));
  CHECK_THROWS_AS(shift_boundary_witness(m6, 1, small, 100), std::length_error);
}

TEST_CASE("identity battery for a small frame") {
  auto f = make_shift_frame(1, 2);
  auto verdicts = verify_shift_identities(f, 2);
  CHECK(verdicts.size() == 19);
  for (const auto& v : verdicts) {
    CAPTURE(v.identity);
    CHECK(v.pass);
    CHECK(v.residual.is_zero());
  }

  CHECK_THROWS_AS(verify_shift_identities(make_shift_frame(2, 2), 2, 2),
                  std::length_error);
}
