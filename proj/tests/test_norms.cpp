#include <cmath>
#include <random>

#include "doctest.h"
#include "hochlab/norms.hpp"

using namespace hochlab;

namespace {

Element identity_of(const AlgebraPresentation& a) {
  Element e;
  for (Index i = 0; i < a.matrix_view->m; ++i)
    e.set(a.matrix_view->unit_index(i, i), 1);
  return e;
}

Chain chain_of(const AlgebraPresentation& a, int degree,
               std::initializer_list<std::pair<std::vector<Index>, Rat>> terms) {
  Chain c;
  c.alg = &a;
  c.degree = degree;
  for (const auto& [tuple, coeff] : terms)
    c.add_term(encode_tuple(tuple, a.dim), coeff);
  return c;
}

Chain random_chain(std::mt19937_64& rng, const AlgebraPresentation& a,
                   int degree, int terms) {
  Chain c;
  c.alg = &a;
  c.degree = degree;
  const Index span = chain_dim(a.dim, degree);
  for (int t = 0; t < terms; ++t) {
    const long num = long(rng() % 11) - 5;
    if (num != 0) c.add_term(rng() % span, rat_of(num, 1 + long(rng() % 3)));
  }
  return c;
}

}  // namespace

TEST_CASE("hand matrices in all three norms") {
  auto m2 = make_matrix_algebra(2);
  auto m3 = make_matrix_algebra(3);

  const Element id3 = identity_of(m3);
  CHECK(matrix_norm(m3, id3, NormKind::l1).value == 1);
  CHECK(matrix_norm(m3, id3, NormKind::linf).value == 1);
  const NormValue id_l2 = matrix_norm(m3, id3, NormKind::l2);
  CHECK_FALSE(id_l2.exact);
  CHECK(id_l2.approx == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(id_l2.error_bound <= 1e-9);

  Element swap2 = matrix_unit(m2, 0, 1);
  swap2.add(m2.matrix_view->unit_index(1, 0), 1);
  CHECK(matrix_norm(m2, swap2, NormKind::l1).value == 1);
  CHECK(matrix_norm(m2, swap2, NormKind::linf).value == 1);
  CHECK(matrix_norm(m2, swap2, NormKind::l2).approx ==
        doctest::Approx(1.0).epsilon(1e-12));

  // [[2, 1], [0, 0]]: column sums 2 and 1, row sums 3 and 0, top singular
  // value sqrt(5), cross bound sqrt(6).
  Element a = matrix_unit(m2, 0, 0);
  a.scale(2);
  a.add(m2.matrix_view->unit_index(0, 1), 1);
  CHECK(matrix_norm(m2, a, NormKind::l1).value == 2);
  CHECK(matrix_norm(m2, a, NormKind::linf).value == 3);
  const NormValue a_l2 = matrix_norm(m2, a, NormKind::l2);
  CHECK(a_l2.approx == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));
  CHECK(a_l2.error_bound ==
        doctest::Approx(std::sqrt(6.0) - std::sqrt(5.0)).epsilon(1e-9));

  const Element zero;
  CHECK(matrix_norm(m2, zero, NormKind::l1).value == 0);
  CHECK(matrix_norm(m2, zero, NormKind::l2).approx == 0.0);
}

TEST_CASE("l1 agrees with a dense recomputation on random matrices") {
  auto m4 = make_matrix_algebra(4);
  std::mt19937_64 rng(20250511);
  for (int trial = 0; trial < 10; ++trial) {
    const Element x = random_matrix_element(rng, m4, 7);
    Rat best = 0;
    for (Index c = 0; c < 4; ++c) {
      Rat sum = 0;
      for (Index r = 0; r < 4; ++r)
        sum += rat_abs(x.get(m4.matrix_view->unit_index(r, c)));
      if (sum > best) best = sum;
    }
    CHECK(matrix_norm(m4, x, NormKind::l1).value == best);
  }
}

TEST_CASE("chain norms sum absolute coefficients over unit-norm factors") {
  auto m2 = make_matrix_algebra(2);
  const Index e11 = m2.matrix_view->unit_index(0, 0);
  const Index e12 = m2.matrix_view->unit_index(0, 1);
  const Index e22 = m2.matrix_view->unit_index(1, 1);

  CHECK(chain_norm(chain_of(m2, 1, {{{e11, e12}, 1}}), NormKind::l1).value == 1);
  CHECK(chain_norm(chain_of(m2, 1, {{{e11, e12}, 2}}), NormKind::l1).value == 2);
  CHECK(chain_norm(chain_of(m2, 1, {{{e11, e11}, 1}, {{e22, e22}, 1}}),
                   NormKind::linf)
            .value == 2);

  std::mt19937_64 rng(20250512);
  for (int trial = 0; trial < 20; ++trial) {
    const Chain c = random_chain(rng, m2, 2, 6);
    const Chain d = random_chain(rng, m2, 2, 6);
    Chain sum = c;
    sum.axpy(1, d);
    CHECK(chain_norm(sum, NormKind::l1).value <=
          chain_norm(c, NormKind::l1).value + chain_norm(d, NormKind::l1).value);

    Chain scaled = c;
    scaled.scale(rat_of(-3, 2));
    CHECK(chain_norm(scaled, NormKind::l1).value ==
          rat_of(3, 2) * chain_norm(c, NormKind::l1).value);
  }
}

TEST_CASE("norm assignments drive factor norms without a matrix view") {
  auto sq = make_square_zero_algebra(3);
  sq.norm_assignment = std::map<Index, Rat>{{0, rat_of(2)}, {1, rat_of(1, 3)}};
  CHECK(factor_norm(sq, 0) == 2);
  CHECK(factor_norm(sq, 1) == rat_of(1, 3));
  CHECK(factor_norm(sq, 2) == 1);  // unassigned defaults to 1
  CHECK(chain_norm(chain_of(sq, 1, {{{0, 1}, 1}}), NormKind::l1).value ==
        rat_of(2, 3));
  CHECK_THROWS_AS(matrix_norm(sq, Element{}, NormKind::l1),
                  std::invalid_argument);
  CHECK_THROWS_AS(factor_norm(sq, 5), std::out_of_range);
}

TEST_CASE("cochain norm bounds evaluation") {
  auto m2 = make_matrix_algebra(2);
  Cochain d;
  d.alg = &m2;
  d.degree = 1;
  d.set(encode_tuple({0, 1}, 4), rat_of(-5, 2));
  d.set(encode_tuple({2, 3}, 4), rat_of(3));
  const NormValue nd = cochain_norm(d, NormKind::linf);
  CHECK(nd.value == 3);

  std::mt19937_64 rng(20250513);
  for (int trial = 0; trial < 10; ++trial) {
    const Chain c = random_chain(rng, m2, 1, 5);
    CHECK(rat_abs(d.evaluate(c)) <=
          nd.value * chain_norm(c, NormKind::linf).value);
  }
}

TEST_CASE("block amplification preserves norms") {
  const ShiftFrame thin = make_shift_frame(1, 4);
  const auto rep =
      amplification_isometry(thin, matrix_unit(thin.ambient, 0, 0), 4, NormKind::l1);
  CHECK(rep.check == "amplification-isometry");
  CHECK(rep.rows.size() == 4);
  for (const auto& row : rep.rows) {
    CHECK(row.ratio.exact);
    CHECK(row.ratio.value == 1);
  }
  CHECK(rep.all_one);
  CHECK(rep.tolerance == 0.0);
  CHECK(rep.max_ratio.value == 1);

  const ShiftFrame wide = make_shift_frame(2, 3);
  Element a = matrix_unit(wide.ambient, 0, 0);
  a.scale(2);
  a.add(wide.ambient.matrix_view->unit_index(0, 1), 1);
  CHECK(amplification_isometry(wide, a, 3, NormKind::linf).all_one);
  CHECK(amplification_isometry(wide, a, 3, NormKind::l1).all_one);

  const auto l2 = amplification_isometry(wide, a, 3, NormKind::l2);
  CHECK(l2.tolerance == 1e-9);
  CHECK(l2.all_one);
  for (const auto& row : l2.rows)
    CHECK(row.ratio.approx == doctest::Approx(1.0).epsilon(1e-9));

  CHECK_THROWS_AS(
      amplification_isometry(wide, matrix_unit(wide.ambient, 0, 2), 2, NormKind::l1),
      std::invalid_argument);
  CHECK_THROWS_AS(amplification_isometry(wide, Element{}, 2, NormKind::l1),
                  std::invalid_argument);
  CHECK_THROWS_AS(amplification_isometry(wide, a, 4, NormKind::l1),
                  std::invalid_argument);  // 4 copies of a 2-block exceed M=6
}

TEST_CASE("signed permutations are isometries of the exact norms") {
  auto m3 = make_matrix_algebra(3);
  std::mt19937_64 rng(20250514);

  SignedPermutation hand = SignedPermutation::identity(3);
  hand.perm = {1, 0, 2};
  hand.sign = {1, -1, 1};
  const Element a = random_matrix_element(rng, m3, 5);
  const Element ua = multiply(m3, hand.to_element(m3), a);
  CHECK(matrix_norm(m3, ua, NormKind::l1).value ==
        matrix_norm(m3, a, NormKind::l1).value);

  auto m4 = make_matrix_algebra(4);
  std::vector<SignedPermutation> us;
  std::vector<Element> as;
  for (int i = 0; i < 50; ++i) {
    us.push_back(random_signed_permutation(rng, 4));
    as.push_back(random_matrix_element(rng, m4, 9));
  }
  for (NormKind kind : {NormKind::l1, NormKind::linf}) {
    const auto rep = permutation_isometry(m4, us, as, kind);
    CHECK(rep.rows.size() == 100);
    CHECK(rep.all_one);
    CHECK(rep.max_ratio.exact);
    CHECK(rep.max_ratio.value == 1);
  }
  CHECK(permutation_isometry(m4, us, as, NormKind::l2).all_one);

  // Two-sided invariance over sampled (U, a, V) triples.
  for (int i = 0; i < 10; ++i) {
    const Element u = random_signed_permutation(rng, 4).to_element(m4);
    const Element v = random_signed_permutation(rng, 4).to_element(m4);
    const Element x = random_matrix_element(rng, m4, 5);
    const Element uxv = multiply(m4, multiply(m4, u, x), v);
    for (NormKind kind : {NormKind::l1, NormKind::linf})
      CHECK(matrix_norm(m4, uxv, kind).value == matrix_norm(m4, x, kind).value);
  }

  us.pop_back();
  CHECK_THROWS_AS(permutation_isometry(m4, us, as, NormKind::l1),
                  std::invalid_argument);
}

TEST_CASE("ratio helpers reject zero denominators") {
  CHECK_THROWS_AS(norm_ratio(exact_norm(1), exact_norm(0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(norm_ratio(numeric_norm(1.0, 0.0), numeric_norm(0.0, 0.0)),
                  std::invalid_argument);
  const NormValue r = norm_ratio(exact_norm(rat_of(3, 2)), exact_norm(rat_of(3)));
  CHECK(r.exact);
  CHECK(r.value == rat_of(1, 2));
  CHECK(parse_norm_kind("linf") == NormKind::linf);
  CHECK_THROWS_AS(parse_norm_kind("l3"), std::invalid_argument);
}
