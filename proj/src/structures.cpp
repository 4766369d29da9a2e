#include "hochlab/structures.hpp"

#include <stdexcept>
#include <string>

namespace hochlab {
namespace {

const AlgebraPresentation::MatrixView& view_of(const AlgebraPresentation& a) {
  if (!a.matrix_view) throw std::invalid_argument("algebra has no matrix view");
  return *a.matrix_view;
}

Element identity_element(const AlgebraPresentation& a) {
  const auto& v = view_of(a);
  Element e;
  for (Index i = 0; i < v.m; ++i) e.set(v.unit_index(i, i), 1);
  return e;
}

Element transpose_element(const AlgebraPresentation& a, const Element& x) {
  const auto& v = view_of(a);
  Element t;
  for (const auto& [b, c] : x.e) t.set(v.unit_index(v.col(b), v.row(b)), c);
  return t;
}

}  // namespace

Element matrix_unit(const AlgebraPresentation& matrix_alg, Index row, Index col) {
  const auto& v = view_of(matrix_alg);
  if (row >= v.m || col >= v.m) throw std::out_of_range("matrix unit out of range");
  Element e;
  e.set(v.unit_index(row, col), 1);
  return e;
}

ShiftFrame make_shift_frame(Index k, Index N, Index spare) {
  if (k == 0 || N == 0) throw std::invalid_argument("shift frame needs k >= 1, N >= 1");
  ShiftFrame f;
  f.k = k;
  f.N = N;
  f.spare = spare;
  f.M = N * k + spare;
  f.ambient = make_matrix_algebra(f.M);
  for (Index j = 0; j + 1 < f.M; ++j) {
    f.S.set(f.ambient.matrix_view->unit_index(j + 1, j), 1);
    f.R.set(f.ambient.matrix_view->unit_index(j, j + 1), 1);
  }
  for (Index l = 0; l < N; ++l) {
    Element p;
    for (Index i = l * k; i < (l + 1) * k; ++i)
      p.set(f.ambient.matrix_view->unit_index(i, i), 1);
    f.P.push_back(p);
  }

  const Element one = identity_element(f.ambient);
  if (!(f.R == transpose_element(f.ambient, f.S)))
    throw std::logic_error("shift frame: R != S^T");
  Element rs = multiply(f.ambient, f.R, f.S);
  rs.axpy(-1, one);
  rs.add(f.ambient.matrix_view->unit_index(f.M - 1, f.M - 1), 1);
  if (!rs.is_zero()) throw std::logic_error("shift frame: R*S != 1 - E_MM");
  Element sr = multiply(f.ambient, f.S, f.R);
  sr.axpy(-1, one);
  sr.add(f.ambient.matrix_view->unit_index(0, 0), 1);
  if (!sr.is_zero()) throw std::logic_error("shift frame: S*R != 1 - E_11");

  Element leading;
  for (Index i = 0; i < N * k; ++i)
    leading.set(f.ambient.matrix_view->unit_index(i, i), 1);
  Element psum;
  for (Index l = 0; l < N; ++l) {
    for (Index m = 0; m < N; ++m) {
      Element prod = multiply(f.ambient, f.P[l], f.P[m]);
      if (l == m) prod.axpy(-1, f.P[l]);
      if (!prod.is_zero())
        throw std::logic_error("shift frame: projections not orthogonal idempotents");
    }
    psum.axpy(1, f.P[l]);
  }
  psum.axpy(-1, leading);
  if (!psum.is_zero())
    throw std::logic_error("shift frame: projections do not sum to the leading block");

  // Corner membership is exactly the vanishing of R^k a and a S^k.
  const Element rk = coshift_power(f, k);
  const Element sk = shift_power(f, k);
  for (Index b = 0; b < f.ambient.dim; ++b) {
    Element unit;
    unit.set(b, 1);
    const bool kills = multiply(f.ambient, rk, unit).is_zero() &&
                       multiply(f.ambient, unit, sk).is_zero();
    const bool corner = f.ambient.matrix_view->row(b) < k &&
                        f.ambient.matrix_view->col(b) < k;
    if (kills != corner)
      throw std::logic_error("shift frame: corner predicate mismatch at basis " +
                             std::to_string(b));
  }
  return f;
}

Element shift_power(const ShiftFrame& f, Index j) {
  Element acc = identity_element(f.ambient);
  for (Index i = 0; i < j; ++i) acc = multiply(f.ambient, f.S, acc);
  return acc;
}

Element coshift_power(const ShiftFrame& f, Index j) {
  Element acc = identity_element(f.ambient);
  for (Index i = 0; i < j; ++i) acc = multiply(f.ambient, f.R, acc);
  return acc;
}

std::vector<Index> corner_basis(const ShiftFrame& f) {
  std::vector<Index> out;
  for (Index i = 0; i < f.k; ++i)
    for (Index j = 0; j < f.k; ++j)
      out.push_back(f.ambient.matrix_view->unit_index(i, j));
  return out;
}

ChainSpace corner_space(const ShiftFrame& f) {
  return ChainSpace(f.ambient, corner_basis(f));
}

bool in_corner(const ShiftFrame& f, const Element& a) {
  for (const auto& [b, c] : a.e) {
    (void)c;
    if (f.ambient.matrix_view->row(b) >= f.k) return false;
    if (f.ambient.matrix_view->col(b) >= f.k) return false;
  }
  return true;
}

Element block_amplify(const ShiftFrame& f, const Element& a, Index count) {
  if (!in_corner(f, a)) throw std::invalid_argument("block_amplify: element not in corner");
  if (count * f.k > f.M) throw std::invalid_argument("block_amplify: count*k exceeds M");
  Element out;
  for (Index l = 0; l < count; ++l) {
    Element term = multiply(f.ambient, shift_power(f, l * f.k),
                            multiply(f.ambient, a, coshift_power(f, l * f.k)));
    out.axpy(1, term);
  }
  return out;
}

SignedPermutation SignedPermutation::identity(Index n) {
  SignedPermutation u;
  u.perm.resize(n);
  u.sign.assign(n, 1);
  for (Index j = 0; j < n; ++j) u.perm[j] = j;
  return u;
}

SignedPermutation SignedPermutation::compose(const SignedPermutation& other) const {
  if (size() != other.size()) throw std::invalid_argument("size mismatch in compose");
  SignedPermutation out;
  out.perm.resize(size());
  out.sign.assign(size(), 1);
  for (Index j = 0; j < size(); ++j) {
    const Index mid = other.perm[j];
    const Index top = perm[mid];
    out.perm[j] = top;
    out.sign[top] = sign[top] * other.sign[mid];
  }
  return out;
}

SignedPermutation SignedPermutation::inverse() const {
  SignedPermutation out;
  out.perm.resize(size());
  out.sign.assign(size(), 1);
  for (Index j = 0; j < size(); ++j) {
    out.perm[perm[j]] = j;
    out.sign[j] = sign[perm[j]];
  }
  return out;
}

std::vector<int> SignedPermutation::signs_by_input() const {
  // D Pi == Pi D' for diagonal D = diag(sign): pushing the diagonal past the
  // permutation reindexes it by the input coordinate.
  std::vector<int> out(size());
  for (Index j = 0; j < size(); ++j) out[j] = sign[perm[j]];
  return out;
}

Element SignedPermutation::to_element(const AlgebraPresentation& matrix_alg) const {
  const auto& v = view_of(matrix_alg);
  if (v.m != size()) throw std::invalid_argument("permutation size != matrix size");
  Element e;
  for (Index j = 0; j < size(); ++j)
    e.set(v.unit_index(perm[j], j), sign[perm[j]]);
  return e;
}

SparseMatrix SignedPermutation::to_matrix() const {
  SparseMatrix m(size(), size());
  for (Index j = 0; j < size(); ++j) m.set(perm[j], j, sign[perm[j]]);
  return m;
}

SignedPermutation shift_conjugator(const ShiftFrame& f, Index k) {
  if (2 * k > f.M)
    throw std::invalid_argument("shift_conjugator: needs 2k <= M");
  SignedPermutation u = SignedPermutation::identity(f.M);
  for (Index j = 0; j < k; ++j) {
    u.perm[j] = j + k;
    u.perm[j + k] = j;
  }
  const SignedPermutation involution = u.compose(u);
  if (!(involution == SignedPermutation::identity(f.M)))
    throw std::logic_error("shift_conjugator: not an involution");

  // u a u^{-1} == S^k a R^k whenever a is supported in the leading k-corner.
  const Element ue = u.to_element(f.ambient);
  const Element sk = shift_power(f, k);
  const Element rk = coshift_power(f, k);
  for (Index i = 0; i < k; ++i) {
    for (Index j = 0; j < k; ++j) {
      const Element a = matrix_unit(f.ambient, i, j);
      Element conj = multiply(f.ambient, ue, multiply(f.ambient, a, ue));
      conj.axpy(-1, multiply(f.ambient, sk, multiply(f.ambient, a, rk)));
      if (!conj.is_zero())
        throw std::logic_error("shift_conjugator: conjugation law fails on corner");
    }
  }
  return u;
}

SplittingData corner_splitting(const AlgebraPresentation& matrix_alg, Index pivot) {
  const auto& v = view_of(matrix_alg);
  if (pivot >= v.m) throw std::out_of_range("splitting pivot out of range");
  SplittingData s{&matrix_alg, pivot};

  for (Index x = 0; x < matrix_alg.dim; ++x) {
    Element ex;
    ex.set(x, 1);
    // mu(s(x)) == x
    Element back;
    for (const auto& [code, c] : apply_splitting(s, ex).terms) {
      const auto t = decode_tuple(code, matrix_alg.dim, 2);
      Element u0, u1;
      u0.set(t[0], 1);
      u1.set(t[1], 1);
      back.axpy(c, multiply(matrix_alg, u0, u1));
    }
    back.axpy(-1, ex);
    if (!back.is_zero())
      throw std::logic_error("splitting: mu(s(x)) != x at basis " + std::to_string(x));

    for (Index y = 0; y < matrix_alg.dim; ++y) {
      Element ey;
      ey.set(y, 1);
      const Element xy = multiply(matrix_alg, ex, ey);
      Chain sxy = apply_splitting(s, xy);

      Chain left = left_mult(ex, apply_splitting(s, ey));
      left.axpy(-1, sxy);
      if (!left.is_zero())
        throw std::logic_error("splitting: s(xy) != x.s(y) at pair " +
                               std::to_string(x) + "," + std::to_string(y));

      Chain right = right_mult(apply_splitting(s, ex), ey);
      right.axpy(-1, sxy);
      if (!right.is_zero())
        throw std::logic_error("splitting: s(xy) != s(x).y at pair " +
                               std::to_string(x) + "," + std::to_string(y));
    }
  }
  return s;
}

Chain apply_splitting(const SplittingData& s, const Element& x) {
  const auto& v = view_of(*s.alg);
  Chain out = zero_chain(*s.alg, 1);
  for (const auto& [b, c] : x.e) {
    const Index first = v.unit_index(v.row(b), s.pivot);
    const Index second = v.unit_index(s.pivot, v.col(b));
    out.add_term(encode_tuple({first, second}, s.alg->dim), c);
  }
  return out;
}

Chain left_mult(const Element& a, const Chain& c) {
  Chain out = zero_chain(*c.alg, c.degree);
  for (const auto& [code, coeff] : c.terms) {
    auto t = decode_tuple(code, c.alg->dim, c.degree + 1);
    const Index head = t[0];
    for (const auto& [s, ca] : a.e) {
      for (const auto& [b, cb] : c.alg->products[s][head].e) {
        t[0] = b;
        out.add_term(encode_tuple(t, c.alg->dim), coeff * ca * cb);
      }
    }
  }
  return out;
}

Chain right_mult(const Chain& c, const Element& a) {
  Chain out = zero_chain(*c.alg, c.degree);
  for (const auto& [code, coeff] : c.terms) {
    auto t = decode_tuple(code, c.alg->dim, c.degree + 1);
    const Index tail = t[static_cast<size_t>(c.degree)];
    for (const auto& [s, ca] : a.e) {
      for (const auto& [b, cb] : c.alg->products[tail][s].e) {
        t[static_cast<size_t>(c.degree)] = b;
        out.add_term(encode_tuple(t, c.alg->dim), coeff * ca * cb);
      }
    }
  }
  return out;
}

ExtensionSpec conjugator_extension(const ShiftFrame& f, Index k) {
  const Element u = shift_conjugator(f, k).to_element(f.ambient);

  AlgebraPresentation group;
  group.dim = 2;
  group.labels = {"1", "u"};
  group.unit = 0;
  group.products.assign(2, std::vector<SparseVec>(2));
  group.products[0][0].set(0, 1);
  group.products[0][1].set(1, 1);
  group.products[1][0].set(1, 1);
  group.products[1][1].set(0, 1);
  group = finalize_presentation(std::move(group));

  SparseMatrix left_u(f.ambient.dim, f.ambient.dim);
  SparseMatrix right_u(f.ambient.dim, f.ambient.dim);
  for (Index b = 0; b < f.ambient.dim; ++b) {
    Element eb;
    eb.set(b, 1);
    left_u.col[b] = multiply(f.ambient, u, eb);
    right_u.col[b] = multiply(f.ambient, eb, u);
  }
  const SparseMatrix id = SparseMatrix::identity(f.ambient.dim);
  return semidirect_product(f.ambient, group, {id, left_u}, {id, right_u});
}

}  // namespace hochlab
