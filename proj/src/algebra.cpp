#include "hochlab/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace hochlab {

namespace {

std::string triple_label(const AlgebraPresentation& p, Index i, Index j, Index k) {
  std::ostringstream os;
  os << "(" << p.labels[i] << ", " << p.labels[j] << ", " << p.labels[k] << ")";
  return os.str();
}

std::string hash_presentation(const AlgebraPresentation& p) {
  Fnv1a h;
  h.feed(p.dim);
  for (const auto& l : p.labels) {
    h.feed(l);
    h.feed(std::string(1, '\0'));
  }
  h.feed(p.unit ? *p.unit + 1 : 0);
  for (Index i = 0; i < p.dim; ++i)
    for (Index j = 0; j < p.dim; ++j)
      for (const auto& [k, v] : p.products[i][j].e) {
        h.feed(i);
        h.feed(j);
        h.feed(k);
        h.feed(rat_str(v));
      }
  return h.hex();
}

}  // namespace

Element multiply(const AlgebraPresentation& a, const Element& x, const Element& y) {
  Element out;
  for (const auto& [i, xv] : x.e) {
    if (i >= a.dim) throw std::out_of_range("multiply: element index out of range");
    for (const auto& [j, yv] : y.e) {
      if (j >= a.dim) throw std::out_of_range("multiply: element index out of range");
      out.axpy(xv * yv, a.products[i][j]);
    }
  }
  return out;
}

Element unit_element(const AlgebraPresentation& a) {
  if (!a.unit) throw std::invalid_argument("algebra has no unit basis element");
  Element e;
  e.set(*a.unit, Rat(1));
  return e;
}

AlgebraPresentation finalize_presentation(AlgebraPresentation p) {
  if (p.dim == 0) throw std::invalid_argument("algebra: dimension must be positive");
  if (p.labels.size() != p.dim)
    throw std::invalid_argument("algebra: label count does not match dim");
  if (p.products.size() != p.dim)
    throw std::invalid_argument("algebra: products table has wrong shape");
  for (const auto& row : p.products) {
    if (row.size() != p.dim)
      throw std::invalid_argument("algebra: products table has wrong shape");
    for (const auto& v : row)
      if (!v.is_zero() && v.e.rbegin()->first >= p.dim)
        throw std::invalid_argument("algebra: structure constant index out of range");
  }
  if (p.unit && *p.unit >= p.dim)
    throw std::invalid_argument("algebra: unit index out of range");

  // Associativity, exhaustively: (e_i e_j) e_k == e_i (e_j e_k).
  for (Index i = 0; i < p.dim; ++i)
    for (Index j = 0; j < p.dim; ++j) {
      const SparseVec& ij = p.products[i][j];
      for (Index k = 0; k < p.dim; ++k) {
        Element diff;
        for (const auto& [t, v] : ij.e) diff.axpy(v, p.products[t][k]);
        for (const auto& [t, v] : p.products[j][k].e)
          diff.axpy(-v, p.products[i][t]);
        if (!diff.is_zero())
          throw std::invalid_argument("algebra: associativity fails at " +
                                      triple_label(p, i, j, k));
      }
    }

  if (p.unit) {
    for (Index i = 0; i < p.dim; ++i) {
      SparseVec ei;
      ei.set(i, Rat(1));
      if (!(p.products[*p.unit][i] == ei) || !(p.products[i][*p.unit] == ei))
        throw std::invalid_argument("algebra: declared unit fails the unit law at " +
                                    p.labels[i]);
    }
  }

  p.content_hash = hash_presentation(p);
  return p;
}

AlgebraPresentation make_matrix_algebra(Index m) {
  if (m == 0) throw std::invalid_argument("matrix algebra: size must be positive");
  AlgebraPresentation p;
  p.dim = m * m;
  p.labels.reserve(p.dim);
  for (Index i = 1; i <= m; ++i)
    for (Index j = 1; j <= m; ++j)
      p.labels.push_back("E" + std::to_string(i) + "_" + std::to_string(j));
  p.products.assign(p.dim, std::vector<SparseVec>(p.dim));
  // E_{ij} E_{kl} = [j == k] E_{il}
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j)
      for (Index l = 0; l < m; ++l)
        p.products[i * m + j][j * m + l].set(i * m + l, Rat(1));
  if (m == 1) p.unit = 0;
  p.matrix_view = AlgebraPresentation::MatrixView{m};
  return finalize_presentation(std::move(p));
}

AlgebraPresentation make_scalar_algebra() {
  AlgebraPresentation p;
  p.dim = 1;
  p.labels = {"1"};
  p.products.assign(1, std::vector<SparseVec>(1));
  p.products[0][0].set(0, Rat(1));
  p.unit = 0;
  return finalize_presentation(std::move(p));
}

AlgebraPresentation make_square_zero_algebra(Index d) {
  if (d == 0) throw std::invalid_argument("square-zero algebra: dim must be positive");
  AlgebraPresentation p;
  p.dim = d;
  for (Index i = 0; i < d; ++i) p.labels.push_back("x" + std::to_string(i + 1));
  p.products.assign(d, std::vector<SparseVec>(d));
  return finalize_presentation(std::move(p));
}

AlgebraPresentation unitization(const AlgebraPresentation& a) {
  AlgebraPresentation p;
  p.dim = a.dim + 1;
  p.labels = a.labels;
  p.labels.push_back("1");
  p.products.assign(p.dim, std::vector<SparseVec>(p.dim));
  for (Index i = 0; i < a.dim; ++i)
    for (Index j = 0; j < a.dim; ++j) p.products[i][j] = a.products[i][j];
  const Index u = a.dim;
  for (Index i = 0; i < p.dim; ++i) {
    p.products[u][i].set(i, Rat(1));
    p.products[i][u].set(i, Rat(1));
  }
  p.unit = u;
  return finalize_presentation(std::move(p));
}

void validate_extension(const ExtensionSpec& ext) {
  const auto& A = ext.ideal;
  const auto& B = ext.total;
  const auto& C = ext.quotient;
  if (ext.inclusion.rows != B.dim || ext.inclusion.cols != A.dim)
    throw std::invalid_argument("extension: inclusion shape mismatch");
  if (ext.projection.rows != C.dim || ext.projection.cols != B.dim)
    throw std::invalid_argument("extension: projection shape mismatch");
  if (ext.section.rows != B.dim || ext.section.cols != C.dim)
    throw std::invalid_argument("extension: section shape mismatch");

  // Inclusion and projection are algebra maps (checked on basis pairs).
  for (Index i = 0; i < A.dim; ++i)
    for (Index j = 0; j < A.dim; ++j) {
      Element lhs = ext.inclusion.apply(A.products[i][j]);
      Element rhs = multiply(B, ext.inclusion.col[i], ext.inclusion.col[j]);
      rhs.axpy(Rat(-1), lhs);
      if (!rhs.is_zero())
        throw std::invalid_argument("extension: inclusion is not multiplicative at (" +
                                    A.labels[i] + ", " + A.labels[j] + ")");
    }
  for (Index i = 0; i < B.dim; ++i)
    for (Index j = 0; j < B.dim; ++j) {
      SparseVec bi, bj;
      bi.set(i, Rat(1));
      bj.set(j, Rat(1));
      Element lhs = ext.projection.apply(B.products[i][j]);
      Element rhs = multiply(C, ext.projection.col[i], ext.projection.col[j]);
      rhs.axpy(Rat(-1), lhs);
      if (!rhs.is_zero())
        throw std::invalid_argument("extension: projection is not multiplicative at (" +
                                    B.labels[i] + ", " + B.labels[j] + ")");
    }

  RankKernel inc = rank_and_kernel(ext.inclusion);
  if (inc.rank != A.dim)
    throw std::invalid_argument("extension: inclusion is not injective");
  RankKernel prj = rank_and_kernel(ext.projection);
  if (prj.rank != C.dim)
    throw std::invalid_argument("extension: projection is not surjective");

  // im(inclusion) == ker(projection): containment plus dimension count.
  for (Index i = 0; i < A.dim; ++i)
    if (!ext.projection.apply(ext.inclusion.col[i]).is_zero())
      throw std::invalid_argument("extension: projection does not kill the ideal");
  if (B.dim - prj.rank != A.dim)
    throw std::invalid_argument("extension: ker(projection) differs from im(inclusion)");

  // The image of A is a two-sided ideal of B.
  SubspaceBasis imageA = SubspaceBasis::column_span(ext.inclusion);
  for (Index i = 0; i < A.dim; ++i)
    for (Index j = 0; j < B.dim; ++j) {
      SparseVec bj;
      bj.set(j, Rat(1));
      if (!imageA.contains(multiply(B, ext.inclusion.col[i], bj)) ||
          !imageA.contains(multiply(B, bj, ext.inclusion.col[i])))
        throw std::invalid_argument("extension: image of the ideal is not an ideal at (" +
                                    A.labels[i] + ", " + B.labels[j] + ")");
    }

  SparseMatrix ps = ext.projection.multiply(ext.section);
  if (!(ps == SparseMatrix::identity(C.dim)))
    throw std::invalid_argument("extension: section is not a right inverse");
}

ExtensionSpec semidirect_product(const AlgebraPresentation& ideal,
                                 const AlgebraPresentation& multipliers,
                                 const std::vector<SparseMatrix>& left,
                                 const std::vector<SparseMatrix>& right) {
  const auto& A = ideal;
  const auto& C = multipliers;
  if (left.size() != C.dim || right.size() != C.dim)
    throw std::invalid_argument("semidirect: need one action matrix per multiplier");
  for (const auto& m : left)
    if (m.rows != A.dim || m.cols != A.dim)
      throw std::invalid_argument("semidirect: left action shape mismatch");
  for (const auto& m : right)
    if (m.rows != A.dim || m.cols != A.dim)
      throw std::invalid_argument("semidirect: right action shape mismatch");

  auto act_left = [&](Index c, const Element& a) { return left[c].apply(a); };
  auto act_right = [&](Index c, const Element& a) { return right[c].apply(a); };
  auto expect_zero = [&](Element diff, const std::string& law, Index x, Index y,
                         Index z, bool x_mult, bool y_mult, bool z_mult) {
    if (diff.is_zero()) return;
    auto name = [&](Index t, bool mult) {
      return mult ? C.labels[t] : A.labels[t];
    };
    throw std::invalid_argument("semidirect: " + law + " fails at (" +
                                name(x, x_mult) + ", " + name(y, y_mult) + ", " +
                                name(z, z_mult) + ")");
  };

  for (Index c = 0; c < C.dim; ++c)
    for (Index d = 0; d < C.dim; ++d)
      for (Index a = 0; a < A.dim; ++a) {
        Element ea;
        ea.set(a, Rat(1));
        // (cd).a == c.(d.a)
        Element lhs;
        for (const auto& [t, v] : C.products[c][d].e) lhs.axpy(v, left[t].col[a]);
        lhs.axpy(Rat(-1), act_left(c, act_left(d, ea)));
        expect_zero(std::move(lhs), "left action multiplicativity", c, d, a, true,
                    true, false);
        // a.(cd) == (a.c).d
        Element rhs;
        for (const auto& [t, v] : C.products[c][d].e) rhs.axpy(v, right[t].col[a]);
        rhs.axpy(Rat(-1), act_right(d, act_right(c, ea)));
        expect_zero(std::move(rhs), "right action multiplicativity", a, c, d, false,
                    true, true);
        // (c.a).d == c.(a.d)
        Element mid = act_right(d, act_left(c, ea));
        mid.axpy(Rat(-1), act_left(c, act_right(d, ea)));
        expect_zero(std::move(mid), "action commutation", c, a, d, true, false, true);
      }
  for (Index c = 0; c < C.dim; ++c)
    for (Index a = 0; a < A.dim; ++a)
      for (Index b = 0; b < A.dim; ++b) {
        Element ea, eb;
        ea.set(a, Rat(1));
        eb.set(b, Rat(1));
        // c.(ab) == (c.a)b
        Element lhs = act_left(c, A.products[a][b]);
        lhs.axpy(Rat(-1), multiply(A, act_left(c, ea), eb));
        expect_zero(std::move(lhs), "left action over products", c, a, b, true,
                    false, false);
        // (ab).c == a(b.c)
        Element rhs = act_right(c, A.products[a][b]);
        rhs.axpy(Rat(-1), multiply(A, ea, act_right(c, eb)));
        expect_zero(std::move(rhs), "right action over products", a, b, c, false,
                    false, true);
        // (a.c)b == a(c.b)
        Element mid = multiply(A, act_right(c, ea), eb);
        mid.axpy(Rat(-1), multiply(A, ea, act_left(c, eb)));
        expect_zero(std::move(mid), "middle interchange", a, c, b, false, true,
                    false);
      }

  AlgebraPresentation B;
  B.dim = A.dim + C.dim;
  B.labels = A.labels;
  for (const auto& l : C.labels) B.labels.push_back("m:" + l);
  B.products.assign(B.dim, std::vector<SparseVec>(B.dim));
  for (Index i = 0; i < A.dim; ++i)
    for (Index j = 0; j < A.dim; ++j) B.products[i][j] = A.products[i][j];
  for (Index c = 0; c < C.dim; ++c)
    for (Index a = 0; a < A.dim; ++a) {
      B.products[A.dim + c][a] = left[c].col[a];
      B.products[a][A.dim + c] = right[c].col[a];
    }
  for (Index c = 0; c < C.dim; ++c)
    for (Index d = 0; d < C.dim; ++d)
      for (const auto& [t, v] : C.products[c][d].e)
        B.products[A.dim + c][A.dim + d].set(A.dim + t, v);

  if (C.unit) {
    bool identically = true;
    for (Index a = 0; a < A.dim && identically; ++a) {
      Element ea;
      ea.set(a, Rat(1));
      identically = act_left(*C.unit, ea) == ea && act_right(*C.unit, ea) == ea;
    }
    if (identically) B.unit = A.dim + *C.unit;
  }

  ExtensionSpec ext;
  ext.ideal = A;
  ext.total = finalize_presentation(std::move(B));
  ext.quotient = C;
  ext.inclusion = SparseMatrix(ext.total.dim, A.dim);
  for (Index i = 0; i < A.dim; ++i) ext.inclusion.set(i, i, Rat(1));
  ext.projection = SparseMatrix(C.dim, ext.total.dim);
  for (Index c = 0; c < C.dim; ++c) ext.projection.set(c, A.dim + c, Rat(1));
  ext.section = SparseMatrix(ext.total.dim, C.dim);
  for (Index c = 0; c < C.dim; ++c) ext.section.set(A.dim + c, c, Rat(1));
  validate_extension(ext);
  return ext;
}

ExtensionSpec unitization_extension(const AlgebraPresentation& a) {
  std::vector<SparseMatrix> act{SparseMatrix::identity(a.dim)};
  return semidirect_product(a, make_scalar_algebra(), act, act);
}

}  // namespace hochlab
