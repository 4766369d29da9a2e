#include "hochlab/homology.hpp"

#include <stdexcept>
#include <string>

namespace hochlab {

namespace {

void check_budget(const AlgebraPresentation& a, int degree, Index budget_cols) {
  if (chain_dim(a.dim, degree) > budget_cols)
    throw std::length_error("homology: differential at degree " +
                            std::to_string(degree) + " exceeds the column budget");
}

GradedMap differential_map(const AlgebraPresentation& a, ComplexKind kind) {
  return kind == ComplexKind::hochschild ? hochschild_map(a) : bar_map(a);
}

}  // namespace

HomologyReport homology(const AlgebraPresentation& a, ComplexKind kind,
                        int max_degree, Index budget_cols) {
  if (max_degree < 0) throw std::invalid_argument("homology: negative degree");
  check_budget(a, max_degree + 1, budget_cols);
  GradedMap d = differential_map(a, kind);

  HomologyReport rep;
  rep.algebra_hash = a.content_hash;
  rep.kind = kind;
  rep.max_degree = max_degree;
  for (int n = 0; n <= max_degree; ++n) {
    const SparseMatrix* out = n == 0 ? nullptr : &materialize(d, n);
    const SparseMatrix& in = materialize(d, n + 1);
    Subquotient sq = subquotient(chain_dim(a.dim, n), out, &in);
    DegreeReport dr;
    dr.degree = n;
    dr.space_dim = sq.space_dim;
    dr.cycle_rank = sq.cycle_rank;
    dr.boundary_rank = sq.boundary_rank;
    dr.dim = sq.dim;
    dr.representatives = std::move(sq.representatives);
    rep.degrees.push_back(std::move(dr));
  }
  return rep;
}

HomologyReport cohomology(const AlgebraPresentation& a, int max_degree,
                          Index budget_cols) {
  if (max_degree < 0) throw std::invalid_argument("cohomology: negative degree");
  check_budget(a, max_degree + 1, budget_cols);
  GradedMap d = differential_map(a, ComplexKind::hochschild);

  HomologyReport rep;
  rep.algebra_hash = a.content_hash;
  rep.kind = ComplexKind::hochschild;
  rep.max_degree = max_degree;
  for (int n = 0; n <= max_degree; ++n) {
    // The dual differential out of degree n is the transpose of the
    // differential into degree n of the chain complex.
    SparseMatrix out = materialize(d, n + 1).transpose();
    SparseMatrix in_store;
    const SparseMatrix* in = nullptr;
    if (n > 0) {
      in_store = materialize(d, n).transpose();
      in = &in_store;
    }
    Subquotient sq = subquotient(chain_dim(a.dim, n), &out, in);
    DegreeReport dr;
    dr.degree = n;
    dr.space_dim = sq.space_dim;
    dr.cycle_rank = sq.cycle_rank;
    dr.boundary_rank = sq.boundary_rank;
    dr.dim = sq.dim;
    dr.representatives = std::move(sq.representatives);
    rep.degrees.push_back(std::move(dr));
  }
  return rep;
}

HUnitality h_unitality(const AlgebraPresentation& a, int max_degree,
                       Index budget_cols) {
  HomologyReport rep = homology(a, ComplexKind::bar, max_degree, budget_cols);
  HUnitality out;
  out.checked_up_to = max_degree;
  out.h_unital = true;
  for (const auto& dr : rep.degrees) {
    out.bar_dims.push_back(dr.dim);
    if (dr.dim != 0 && !out.first_failure) {
      out.first_failure = dr.degree;
      out.h_unital = false;
    }
  }
  return out;
}

InducedMap induced_map(const GradedMap& f, const AlgebraPresentation& target,
                       ComplexKind kind, int degree, Index budget_cols) {
  if (degree < 0) throw std::invalid_argument("induced_map: negative degree");
  if (f.shift() != 0)
    throw std::invalid_argument("induced_map: chain map must preserve degree");
  const AlgebraPresentation& source = f.source().algebra();
  if (f.source().basis_size() != source.dim)
    throw std::invalid_argument("induced_map: source must be a full chain space");

  check_budget(source, degree + 1, budget_cols);
  check_budget(target, degree + 1, budget_cols);
  GradedMap ds = differential_map(source, kind);
  GradedMap dt = differential_map(target, kind);

  // f must commute with the differentials feeding this degree.
  for (int m = degree; m <= degree + 1; ++m) {
    if (m == 0) continue;
    SparseMatrix lhs = materialize(dt, m).multiply(materialize(f, m));
    SparseMatrix rhs = materialize(f, m - 1).multiply(materialize(ds, m));
    if (!(lhs == rhs))
      throw std::invalid_argument("induced_map: not a chain map at degree " +
                                  std::to_string(m));
  }

  const SparseMatrix* out_s = degree == 0 ? nullptr : &materialize(ds, degree);
  const SparseMatrix& in_s = materialize(ds, degree + 1);
  Subquotient hs = subquotient(chain_dim(source.dim, degree), out_s, &in_s);

  const SparseMatrix* out_t = degree == 0 ? nullptr : &materialize(dt, degree);
  const SparseMatrix& in_t = materialize(dt, degree + 1);
  Subquotient ht = subquotient(chain_dim(target.dim, degree), out_t, &in_t);

  InducedMap im;
  im.degree = degree;
  im.source_dim = hs.dim;
  im.target_dim = ht.dim;
  im.on_classes = SparseMatrix(ht.dim, hs.dim);
  const SparseMatrix& fm = materialize(f, degree);
  for (Index j = 0; j < hs.dim; ++j)
    im.on_classes.col[j] = coords_in_homology(ht, fm.apply(hs.representatives[j]));
  im.iso = hs.dim == ht.dim && rank_and_kernel(im.on_classes).rank == hs.dim;
  return im;
}

GradedMap trace_map(const AlgebraPresentation& matrix_alg,
                    const AlgebraPresentation& scalars) {
  if (!matrix_alg.matrix_view)
    throw std::invalid_argument("trace_map: source needs a matrix view");
  if (scalars.dim != 1)
    throw std::invalid_argument("trace_map: target must be one-dimensional");
  const auto view = *matrix_alg.matrix_view;
  return GradedMap(
      "cyclic-trace", ChainSpace(matrix_alg), scalars, 0,
      [view, &scalars](int degree, const std::vector<Index>& tuple) {
        Chain out = zero_chain(scalars, degree);
        for (std::size_t t = 0; t < tuple.size(); ++t) {
          const Index next = tuple[(t + 1) % tuple.size()];
          if (view.col(tuple[t]) != view.row(next)) return out;
        }
        out.add_term(0, 1);
        return out;
      });
}

}  // namespace hochlab
