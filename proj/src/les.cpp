#include "hochlab/les.hpp"

#include <stdexcept>
#include <string>

namespace hochlab {

namespace {

GradedMap differential_map(const AlgebraPresentation& a, ComplexKind kind) {
  return kind == ComplexKind::hochschild ? hochschild_map(a) : bar_map(a);
}

SparseVec compact_to(const std::vector<Index>& axes, const SparseVec& v) {
  // v must be supported on the axes (it comes out of SubspaceBasis::reduce,
  // which clears every pivot row).
  SparseVec out;
  std::map<Index, Index> pos;
  for (Index i = 0; i < axes.size(); ++i) pos[axes[i]] = i;
  for (const auto& [r, c] : v.e) {
    auto it = pos.find(r);
    if (it == pos.end())
      throw std::logic_error("quotient compaction: entry off the complement axes");
    out.set(it->second, c);
  }
  return out;
}

}  // namespace

LESWorkspace les_workspace(const ExtensionSpec& ext, ComplexKind kind,
                           int max_degree, Index budget_cols) {
  if (max_degree < 0) throw std::invalid_argument("les: negative degree");
  if (chain_dim(ext.total.dim, max_degree + 1) > budget_cols)
    throw std::length_error("les: total complex exceeds the column budget");

  LESWorkspace ws;
  ws.ext = &ext;
  ws.kind = kind;
  ws.max_degree = max_degree;

  GradedMap da = differential_map(ext.ideal, kind);
  GradedMap db = differential_map(ext.total, kind);
  GradedMap inc = factorwise_map("ideal-embedding", ext.ideal, ext.total,
                                 ext.inclusion);

  for (int n = 0; n <= max_degree + 1; ++n) {
    ws.iota.push_back(materialize(inc, n));
    ws.sub.push_back(SubspaceBasis::column_span(ws.iota.back()));
    if (ws.sub.back().dim() != chain_dim(ext.ideal.dim, n))
      throw std::invalid_argument("les: embedding is not injective at degree " +
                                  std::to_string(n));
    ws.axes.push_back(ws.sub.back().complement_axes());
  }

  // The embedding must be a chain map; otherwise nothing downstream means
  // anything.
  for (int n = 1; n <= max_degree + 1; ++n) {
    SparseMatrix lhs = materialize(db, n).multiply(ws.iota[n]);
    SparseMatrix rhs = ws.iota[n - 1].multiply(materialize(da, n));
    if (!(lhs == rhs))
      throw std::invalid_argument("les: embedding is not a chain map at degree " +
                                  std::to_string(n));
  }

  ws.dq.resize(max_degree + 2);
  for (int n = 1; n <= max_degree + 1; ++n) {
    const SparseMatrix& dbn = materialize(db, n);
    SparseMatrix m(ws.axes[n - 1].size(), ws.axes[n].size());
    for (Index j = 0; j < ws.axes[n].size(); ++j)
      m.col[j] = compact_to(ws.axes[n - 1], ws.sub[n - 1].reduce(dbn.col[ws.axes[n][j]]));
    ws.dq[n] = std::move(m);
  }

  for (int n = 0; n <= max_degree; ++n) {
    const SparseMatrix* out_a = n == 0 ? nullptr : &materialize(da, n);
    const SparseMatrix* out_b = n == 0 ? nullptr : &materialize(db, n);
    const SparseMatrix* out_q = n == 0 ? nullptr : &ws.dq[n];
    ws.ha.push_back(subquotient(chain_dim(ext.ideal.dim, n), out_a, &materialize(da, n + 1)));
    ws.hb.push_back(subquotient(chain_dim(ext.total.dim, n), out_b, &materialize(db, n + 1)));
    ws.hq.push_back(subquotient(ws.axes[n].size(), out_q, &ws.dq[n + 1]));
  }
  return ws;
}

SparseVec quotient_project(const LESWorkspace& ws, int n, const SparseVec& b_vec) {
  return compact_to(ws.axes[n], ws.sub[n].reduce(b_vec));
}

SparseVec quotient_lift(const LESWorkspace& ws, int n, const SparseVec& q_vec) {
  SparseVec out;
  for (const auto& [pos, c] : q_vec.e) out.set(ws.axes[n].at(pos), c);
  return out;
}

SparseVec connecting_class(const LESWorkspace& ws, int n, const SparseVec& b_lift) {
  if (n < 1 || n > ws.max_degree)
    throw std::invalid_argument("connecting_class: degree out of range");
  GradedMap db = differential_map(ws.ext->total, ws.kind);
  SparseVec z = materialize(db, n).apply(b_lift);
  if (!ws.sub[n - 1].contains(z))
    throw std::logic_error("connecting_class: boundary escapes the subcomplex");
  SolveResult sr = solve(ws.iota[n - 1], z);
  if (!sr.feasible)
    throw std::logic_error("connecting_class: boundary not in the embedded image");
  if (n - 1 >= 1) {
    GradedMap da = differential_map(ws.ext->ideal, ws.kind);
    if (!materialize(da, n - 1).apply(sr.x).is_zero())
      throw std::logic_error("connecting_class: unembedded boundary is not a cycle");
  }
  return coords_in_homology(ws.ha[n - 1], sr.x);
}

namespace {

struct NodeMaps {
  const SparseMatrix* incoming = nullptr;
  const SparseMatrix* outgoing = nullptr;  // nullptr means the zero map
  Index node_dim = 0;
};

JunctionCheck check_junction(const std::string& node, int degree, const NodeMaps& maps) {
  JunctionCheck jc;
  jc.node = node;
  jc.degree = degree;
  jc.incoming_rank = rank_and_kernel(*maps.incoming).rank;
  Index outgoing_rank = 0;
  if (maps.outgoing) {
    outgoing_rank = rank_and_kernel(*maps.outgoing).rank;
    jc.composite_zero = maps.outgoing->multiply(*maps.incoming).is_zero();
  }
  jc.outgoing_nullity = maps.node_dim - outgoing_rank;
  jc.exact = jc.composite_zero && jc.incoming_rank == jc.outgoing_nullity;
  return jc;
}

}  // namespace

LESReport les_of_subcomplex(const ExtensionSpec& ext, ComplexKind kind,
                            int max_degree, Index budget_cols) {
  LESWorkspace ws = les_workspace(ext, kind, max_degree, budget_cols);

  LESReport rep;
  rep.kind = kind;
  rep.max_degree = max_degree;
  for (int n = 0; n <= max_degree; ++n) {
    rep.ideal_dims.push_back(ws.ha[n].dim);
    rep.total_dims.push_back(ws.hb[n].dim);
    rep.quotient_dims.push_back(ws.hq[n].dim);
  }

  for (int n = 0; n <= max_degree; ++n) {
    SparseMatrix is(ws.hb[n].dim, ws.ha[n].dim);
    for (Index j = 0; j < ws.ha[n].dim; ++j)
      is.col[j] = coords_in_homology(ws.hb[n], ws.iota[n].apply(ws.ha[n].representatives[j]));
    rep.iota_star.push_back(std::move(is));

    SparseMatrix ps(ws.hq[n].dim, ws.hb[n].dim);
    for (Index j = 0; j < ws.hb[n].dim; ++j)
      ps.col[j] = coords_in_homology(ws.hq[n], quotient_project(ws, n, ws.hb[n].representatives[j]));
    rep.pi_star.push_back(std::move(ps));
  }
  rep.connecting.resize(max_degree + 1);
  for (int n = 1; n <= max_degree; ++n) {
    SparseMatrix cn(ws.ha[n - 1].dim, ws.hq[n].dim);
    for (Index j = 0; j < ws.hq[n].dim; ++j)
      cn.col[j] = connecting_class(ws, n, quotient_lift(ws, n, ws.hq[n].representatives[j]));
    rep.connecting[n] = std::move(cn);
  }

  for (int n = 0; n <= max_degree; ++n) {
    // Ideal node: fed by the connecting map one degree up.
    if (n + 1 <= max_degree) {
      NodeMaps m{&rep.connecting[n + 1], &rep.iota_star[n], ws.ha[n].dim};
      rep.junctions.push_back(check_junction("ideal", n, m));
    }
    {
      NodeMaps m{&rep.iota_star[n], &rep.pi_star[n], ws.hb[n].dim};
      rep.junctions.push_back(check_junction("total", n, m));
    }
    {
      NodeMaps m{&rep.pi_star[n], n >= 1 ? &rep.connecting[n] : nullptr,
                 ws.hq[n].dim};
      rep.junctions.push_back(check_junction("quotient", n, m));
    }
  }
  for (const auto& jc : rep.junctions) rep.exact = rep.exact && jc.exact;
  return rep;
}

ExcisionReport excision_compare(const ExtensionSpec& ext, ComplexKind kind,
                                int max_degree, Index budget_cols) {
  LESWorkspace ws = les_workspace(ext, kind, max_degree, budget_cols);
  GradedMap proj = factorwise_map("quotient-projection", ext.total, ext.quotient,
                                  ext.projection);
  GradedMap dc = differential_map(ext.quotient, kind);

  // The factorwise projection kills the embedded subcomplex, so it descends
  // to the complement coordinates; the descended maps commute with the
  // differentials because the originals do.
  for (int n = 0; n <= max_degree + 1; ++n) {
    const SparseMatrix& pn = materialize(proj, n);
    for (const auto& bvec : ws.sub[n].basis())
      if (!pn.apply(bvec).is_zero())
        throw std::logic_error("excision: projection does not kill the subcomplex");
  }

  ExcisionReport rep;
  rep.kind = kind;
  for (int n = 0; n <= max_degree; ++n) {
    const SparseMatrix& pn = materialize(proj, n);
    const SparseMatrix* out_c = n == 0 ? nullptr : &materialize(dc, n);
    Subquotient hc = subquotient(chain_dim(ext.quotient.dim, n), out_c,
                                 &materialize(dc, n + 1));
    SparseMatrix on_classes(hc.dim, ws.hq[n].dim);
    for (Index j = 0; j < ws.hq[n].dim; ++j) {
      SparseVec lift = quotient_lift(ws, n, ws.hq[n].representatives[j]);
      on_classes.col[j] = coords_in_homology(hc, pn.apply(lift));
    }
    ExcisionDegree ed;
    ed.degree = n;
    ed.quotient_complex_dim = ws.hq[n].dim;
    ed.quotient_algebra_dim = hc.dim;
    ed.iso = ws.hq[n].dim == hc.dim &&
             rank_and_kernel(on_classes).rank == ws.hq[n].dim;
    rep.degrees.push_back(ed);
    rep.all_iso = rep.all_iso && ed.iso;
  }
  return rep;
}

}  // namespace hochlab
