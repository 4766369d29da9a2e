#include "hochlab/averaging.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "hochlab/complexes.hpp"
#include "hochlab/linalg.hpp"

namespace hochlab {
namespace {

void require_same_algebra(const AlgebraPresentation& a,
                          const AlgebraPresentation& b, const char* who) {
  if (a.content_hash != b.content_hash)
    throw std::invalid_argument(std::string(who) +
                                ": objects over different algebras");
}

// Factorwise block amplification with an explicit copy count (the homotopy
// module's amplify always uses the frame's full block count).
Chain amplify_blocks(const ShiftFrame& f, const Chain& c, Index count) {
  std::vector<Element> img(f.ambient.dim);
  for (Index e : corner_basis(f)) {
    Element b;
    b.set(e, 1);
    img[e] = block_amplify(f, b, count);
  }
  Chain out;
  out.alg = &f.ambient;
  out.degree = c.degree;
  for (const auto& [code, coeff] : c.terms) {
    const auto t = decode_tuple(code, f.ambient.dim, c.degree + 1);
    Chain acc = element_chain(f.ambient, img[t[0]]);
    for (std::size_t i = 1; i < t.size(); ++i) acc = tensor_element(acc, img[t[i]]);
    acc.scale(coeff);
    out.axpy(1, acc);
  }
  return out;
}

// (1/blocks) sum_{l<blocks} (sigma_l - d H_l) applied to a corner chain.
// The result is bound to the frame's own ambient presentation; callers
// working over a content-equal algebra object rebind afterwards.
Chain averaged_operator(const ShiftFrame& f, const Chain& c, Index blocks) {
  Chain lc = c;
  lc.alg = &f.ambient;
  Chain acc;
  acc.alg = &f.ambient;
  acc.degree = c.degree;
  for (Index l = 0; l < blocks; ++l) {
    acc.axpy(1, shift_conjugate(f, l, lc));
    acc.axpy(-1, hochschild_differential(insertion_homotopy(f, l, lc)));
  }
  acc.scale(rat_of(1, long(blocks)));
  return acc;
}

Chain local_to_chain(const ChainSpace& cs, int degree, const SparseVec& v,
                     const AlgebraPresentation& bind) {
  Chain out;
  out.alg = &bind;
  out.degree = degree;
  for (const auto& [t, coeff] : v.e) out.add_term(cs.ambient_code(degree, t), coeff);
  return out;
}

void verify_primitive(const CocycleInstance& inst, const Cochain& phi,
                      Index budget, const char* who) {
  if (phi.degree != inst.degree - 1)
    throw std::invalid_argument(std::string(who) + ": primitive degree mismatch");
  require_same_algebra(*inst.alg, *phi.alg, who);
  if (dual_differential(phi, budget).values != inst.d.values)
    throw std::invalid_argument(std::string(who) +
                                ": cochain is not a primitive of the cocycle");
}

}  // namespace

CocycleInstance make_cocycle(const AlgebraPresentation& a, Cochain d,
                             std::string provenance, Index budget_cols) {
  if (d.alg == nullptr) d.alg = &a;
  require_same_algebra(a, *d.alg, "make_cocycle");
  const Cochain dd = dual_differential(d, budget_cols);
  if (!dd.values.empty()) {
    const Index code = dd.values.begin()->first;
    throw std::invalid_argument(
        "make_cocycle: not a cocycle at tuple " +
        tuple_key(decode_tuple(code, a.dim, d.degree + 2)));
  }
  CocycleInstance out;
  out.alg = &a;
  out.degree = d.degree;
  out.d = std::move(d);
  out.provenance = std::move(provenance);
  return out;
}

CocycleInstance coboundary_instance(const AlgebraPresentation& a, int degree,
                                    std::uint64_t seed, Index budget_cols) {
  if (degree < 1)
    throw std::invalid_argument("coboundary_instance: degree must be >= 1");
  std::mt19937_64 rng(seed);
  Cochain psi;
  psi.alg = &a;
  psi.degree = degree - 1;
  const Index span = chain_dim(a.dim, degree - 1);
  const Index entries = std::min<Index>(span, 12);
  for (Index i = 0; i < entries; ++i) {
    const long num = long(rng() % 11) - 5;
    if (num != 0) psi.set(rng() % span, rat_of(num, 1 + long(rng() % 3)));
  }
  if (psi.values.empty()) psi.set(0, 1);
  Cochain d = dual_differential(psi, budget_cols);
  return make_cocycle(a, std::move(d), "random-coboundary", budget_cols);
}

CocycleInstance zero_instance(const AlgebraPresentation& a, int degree) {
  CocycleInstance out;
  out.alg = &a;
  out.degree = degree;
  out.d.alg = &a;
  out.d.degree = degree;
  out.provenance = "zero";
  return out;
}

PrimitiveResult solve_primitive(const CocycleInstance& inst, Index budget_cols) {
  PrimitiveResult out;
  const AlgebraPresentation& a = *inst.alg;
  if (inst.degree == 0) {
    // No cochain group below degree 0; every 0-chain is a cycle.
    if (inst.d.values.empty()) {
      out.feasible = true;
      out.primitive.alg = &a;
      out.primitive.degree = -1;
      return out;
    }
    out.certificate.alg = &a;
    out.certificate.degree = 0;
    out.certificate.add_term(inst.d.values.begin()->first, 1);
    return out;
  }
  if (chain_dim(a.dim, inst.degree) > budget_cols)
    throw std::length_error("solve_primitive: column budget exceeded");
  GradedMap dmap = hochschild_map(a);
  const SolveResult res =
      solve(materialize(dmap, inst.degree).transpose(), cochain_to_vec(inst.d));
  if (res.feasible) {
    out.feasible = true;
    out.primitive = vec_to_cochain(a, inst.degree - 1, res.x);
  } else {
    out.certificate = vec_to_chain(a, inst.degree, res.certificate);
  }
  return out;
}

AveragedPair averaged_functional(const ShiftFrame& f, const Cochain& phi,
                                 Index blocks, Index budget_cols) {
  if (blocks == 0 || blocks > f.N)
    throw std::invalid_argument("averaged_functional: blocks out of range");
  require_same_algebra(f.ambient, *phi.alg, "averaged_functional");
  if (phi.degree < 0)
    throw std::invalid_argument("averaged_functional: negative degree");
  ShiftFrame sub = make_shift_frame(f.k, blocks, f.M - f.k * blocks);
  const ChainSpace cs = corner_space(sub);
  if (cs.dim(phi.degree) > budget_cols)
    throw std::length_error("averaged_functional: column budget exceeded");

  Cochain lphi = phi;
  lphi.alg = &sub.ambient;
  AveragedPair out;
  out.blocks = blocks;
  out.averaged.alg = phi.alg;  // caller's (content-equal) presentation
  out.averaged.degree = phi.degree;
  out.defect.alg = phi.alg;
  out.defect.degree = phi.degree;
  for (Index t = 0; t < cs.dim(phi.degree); ++t) {
    const Chain b = cs.basis(phi.degree, t);
    const Rat avg = lphi.evaluate(averaged_operator(sub, b, blocks));
    const Index code = cs.ambient_code(phi.degree, t);
    out.averaged.set(code, avg);
    out.defect.set(code, lphi.evaluate(b) - avg);
  }
  out.frame = std::move(sub);
  return out;
}

GenerationCheck generation_check(const CocycleInstance& inst,
                                 const AveragedPair& pair, Index budget_cols) {
  const ShiftFrame& f = pair.frame;
  require_same_algebra(*inst.alg, f.ambient, "generation_check");
  require_same_algebra(*inst.alg, *pair.averaged.alg, "generation_check");
  if (inst.degree != pair.averaged.degree + 1)
    throw std::invalid_argument("generation_check: degree mismatch");
  const ChainSpace cs = corner_space(f);
  if (cs.dim(inst.degree) > budget_cols)
    throw std::length_error("generation_check: column budget exceeded");

  Cochain avg_l = pair.averaged;
  avg_l.alg = inst.alg;
  Cochain def_l = pair.defect;
  def_l.alg = inst.alg;
  GenerationCheck out;
  out.blocks = pair.blocks;
  out.substitution = true;
  out.generation = true;
  const Rat inv = rat_of(1, long(pair.blocks));
  for (Index t = 0; t < cs.dim(inst.degree); ++t) {
    Chain b = cs.basis(inst.degree, t);
    b.alg = inst.alg;
    const Chain db = hochschild_differential(b);
    Chain amp = amplify_blocks(f, b, pair.blocks);
    amp.alg = inst.alg;
    const Rat pairing = inst.d.evaluate(amp) * inv;
    const bool sub_ok = avg_l.evaluate(db) == pairing;
    const bool gen_ok = inst.d.evaluate(b) == def_l.evaluate(db) + pairing;
    if ((!sub_ok || !gen_ok) && out.witness.empty())
      out.witness = cs.tuple(inst.degree, t);
    out.substitution = out.substitution && sub_ok;
    out.generation = out.generation && gen_ok;
  }
  return out;
}

DecayReport decay_table(const ShiftFrame& f, const CocycleInstance& inst,
                        const Cochain& phi, const Chain& tau,
                        const std::vector<Index>& block_counts, NormKind kind,
                        Index budget_cols) {
  if (inst.degree < 1)
    throw std::invalid_argument("decay_table: cocycle degree must be >= 1");
  require_same_algebra(*inst.alg, f.ambient, "decay_table");
  if (tau.degree != inst.degree)
    throw std::invalid_argument("decay_table: test chain degree mismatch");
  if (tau.is_zero()) throw std::invalid_argument("decay_table: zero test chain");
  const ChainSpace cs = corner_space(f);
  if (!cs.contains(tau))
    throw std::invalid_argument("decay_table: test chain not corner-supported");
  verify_primitive(inst, phi, budget_cols, "decay_table");
  if (cs.dim(inst.degree) > budget_cols)
    throw std::length_error("decay_table: column budget exceeded");

  DecayReport rep;
  rep.kind = kind;
  rep.degree = inst.degree;
  rep.d_norm = cochain_norm(inst.d, kind).value;
  rep.tau_norm = chain_norm(tau, kind).value;
  rep.all_identities = true;
  rep.all_bounded = true;
  Cochain lphi = phi;
  lphi.alg = inst.alg;
  Chain ltau = tau;
  ltau.alg = inst.alg;
  const Chain dtau = hochschild_differential(ltau);
  for (Index n : block_counts) {
    if (n == 0 || n > f.N)
      throw std::invalid_argument("decay_table: block count outside frame");
    const ShiftFrame sub = make_shift_frame(f.k, n, f.M - f.k * n);
    DecayRow row;
    row.blocks = n;
    Chain acc = averaged_operator(sub, dtau, n);
    acc.alg = inst.alg;
    const Rat avg = lphi.evaluate(acc);
    Chain amp = amplify_blocks(sub, ltau, n);
    amp.alg = inst.alg;
    const Rat pairing = inst.d.evaluate(amp);
    row.averaged_abs = rat_abs(avg);
    row.pairing_abs = rat_abs(pairing);
    row.identity = rat_of(long(n)) * avg == pairing;
    Rat c_n = 0;
    for (Index t = 0; t < cs.dim(inst.degree); ++t) {
      Chain ab = amplify_blocks(sub, cs.basis(inst.degree, t), n);
      ab.alg = inst.alg;
      const Rat v = rat_abs(inst.d.evaluate(ab));
      if (v > c_n) c_n = v;
    }
    row.tuple_constant = c_n;
    row.tuple_bound = c_n * rep.tau_norm;
    row.bounded = row.pairing_abs <= row.tuple_bound;
    rep.all_identities = rep.all_identities && row.identity;
    rep.all_bounded = rep.all_bounded && row.bounded;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

AveragingReport averaging_harness(const CocycleInstance& inst,
                                  const std::vector<Index>& corner_sizes,
                                  NormKind kind, std::uint64_t seed,
                                  Index budget_cols,
                                  const Cochain* primitive_override) {
  if (inst.degree < 1)
    throw std::invalid_argument("averaging_harness: cocycle degree must be >= 1");
  const AlgebraPresentation& a = *inst.alg;
  if (!a.matrix_view)
    throw std::invalid_argument("averaging_harness: ambient must be a matrix algebra");
  if (corner_sizes.empty())
    throw std::invalid_argument("averaging_harness: no corner sizes");
  const Index M = a.matrix_view->m;

  AveragingReport rep;
  rep.provenance = inst.provenance;
  rep.degree = inst.degree;
  rep.kind = kind;
  rep.d_norm = cochain_norm(inst.d, kind).value;

  Cochain phi;
  if (primitive_override) {
    verify_primitive(inst, *primitive_override, budget_cols, "averaging_harness");
    phi = *primitive_override;
  } else {
    PrimitiveResult pr = solve_primitive(inst, budget_cols);
    if (!pr.feasible) {
      rep.obstruction = std::move(pr.certificate);
      return rep;
    }
    phi = std::move(pr.primitive);
  }
  phi.alg = inst.alg;  // canonical presentation for every evaluation below
  rep.primitive_found = true;
  rep.all_identities = true;

  std::vector<Index> ks = corner_sizes;
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());

  const int m = inst.degree - 1;
  std::mt19937_64 rng(seed);
  std::vector<Chain> fixed;
  bool first_cell = true;
  for (Index k : ks) {
    if (k == 0 || k > M)
      throw std::invalid_argument("averaging_harness: corner size outside ambient");
    const Index blocks = M / k;
    const ShiftFrame f = make_shift_frame(k, blocks, M - k * blocks);
    const AveragedPair pair = averaged_functional(f, phi, blocks, budget_cols);
    const GenerationCheck gc = generation_check(inst, pair, budget_cols);

    AveragingCell cell;
    cell.k = k;
    cell.blocks = blocks;
    cell.substitution = gc.substitution;
    cell.generation = gc.generation;
    rep.all_identities = rep.all_identities && gc.substitution && gc.generation;

    const ChainSpace cs = corner_space(f);
    if (cs.dim(m) > budget_cols)
      throw std::length_error("averaging_harness: column budget exceeded");
    std::vector<SparseVec> kernel_local;
    if (m == 0) {
      for (Index t = 0; t < cs.dim(0); ++t) {
        SparseVec axis;
        axis.set(t, 1);
        kernel_local.push_back(std::move(axis));
      }
    } else {
      SparseMatrix dm(chain_dim(a.dim, m - 1), cs.dim(m));
      for (Index t = 0; t < cs.dim(m); ++t)
        dm.col[t] = chain_to_vec(hochschild_differential(cs.basis(m, t)));
      kernel_local = rank_and_kernel(dm).kernel;
    }

    std::vector<Chain> cycles;
    if (kernel_local.size() <= 100) {
      for (const auto& v : kernel_local)
        cycles.push_back(local_to_chain(cs, m, v, a));
    } else {
      for (int s = 0; s < 100; ++s) {
        SparseVec combo;
        for (int part = 0; part < 4; ++part) {
          const long coeff = long(rng() % 7) - 3;
          if (coeff != 0)
            combo.axpy(rat_of(coeff), kernel_local[rng() % kernel_local.size()]);
        }
        if (combo.is_zero()) combo = kernel_local[Index(s) % kernel_local.size()];
        cycles.push_back(local_to_chain(cs, m, combo, a));
      }
    }
    cell.cycles_tested = Index(cycles.size());

    Rat sup = 0;
    for (const Chain& c : cycles) {
      const Rat val =
          rat_abs(pair.defect.evaluate(c)) / chain_norm(c, kind).value;
      if (val > sup) sup = val;
    }
    cell.sup_defect = sup;
    cell.sup_ratio = rep.d_norm == 0 ? Rat(0) : sup / rep.d_norm;

    if (first_cell && !cycles.empty()) {
      const std::size_t fixed_count = std::min<std::size_t>(cycles.size(), 3);
      fixed.assign(cycles.begin(), cycles.begin() + fixed_count);
      rep.stabilization.assign(fixed.size(), {});
    }
    for (std::size_t i = 0; i < fixed.size(); ++i)
      rep.stabilization[i].push_back(pair.defect.evaluate(fixed[i]));
    first_cell = false;

    rep.cells.push_back(std::move(cell));
  }
  return rep;
}

}  // namespace hochlab
