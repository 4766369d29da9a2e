#include "hochlab/homotopy.hpp"

#include <functional>
#include <stdexcept>

#include "hochlab/linalg.hpp"

namespace hochlab {

namespace {

bool corner_index(const ShiftFrame& f, Index e) {
  return e / static_cast<Index>(f.M) < f.k && e % static_cast<Index>(f.M) < f.k;
}

void require_corner(const ShiftFrame& f, const Chain& c, const char* who) {
  if (c.alg == nullptr || c.alg->content_hash != f.ambient.content_hash)
    throw std::invalid_argument(std::string(who) + ": chain is not over the frame ambient");
  for (const auto& [code, v] : c.terms) {
    (void)v;
    for (Index e : decode_tuple(code, f.ambient.dim, c.degree + 1))
      if (!corner_index(f, e))
        throw std::invalid_argument(std::string(who) + ": factor outside the leading corner");
  }
}

void require_block(const ShiftFrame& f, Index l, const char* who) {
  if (l >= f.N) throw std::out_of_range(std::string(who) + ": block index out of range");
}

// Images of the corner basis elements under conjugation by l block steps and
// under amplification; non-corner slots stay empty.
std::vector<Element> sigma_table(const ShiftFrame& f, Index l) {
  std::vector<Element> img(f.ambient.dim);
  const Element s = shift_power(f, l * f.k);
  const Element r = coshift_power(f, l * f.k);
  for (Index e : corner_basis(f)) {
    Element b;
    b.set(e, rat_of(1));
    img[e] = multiply(f.ambient, multiply(f.ambient, s, b), r);
  }
  return img;
}

std::vector<Element> amplify_table(const ShiftFrame& f) {
  std::vector<Element> img(f.ambient.dim);
  for (Index e : corner_basis(f)) {
    Element b;
    b.set(e, rat_of(1));
    img[e] = block_amplify(f, b, f.N);
  }
  return img;
}

// Push every factor of c through the per-basis-element image table.
Chain factorwise(const AlgebraPresentation& amb, const std::vector<Element>& img,
                 const Chain& c) {
  Chain out = zero_chain(amb, c.degree);
  for (const auto& [code, v] : c.terms) {
    const auto t = decode_tuple(code, amb.dim, c.degree + 1);
    Chain acc = element_chain(amb, img[t[0]]);
    for (std::size_t p = 1; p < t.size(); ++p) acc = tensor_element(acc, img[t[p]]);
    out.axpy(v, acc);
  }
  return out;
}

// One tuple through the slot-i insertion: conjugated prefix, the block
// projection, amplified suffix.
Chain insert_tuple(const ShiftFrame& f, const std::vector<Element>& sig,
                   const std::vector<Element>& amp, Index l, int i,
                   const std::vector<Index>& t) {
  Chain acc = element_chain(f.ambient, sig[t[0]]);
  for (int p = 1; p <= i; ++p) acc = tensor_element(acc, sig[t[p]]);
  acc = tensor_element(acc, f.P[l]);
  for (int p = i + 1; p < static_cast<int>(t.size()); ++p)
    acc = tensor_element(acc, amp[t[p]]);
  return acc;
}

// Conjugated first factor, amplified tail.
Chain front_tuple(const ShiftFrame& f, const std::vector<Element>& sig,
                  const std::vector<Element>& amp, const std::vector<Index>& t) {
  Chain acc = element_chain(f.ambient, sig[t[0]]);
  for (std::size_t p = 1; p < t.size(); ++p) acc = tensor_element(acc, amp[t[p]]);
  return acc;
}

void check_cols(Index base, int factors, Index budget, const char* who) {
  if (chain_dim(base, factors - 1) > budget)
    throw std::length_error(std::string(who) + ": tuple space of " +
                            std::to_string(factors) + " factors over dimension " +
                            std::to_string(base) + " exceeds the column budget");
}

using ChainFn = std::function<Chain(const Chain&)>;

// Materialize both sides over the source basis at in_degree and compare
// exactly; on mismatch re-evaluate the first failing column pointwise.
HomotopyVerdict compare_sides(std::string id, std::map<std::string, Index> params,
                              const ChainSpace& cs, int in_degree, int out_degree,
                              const ChainFn& lhs, const ChainFn& rhs) {
  const AlgebraPresentation& alg = cs.algebra();
  const Index cols = cs.dim(in_degree);
  SparseMatrix left(chain_dim(alg.dim, out_degree), cols);
  SparseMatrix right(left.rows, cols);
  for (Index t = 0; t < cols; ++t) {
    left.col[t] = chain_to_vec(lhs(cs.basis(in_degree, t)));
    right.col[t] = chain_to_vec(rhs(cs.basis(in_degree, t)));
  }

  HomotopyVerdict v;
  v.identity = std::move(id);
  v.parameters = std::move(params);
  if (left == right) {
    v.pass = true;
    v.residual = zero_chain(alg, out_degree);
    return v;
  }
  for (Index t = 0; t < cols; ++t) {
    if (left.col[t] == right.col[t]) continue;
    const Chain b = cs.basis(in_degree, t);
    Chain res = lhs(b);
    res.axpy(rat_of(-1), rhs(b));
    if (res.is_zero())
      throw std::logic_error("identity check: columns differ but the residual re-evaluates to zero");
    v.pass = false;
    v.witness = cs.tuple(in_degree, t);
    v.residual = std::move(res);
    return v;
  }
  throw std::logic_error("identity check: matrices differ but no column does");
}

std::map<std::string, Index> frame_params(const ShiftFrame& f, int degree) {
  return {{"k", f.k}, {"N", f.N}, {"degree", static_cast<Index>(degree)}};
}

}  // namespace

Chain shift_conjugate(const ShiftFrame& f, Index l, const Chain& c) {
  require_block(f, l, "shift_conjugate");
  require_corner(f, c, "shift_conjugate");
  return factorwise(f.ambient, sigma_table(f, l), c);
}

Chain amplify(const ShiftFrame& f, const Chain& c) {
  require_corner(f, c, "amplify");
  return factorwise(f.ambient, amplify_table(f), c);
}

Chain insert_projection(const ShiftFrame& f, Index l, int i, const Chain& c) {
  require_block(f, l, "insert_projection");
  require_corner(f, c, "insert_projection");
  if (i < 0 || i > c.degree)
    throw std::out_of_range("insert_projection: slot index out of range");
  const auto sig = sigma_table(f, l);
  const auto amp = amplify_table(f);
  Chain out = zero_chain(f.ambient, c.degree + 1);
  for (const auto& [code, v] : c.terms)
    out.axpy(v, insert_tuple(f, sig, amp, l, i, decode_tuple(code, f.ambient.dim, c.degree + 1)));
  return out;
}

Chain insertion_homotopy(const ShiftFrame& f, Index l, const Chain& c) {
  require_block(f, l, "insertion_homotopy");
  require_corner(f, c, "insertion_homotopy");
  const auto sig = sigma_table(f, l);
  const auto amp = amplify_table(f);
  Chain out = zero_chain(f.ambient, c.degree + 1);
  for (const auto& [code, v] : c.terms) {
    const auto t = decode_tuple(code, f.ambient.dim, c.degree + 1);
    for (int i = 0; i <= c.degree; ++i) {
      const Rat sign = (i % 2 == 0) ? -v : v;
      out.axpy(sign, insert_tuple(f, sig, amp, l, i, t));
    }
  }
  return out;
}

GradedMap shift_conjugation_map(const ShiftFrame& f, Index l) {
  require_block(f, l, "shift_conjugation_map");
  const AlgebraPresentation& amb = f.ambient;
  auto img = sigma_table(f, l);
  return GradedMap(
      "shift-conjugation[" + std::to_string(l) + "]", corner_space(f), amb, 0,
      [&amb, img](int, const std::vector<Index>& t) {
        Chain acc = element_chain(amb, img[t[0]]);
        for (std::size_t p = 1; p < t.size(); ++p) acc = tensor_element(acc, img[t[p]]);
        return acc;
      });
}

GradedMap amplification_map(const ShiftFrame& f) {
  const AlgebraPresentation& amb = f.ambient;
  auto img = amplify_table(f);
  return GradedMap("block-amplification", corner_space(f), amb, 0,
                   [&amb, img](int, const std::vector<Index>& t) {
                     Chain acc = element_chain(amb, img[t[0]]);
                     for (std::size_t p = 1; p < t.size(); ++p)
                       acc = tensor_element(acc, img[t[p]]);
                     return acc;
                   });
}

GradedMap insertion_homotopy_map(const ShiftFrame& f, Index l) {
  require_block(f, l, "insertion_homotopy_map");
  auto sig = sigma_table(f, l);
  auto amp = amplify_table(f);
  return GradedMap("insertion-homotopy[" + std::to_string(l) + "]", corner_space(f),
                   f.ambient, 1, [&f, l, sig, amp](int degree, const std::vector<Index>& t) {
                     Chain out = zero_chain(f.ambient, degree + 1);
                     for (int i = 0; i <= degree; ++i)
                       out.axpy(rat_of(i % 2 == 0 ? -1 : 1),
                                insert_tuple(f, sig, amp, l, i, t));
                     return out;
                   });
}

GradedMap summed_insertion_homotopy_map(const ShiftFrame& f) {
  std::vector<std::vector<Element>> sigs;
  for (Index l = 0; l < f.N; ++l) sigs.push_back(sigma_table(f, l));
  auto amp = amplify_table(f);
  return GradedMap("summed-insertion-homotopy", corner_space(f), f.ambient, 1,
                   [&f, sigs, amp](int degree, const std::vector<Index>& t) {
                     Chain out = zero_chain(f.ambient, degree + 1);
                     for (Index l = 0; l < f.N; ++l)
                       for (int i = 0; i <= degree; ++i)
                         out.axpy(rat_of(i % 2 == 0 ? -1 : 1),
                                  insert_tuple(f, sigs[l], amp, l, i, t));
                     return out;
                   });
}

GradedMap front_factor_map(const ShiftFrame& f, Index l) {
  require_block(f, l, "front_factor_map");
  auto sig = sigma_table(f, l);
  auto amp = amplify_table(f);
  return GradedMap("front-factor[" + std::to_string(l) + "]", corner_space(f), f.ambient,
                   0, [&f, sig, amp](int, const std::vector<Index>& t) {
                     return front_tuple(f, sig, amp, t);
                   });
}

GradedMap commutator_insertion(const AlgebraPresentation& a, const Element& h) {
  std::vector<Element> comm(a.dim);
  for (Index e = 0; e < a.dim; ++e) {
    Element b;
    b.set(e, rat_of(1));
    comm[e] = multiply(a, h, b);
    comm[e].axpy(rat_of(-1), multiply(a, b, h));
  }
  return GradedMap("commutator-insertion", ChainSpace(a), a, 0,
                   [&a, comm](int degree, const std::vector<Index>& t) {
                     Chain out = zero_chain(a, degree);
                     for (std::size_t p = 0; p < t.size(); ++p) {
                       for (const auto& [idx, cv] : comm[t[p]].e) {
                         std::vector<Index> u = t;
                         u[p] = idx;
                         out.add_term(encode_tuple(u, a.dim), cv);
                       }
                     }
                     return out;
                   });
}

GradedMap element_insertion(const AlgebraPresentation& a, const Element& h) {
  return GradedMap("element-insertion", ChainSpace(a), a, 1,
                   [&a, h](int degree, const std::vector<Index>& t) {
                     Chain out = zero_chain(a, degree + 1);
                     for (int slot = 0; slot <= degree; ++slot) {
                       const Rat sign = rat_of(slot % 2 == 0 ? -1 : 1);
                       for (const auto& [idx, hv] : h.e) {
                         std::vector<Index> u;
                         u.reserve(t.size() + 1);
                         u.insert(u.end(), t.begin(), t.begin() + slot + 1);
                         u.push_back(idx);
                         u.insert(u.end(), t.begin() + slot + 1, t.end());
                         out.add_term(encode_tuple(u, a.dim), sign * hv);
                       }
                     }
                     return out;
                   });
}

GradedMap splitting_homotopy(const SplittingData& split) {
  const AlgebraPresentation& a = *split.alg;
  return GradedMap("splitting-homotopy[" + std::to_string(split.pivot) + "]",
                   ChainSpace(a), a, 1, [&a, split](int, const std::vector<Index>& t) {
                     Element b;
                     b.set(t[0], rat_of(1));
                     Chain acc = apply_splitting(split, b);
                     for (std::size_t p = 1; p < t.size(); ++p) {
                       Element x;
                       x.set(t[p], rat_of(1));
                       acc = tensor_element(acc, x);
                     }
                     return acc;
                   });
}

HomotopyVerdict shift_chain_map_check(const ShiftFrame& f, Index l, int degree,
                                      Index budget_cols) {
  require_block(f, l, "shift_chain_map_check");
  if (degree < 1) throw std::invalid_argument("shift_chain_map_check: degree must be >= 1");
  check_cols(f.k * f.k, degree + 2, budget_cols, "shift_chain_map_check");
  auto params = frame_params(f, degree);
  params["l"] = l;
  const ChainSpace cs = corner_space(f);
  ChainFn lhs = [&](const Chain& b) { return hochschild_differential(shift_conjugate(f, l, b)); };
  ChainFn rhs = [&](const Chain& b) { return shift_conjugate(f, l, hochschild_differential(b)); };
  return compare_sides("shift-conjugation-chain-map", std::move(params), cs, degree,
                       degree - 1, lhs, rhs);
}

HomotopyVerdict amplify_chain_map_check(const ShiftFrame& f, int degree, Index budget_cols) {
  if (degree < 1) throw std::invalid_argument("amplify_chain_map_check: degree must be >= 1");
  check_cols(f.k * f.k, degree + 2, budget_cols, "amplify_chain_map_check");
  const ChainSpace cs = corner_space(f);
  ChainFn lhs = [&](const Chain& b) { return hochschild_differential(amplify(f, b)); };
  ChainFn rhs = [&](const Chain& b) { return amplify(f, hochschild_differential(b)); };
  return compare_sides("amplify-chain-map", frame_params(f, degree), cs, degree,
                       degree - 1, lhs, rhs);
}

HomotopyVerdict face_relations_check(const ShiftFrame& f, Index l, int degree,
                                     Index budget_cols) {
  require_block(f, l, "face_relations_check");
  if (degree < 0) throw std::invalid_argument("face_relations_check: degree must be >= 0");
  check_cols(f.k * f.k, degree + 2, budget_cols, "face_relations_check");
  const ChainSpace cs = corner_space(f);
  const auto sig = sigma_table(f, l);
  const auto amp = amplify_table(f);

  for (int i = 0; i <= degree + 1; ++i) {
    for (int j = 0; j <= degree; ++j) {
      ChainFn lhs = [&, i, j](const Chain& b) {
        return face_map(insert_projection(f, l, j, b), i);
      };
      ChainFn rhs;
      if (i == 0 && j == 0) {
        rhs = [&](const Chain& b) {
          Chain out = zero_chain(f.ambient, b.degree);
          for (const auto& [code, v] : b.terms)
            out.axpy(v, front_tuple(f, sig, amp,
                                    decode_tuple(code, f.ambient.dim, b.degree + 1)));
          return out;
        };
      } else if (i == degree + 1 && j == degree) {
        rhs = [&](const Chain& b) { return shift_conjugate(f, l, b); };
      } else if (i < j) {
        rhs = [&, i, j](const Chain& b) {
          return insert_projection(f, l, j - 1, face_map(b, i));
        };
      } else if (i == j) {
        rhs = [&, j](const Chain& b) { return face_map(insert_projection(f, l, j - 1, b), j); };
      } else if (i == j + 1) {
        continue;  // same relation as (i, i), or the wrap boundary above
      } else {
        rhs = [&, i, j](const Chain& b) {
          return insert_projection(f, l, j, face_map(b, i - 1));
        };
      }
      auto params = frame_params(f, degree);
      params["l"] = l;
      params["face"] = static_cast<Index>(i);
      params["slot"] = static_cast<Index>(j);
      HomotopyVerdict v = compare_sides("face-insertion-relations", std::move(params), cs,
                                        degree, degree, lhs, rhs);
      if (!v.pass) return v;
    }
  }
  auto params = frame_params(f, degree);
  params["l"] = l;
  HomotopyVerdict v;
  v.identity = "face-insertion-relations";
  v.parameters = std::move(params);
  v.pass = true;
  v.residual = zero_chain(f.ambient, degree);
  return v;
}

namespace {

HomotopyVerdict insertion_core(const ShiftFrame& f, Index l, int degree,
                               const GradedMap* candidate, Index budget_cols) {
  require_block(f, l, "insertion_homotopy_check");
  if (degree < 0)
    throw std::invalid_argument("insertion_homotopy_check: degree must be >= 0");
  check_cols(f.k * f.k, degree + 2, budget_cols, "insertion_homotopy_check");
  const ChainSpace cs = corner_space(f);
  const auto sig = sigma_table(f, l);
  const auto amp = amplify_table(f);
  auto apply_h = [&](const Chain& c) {
    return candidate ? candidate->apply(c) : insertion_homotopy(f, l, c);
  };
  ChainFn lhs = [&](const Chain& b) { return shift_conjugate(f, l, b); };
  ChainFn rhs = [&](const Chain& b) {
    Chain out = zero_chain(f.ambient, b.degree);
    for (const auto& [code, v] : b.terms)
      out.axpy(v, front_tuple(f, sig, amp, decode_tuple(code, f.ambient.dim, b.degree + 1)));
    out.axpy(rat_of(1), hochschild_differential(apply_h(b)));
    if (b.degree >= 1) out.axpy(rat_of(1), apply_h(hochschild_differential(b)));
    return out;
  };
  auto params = frame_params(f, degree);
  params["l"] = l;
  return compare_sides("insertion-homotopy", std::move(params), cs, degree, degree, lhs, rhs);
}

HomotopyVerdict amplify_core(const ShiftFrame& f, int degree, const GradedMap* candidate,
                             Index budget_cols) {
  if (degree < 0)
    throw std::invalid_argument("amplify_homotopy_check: degree must be >= 0");
  check_cols(f.k * f.k, degree + 2, budget_cols, "amplify_homotopy_check");
  const ChainSpace cs = corner_space(f);
  auto apply_h = [&](const Chain& c) {
    if (candidate) return candidate->apply(c);
    Chain out = zero_chain(f.ambient, c.degree + 1);
    for (Index l = 0; l < f.N; ++l) out.axpy(rat_of(1), insertion_homotopy(f, l, c));
    return out;
  };
  ChainFn lhs = [&](const Chain& b) {
    Chain out = zero_chain(f.ambient, b.degree);
    for (Index l = 0; l < f.N; ++l) out.axpy(rat_of(1), shift_conjugate(f, l, b));
    return out;
  };
  ChainFn rhs = [&](const Chain& b) {
    Chain out = amplify(f, b);
    out.axpy(rat_of(1), hochschild_differential(apply_h(b)));
    if (b.degree >= 1) out.axpy(rat_of(1), apply_h(hochschild_differential(b)));
    return out;
  };
  return compare_sides("amplify-homotopy", frame_params(f, degree), cs, degree, degree,
                       lhs, rhs);
}

}  // namespace

HomotopyVerdict insertion_homotopy_check(const ShiftFrame& f, Index l, int degree,
                                         Index budget_cols) {
  return insertion_core(f, l, degree, nullptr, budget_cols);
}

HomotopyVerdict insertion_homotopy_check(const ShiftFrame& f, Index l, int degree,
                                         const GradedMap& homotopy, Index budget_cols) {
  return insertion_core(f, l, degree, &homotopy, budget_cols);
}

HomotopyVerdict amplify_homotopy_check(const ShiftFrame& f, int degree, Index budget_cols) {
  return amplify_core(f, degree, nullptr, budget_cols);
}

HomotopyVerdict amplify_homotopy_check(const ShiftFrame& f, int degree,
                                       const GradedMap& homotopy, Index budget_cols) {
  return amplify_core(f, degree, &homotopy, budget_cols);
}

HomotopyVerdict averaged_boundary_check(const ShiftFrame& f, int degree, Index budget_cols) {
  if (degree < 1)
    throw std::invalid_argument("averaged_boundary_check: degree must be >= 1");
  check_cols(f.k * f.k, degree + 2, budget_cols, "averaged_boundary_check");
  const ChainSpace cs = corner_space(f);
  const Rat inv_n = rat_of(1, f.N);
  ChainFn lhs = [&](const Chain& b) {
    const Chain db = hochschild_differential(b);
    Chain out = zero_chain(f.ambient, b.degree - 1);
    for (Index l = 0; l < f.N; ++l) {
      out.axpy(inv_n, shift_conjugate(f, l, db));
      out.axpy(-inv_n, hochschild_differential(insertion_homotopy(f, l, db)));
    }
    return out;
  };
  ChainFn rhs = [&](const Chain& b) {
    Chain out = hochschild_differential(amplify(f, b));
    out.scale(inv_n);
    return out;
  };
  return compare_sides("averaged-boundary-identity", frame_params(f, degree), cs, degree,
                       degree - 1, lhs, rhs);
}

HomotopyVerdict commutator_homotopy_check(const AlgebraPresentation& a, const Element& h,
                                          int degree, Index budget_cols) {
  if (degree < 0)
    throw std::invalid_argument("commutator_homotopy_check: degree must be >= 0");
  check_cols(a.dim, degree + 2, budget_cols, "commutator_homotopy_check");
  const GradedMap gamma = commutator_insertion(a, h);
  const GradedMap ins = element_insertion(a, h);
  const ChainSpace cs(a);
  ChainFn lhs = [&](const Chain& b) { return gamma.apply(b); };
  ChainFn rhs = [&](const Chain& b) {
    Chain out = hochschild_differential(ins.apply(b));
    if (b.degree >= 1) out.axpy(rat_of(1), ins.apply(hochschild_differential(b)));
    return out;
  };
  return compare_sides("commutator-null-homotopy",
                       {{"degree", static_cast<Index>(degree)}}, cs, degree, degree, lhs,
                       rhs);
}

HomotopyVerdict contraction_check(const GradedMap& homotopy, ComplexKind kind, int degree,
                                  Index budget_cols) {
  if (homotopy.shift() != 1)
    throw std::invalid_argument("contraction_check: candidate must be a grade +1 map");
  if (degree < 0) throw std::invalid_argument("contraction_check: degree must be >= 0");
  if (degree == 0 && kind == ComplexKind::hochschild)
    throw std::invalid_argument(
        "contraction_check: the degree-0 statement only exists for the bar differential");
  const ChainSpace& cs = homotopy.source();
  check_cols(cs.basis_size(), degree + 2, budget_cols, "contraction_check");
  auto dd = [kind](const Chain& c) {
    return kind == ComplexKind::bar ? bar_differential(c) : hochschild_differential(c);
  };
  ChainFn lhs = [&](const Chain& b) {
    Chain out = dd(homotopy.apply(b));
    if (b.degree >= 1) out.axpy(rat_of(1), homotopy.apply(dd(b)));
    return out;
  };
  ChainFn rhs = [](const Chain& b) { return b; };
  std::map<std::string, Index> params = {{"degree", static_cast<Index>(degree)},
                                         {"bar", kind == ComplexKind::bar ? Index{1} : Index{0}}};
  return compare_sides("splitting-contraction", std::move(params), cs, degree, degree, lhs,
                       rhs);
}

HomotopyVerdict splitting_contraction_check(const SplittingData& split, ComplexKind kind,
                                            int degree, Index budget_cols) {
  const GradedMap h = splitting_homotopy(split);
  HomotopyVerdict v = contraction_check(h, kind, degree, budget_cols);
  v.parameters["pivot"] = split.pivot;
  return v;
}

Chain shift_boundary_witness(const ShiftFrame& f, Index l, const Chain& cycle,
                             Index budget_cols) {
  require_block(f, l, "shift_boundary_witness");
  require_corner(f, cycle, "shift_boundary_witness");
  const int n = cycle.degree;
  if (n >= 1 && !hochschild_differential(cycle).is_zero())
    throw std::invalid_argument("shift_boundary_witness: input is not a cycle");
  check_cols(f.ambient.dim, n + 2, budget_cols, "shift_boundary_witness");

  Chain target = shift_conjugate(f, l, cycle);
  target.axpy(rat_of(-1), cycle);
  const GradedMap d = hochschild_map(f.ambient);
  SolveResult res = solve(materialize(d, n + 1), chain_to_vec(target));
  if (!res.feasible)
    throw std::logic_error(
        "shift_boundary_witness: conjugated cycle is not homologous to the cycle");
  return vec_to_chain(f.ambient, n + 1, res.x);
}

HomotopyVerdict shift_boundary_check(const ShiftFrame& f, Index l, const Chain& cycle,
                                     Index budget_cols) {
  Chain w = shift_boundary_witness(f, l, cycle, budget_cols);
  Chain res = hochschild_differential(w);
  res.axpy(rat_of(-1), shift_conjugate(f, l, cycle));
  res.axpy(rat_of(1), cycle);

  HomotopyVerdict v;
  v.identity = "shift-boundary-membership";
  v.parameters = frame_params(f, cycle.degree);
  v.parameters["l"] = l;
  v.pass = res.is_zero();
  if (!v.pass) v.residual = std::move(res);
  else v.residual = zero_chain(f.ambient, cycle.degree);
  return v;
}

std::vector<HomotopyVerdict> verify_shift_identities(const ShiftFrame& f, int max_degree,
                                                     Index budget_cols) {
  if (max_degree < 1)
    throw std::invalid_argument("verify_shift_identities: max degree must be >= 1");
  std::vector<HomotopyVerdict> out;
  for (int n = 1; n <= max_degree; ++n) {
    for (Index l = 0; l < f.N; ++l) out.push_back(shift_chain_map_check(f, l, n, budget_cols));
    out.push_back(amplify_chain_map_check(f, n, budget_cols));
    for (Index l = 0; l < f.N; ++l) out.push_back(face_relations_check(f, l, n, budget_cols));
    for (Index l = 0; l < f.N; ++l)
      out.push_back(insertion_homotopy_check(f, l, n, budget_cols));
    out.push_back(amplify_homotopy_check(f, n, budget_cols));
    out.push_back(averaged_boundary_check(f, n, budget_cols));
  }

  // Boundary membership of conjugated corner cycles, where the ambient solve
  // fits the budget: up to two canonical kernel cycles per block and degree.
  const ChainSpace cs = corner_space(f);
  for (int n = 1; n <= max_degree; ++n) {
    if (chain_dim(f.ambient.dim, n + 1) > budget_cols) continue;
    SparseMatrix m(chain_dim(f.ambient.dim, n - 1), cs.dim(n));
    for (Index t = 0; t < cs.dim(n); ++t)
      m.col[t] = chain_to_vec(hochschild_differential(cs.basis(n, t)));
    const RankKernel rk = rank_and_kernel(m);
    for (Index l = 1; l < f.N; ++l) {
      std::size_t used = 0;
      for (const SparseVec& kv : rk.kernel) {
        if (used++ == 2) break;
        Chain z = zero_chain(f.ambient, n);
        for (const auto& [pos, v] : kv.e) z.axpy(v, cs.basis(n, pos));
        out.push_back(shift_boundary_check(f, l, z, budget_cols));
      }
    }
  }
  return out;
}

}  // namespace hochlab
