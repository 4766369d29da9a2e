#include "hochlab/norms.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

namespace hochlab {
namespace {

const AlgebraPresentation::MatrixView& require_view(
    const AlgebraPresentation& a, const char* who) {
  if (!a.matrix_view)
    throw std::invalid_argument(std::string(who) +
                                ": algebra has no matrix view");
  return *a.matrix_view;
}

Rat axis_max_abs_sum(const AlgebraPresentation::MatrixView& v,
                     const Element& x, bool by_row) {
  std::map<Index, Rat> sums;
  for (const auto& [b, val] : x.e) sums[by_row ? v.row(b) : v.col(b)] += rat_abs(val);
  Rat best = 0;
  for (const auto& [axis, s] : sums) {
    (void)axis;
    if (s > best) best = s;
  }
  return best;
}

// Converged Rayleigh quotient of A^T A.  The start vector is fixed (no RNG)
// so repeated runs produce identical doubles.
double rayleigh_top(const AlgebraPresentation::MatrixView& v,
                    const Element& x) {
  const Index m = v.m;
  std::vector<double> a(m * m, 0.0);
  for (const auto& [b, val] : x.e) a[b] = val.get_d();

  std::vector<double> vec(m), w(m), z(m);
  double nrm = 0.0;
  for (Index i = 0; i < m; ++i) {
    vec[i] = 1.0 + double(i) / double(2 * m);
    nrm += vec[i] * vec[i];
  }
  nrm = std::sqrt(nrm);
  for (auto& c : vec) c /= nrm;

  double lam = 0.0;
  for (int it = 0; it < 10000; ++it) {
    for (Index r = 0; r < m; ++r) {
      double s = 0.0;
      for (Index c = 0; c < m; ++c) s += a[r * m + c] * vec[c];
      w[r] = s;
    }
    for (Index c = 0; c < m; ++c) {
      double s = 0.0;
      for (Index r = 0; r < m; ++r) s += a[r * m + c] * w[r];
      z[c] = s;
    }
    lam = 0.0;
    for (Index i = 0; i < m; ++i) lam += vec[i] * z[i];
    double res = 0.0, zn = 0.0;
    for (Index i = 0; i < m; ++i) {
      const double d = z[i] - lam * vec[i];
      res += d * d;
      zn += z[i] * z[i];
    }
    if (zn == 0.0) return 0.0;
    zn = std::sqrt(zn);
    for (Index i = 0; i < m; ++i) vec[i] = z[i] / zn;
    if (std::sqrt(res) <= 1e-14 * std::max(lam, 1.0)) break;
  }
  return std::max(lam, 0.0);
}

bool ratio_is_one(const NormValue& r, double tol) {
  return r.exact ? r.value == 1 : std::abs(r.approx - 1.0) <= tol;
}

bool ratio_less(const NormValue& a, const NormValue& b) {
  if (a.exact && b.exact) return a.value < b.value;
  return a.approx < b.approx;
}

NormRatioReport finish(NormRatioReport rep) {
  rep.all_one = true;
  bool first = true;
  for (const auto& row : rep.rows) {
    rep.all_one = rep.all_one && ratio_is_one(row.ratio, rep.tolerance);
    if (first || ratio_less(rep.max_ratio, row.ratio)) {
      rep.max_ratio = row.ratio;
      rep.arg_max = row.label;
      first = false;
    }
  }
  return rep;
}

}  // namespace

const char* norm_name(NormKind kind) {
  switch (kind) {
    case NormKind::l1:
      return "l1";
    case NormKind::linf:
      return "linf";
    case NormKind::l2:
      return "l2";
  }
  throw std::logic_error("norm_name: bad kind");
}

NormKind parse_norm_kind(const std::string& name) {
  if (name == "l1") return NormKind::l1;
  if (name == "linf") return NormKind::linf;
  if (name == "l2") return NormKind::l2;
  throw std::invalid_argument("unknown norm kind: " + name);
}

NormValue exact_norm(const Rat& v) {
  NormValue out;
  out.exact = true;
  out.value = v;
  out.approx = v.get_d();
  out.error_bound = 0.0;
  return out;
}

NormValue numeric_norm(double v, double error_bound) {
  NormValue out;
  out.exact = false;
  out.approx = v;
  out.error_bound = error_bound;
  return out;
}

NormValue norm_ratio(const NormValue& num, const NormValue& den) {
  if (num.exact && den.exact) {
    if (den.value == 0) throw std::invalid_argument("norm_ratio: zero denominator");
    return exact_norm(num.value / den.value);
  }
  if (den.approx <= 0.0) throw std::invalid_argument("norm_ratio: zero denominator");
  const double center = num.approx / den.approx;
  const double hi = (num.approx + num.error_bound) / den.approx;
  const double lo = num.approx / (den.approx + den.error_bound);
  return numeric_norm(center, std::max(hi - lo, 0.0));
}

NormValue matrix_norm(const AlgebraPresentation& a, const Element& x,
                      NormKind kind) {
  const auto& v = require_view(a, "matrix_norm");
  switch (kind) {
    case NormKind::l1:
      return exact_norm(axis_max_abs_sum(v, x, false));
    case NormKind::linf:
      return exact_norm(axis_max_abs_sum(v, x, true));
    case NormKind::l2: {
      if (x.is_zero()) return numeric_norm(0.0, 0.0);
      const double lower = std::sqrt(rayleigh_top(v, x));
      // ||A||_2^2 <= ||A||_1 ||A||_inf, an exact bracket for the enclosure.
      const Rat cross = axis_max_abs_sum(v, x, false) * axis_max_abs_sum(v, x, true);
      const double upper = std::sqrt(cross.get_d());
      return numeric_norm(lower, std::max(upper - lower, 0.0));
    }
  }
  throw std::logic_error("matrix_norm: bad kind");
}

Rat factor_norm(const AlgebraPresentation& a, Index basis) {
  if (basis >= a.dim) throw std::out_of_range("factor_norm: basis out of range");
  if (a.matrix_view) return 1;
  if (a.norm_assignment) {
    auto it = a.norm_assignment->find(basis);
    if (it != a.norm_assignment->end()) return it->second;
  }
  return 1;
}

NormValue chain_norm(const Chain& c, NormKind kind) {
  (void)kind;  // factor norms agree across kinds on unit-norm bases
  Rat total = 0;
  const int factors = c.degree + 1;
  for (const auto& [code, coeff] : c.terms) {
    Rat p = rat_abs(coeff);
    for (Index b : decode_tuple(code, c.alg->dim, factors))
      p *= factor_norm(*c.alg, b);
    total += p;
  }
  return exact_norm(total);
}

NormValue cochain_norm(const Cochain& f, NormKind kind) {
  (void)kind;
  Rat best = 0;
  const int factors = f.degree + 1;
  for (const auto& [code, val] : f.values) {
    Rat denom = 1;
    for (Index b : decode_tuple(code, f.alg->dim, factors))
      denom *= factor_norm(*f.alg, b);
    if (denom == 0)
      throw std::invalid_argument("cochain_norm: zero factor norm");
    const Rat q = rat_abs(val) / denom;
    if (q > best) best = q;
  }
  return exact_norm(best);
}

NormRatioReport amplification_isometry(const ShiftFrame& f, const Element& a,
                                       Index max_copies, NormKind kind) {
  if (!in_corner(f, a))
    throw std::invalid_argument(
        "amplification_isometry: element not corner-supported");
  if (a.is_zero())
    throw std::invalid_argument("amplification_isometry: zero element");
  if (max_copies == 0)
    throw std::invalid_argument("amplification_isometry: need a copy count");

  NormRatioReport rep;
  rep.check = "amplification-isometry";
  rep.kind = kind;
  rep.tolerance = kind == NormKind::l2 ? 1e-9 : 0.0;
  const NormValue base = matrix_norm(f.ambient, a, kind);
  for (Index n = 1; n <= max_copies; ++n) {
    NormRatioRow row;
    row.label = n;
    row.lhs = matrix_norm(f.ambient, block_amplify(f, a, n), kind);
    row.rhs = base;
    row.ratio = norm_ratio(row.lhs, row.rhs);
    rep.rows.push_back(std::move(row));
  }
  return finish(std::move(rep));
}

NormRatioReport permutation_isometry(const AlgebraPresentation& a,
                                     const std::vector<SignedPermutation>& us,
                                     const std::vector<Element>& as,
                                     NormKind kind) {
  require_view(a, "permutation_isometry");
  if (us.size() != as.size())
    throw std::invalid_argument("permutation_isometry: sample size mismatch");

  NormRatioReport rep;
  rep.check = "permutation-isometry";
  rep.kind = kind;
  rep.tolerance = kind == NormKind::l2 ? 1e-9 : 0.0;
  for (std::size_t i = 0; i < us.size(); ++i) {
    if (as[i].is_zero())
      throw std::invalid_argument("permutation_isometry: zero sample element");
    const Element u = us[i].to_element(a);
    const NormValue base = matrix_norm(a, as[i], kind);
    const Element sides[2] = {multiply(a, u, as[i]), multiply(a, as[i], u)};
    for (int s = 0; s < 2; ++s) {
      NormRatioRow row;
      row.label = 2 * Index(i) + Index(s);
      row.lhs = matrix_norm(a, sides[s], kind);
      row.rhs = base;
      row.ratio = norm_ratio(row.lhs, row.rhs);
      rep.rows.push_back(std::move(row));
    }
  }
  return finish(std::move(rep));
}

SignedPermutation random_signed_permutation(std::mt19937_64& rng, Index n) {
  SignedPermutation u = SignedPermutation::identity(n);
  for (Index i = n; i > 1; --i) {
    const Index j = rng() % i;
    std::swap(u.perm[i - 1], u.perm[j]);
  }
  for (auto& s : u.sign) s = rng() % 2 == 0 ? 1 : -1;
  return u;
}

Element random_element_on(std::mt19937_64& rng,
                          const std::vector<Index>& support, int bound) {
  if (support.empty() || bound <= 0)
    throw std::invalid_argument("random_element_on: empty support or bound");
  Element x;
  const std::uint64_t span = 2 * std::uint64_t(bound) + 1;
  for (Index b : support) {
    const long num = long(rng() % span) - bound;
    const long den = 1 + long(rng() % 3);
    if (num != 0) x.add(b, rat_of(num, den));
  }
  if (x.is_zero()) x.set(support.front(), rat_of(1));
  return x;
}

Element random_matrix_element(std::mt19937_64& rng,
                              const AlgebraPresentation& a, int bound) {
  require_view(a, "random_matrix_element");
  std::vector<Index> support(a.dim);
  for (Index b = 0; b < a.dim; ++b) support[b] = b;
  return random_element_on(rng, support, bound);
}

Element random_corner_element(std::mt19937_64& rng, const ShiftFrame& f,
                              int bound) {
  return random_element_on(rng, corner_basis(f), bound);
}

}  // namespace hochlab
