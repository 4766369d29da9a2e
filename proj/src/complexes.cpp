#include "hochlab/complexes.hpp"

#include <algorithm>
#include <stdexcept>

namespace hochlab {

ChainSpace::ChainSpace(const AlgebraPresentation& a) : alg_(&a) {}

ChainSpace::ChainSpace(const AlgebraPresentation& a, std::vector<Index> sub_basis)
    : alg_(&a), sub_(std::move(sub_basis)) {
  if (sub_.empty()) throw std::invalid_argument("chain space: empty sub-basis");
  if (!std::is_sorted(sub_.begin(), sub_.end()) ||
      std::adjacent_find(sub_.begin(), sub_.end()) != sub_.end())
    throw std::invalid_argument("chain space: sub-basis must be sorted and unique");
  if (sub_.back() >= alg_->dim)
    throw std::out_of_range("chain space: sub-basis index out of range");
  member_.assign(alg_->dim, false);
  for (Index i : sub_) member_[i] = true;
}

std::vector<Index> ChainSpace::tuple(int degree, Index local) const {
  std::vector<Index> t = decode_tuple(local, basis_size(), degree + 1);
  if (!sub_.empty())
    for (auto& x : t) x = sub_[x];
  return t;
}

Index ChainSpace::ambient_code(int degree, Index local) const {
  return encode_tuple(tuple(degree, local), alg_->dim);
}

Chain ChainSpace::basis(int degree, Index local) const {
  return basis_chain(*alg_, degree, ambient_code(degree, local));
}

bool ChainSpace::contains(const Chain& c) const {
  if (c.alg != alg_) return false;
  if (sub_.empty()) return true;
  for (const auto& [code, v] : c.terms)
    for (Index x : decode_tuple(code, alg_->dim, c.degree + 1))
      if (!member_[x]) return false;
  return true;
}

namespace {

Chain face_term(const AlgebraPresentation& a, int degree,
                const std::vector<Index>& t, int i, const Rat& coeff) {
  Chain out = zero_chain(a, degree - 1);
  if (i < degree) {
    const SparseVec& prod = a.products[t[i]][t[i + 1]];
    for (const auto& [k, v] : prod.e) {
      std::vector<Index> s;
      s.reserve(degree);
      s.insert(s.end(), t.begin(), t.begin() + i);
      s.push_back(k);
      s.insert(s.end(), t.begin() + i + 2, t.end());
      out.add_term(encode_tuple(s, a.dim), coeff * v);
    }
  } else {
    // wrap face: last factor multiplies the first from the left
    const SparseVec& prod = a.products[t[degree]][t[0]];
    for (const auto& [k, v] : prod.e) {
      std::vector<Index> s;
      s.reserve(degree);
      s.push_back(k);
      s.insert(s.end(), t.begin() + 1, t.begin() + degree);
      out.add_term(encode_tuple(s, a.dim), coeff * v);
    }
  }
  return out;
}

}  // namespace

Chain face_map(const Chain& c, int i) {
  if (!c.alg) throw std::invalid_argument("face map on empty chain");
  if (c.degree < 1) throw std::invalid_argument("face map needs degree >= 1");
  if (i < 0 || i > c.degree) throw std::out_of_range("face index out of range");
  Chain out = zero_chain(*c.alg, c.degree - 1);
  for (const auto& [code, v] : c.terms) {
    std::vector<Index> t = decode_tuple(code, c.alg->dim, c.degree + 1);
    out.axpy(Rat(1), face_term(*c.alg, c.degree, t, i, v));
  }
  return out;
}

Chain bar_differential(const Chain& c) {
  if (c.degree < 1) throw std::invalid_argument("differential needs degree >= 1");
  Chain out = zero_chain(*c.alg, c.degree - 1);
  for (const auto& [code, v] : c.terms) {
    std::vector<Index> t = decode_tuple(code, c.alg->dim, c.degree + 1);
    Rat sign(1);
    for (int i = 0; i < c.degree; ++i) {
      out.axpy(Rat(1), face_term(*c.alg, c.degree, t, i, sign * v));
      sign = -sign;
    }
  }
  return out;
}

Chain hochschild_differential(const Chain& c) {
  Chain out = bar_differential(c);
  Rat sign = (c.degree % 2 == 0) ? Rat(1) : Rat(-1);
  for (const auto& [code, v] : c.terms) {
    std::vector<Index> t = decode_tuple(code, c.alg->dim, c.degree + 1);
    out.axpy(Rat(1), face_term(*c.alg, c.degree, t, c.degree, sign * v));
  }
  return out;
}

Cochain dual_differential(const Cochain& f, Index budget_cols) {
  const AlgebraPresentation& a = *f.alg;
  const int up = f.degree + 1;
  const Index count = chain_dim(a.dim, up);
  if (count > budget_cols)
    throw std::length_error("dual differential: tuple space exceeds budget");
  Cochain out;
  out.alg = &a;
  out.degree = up;
  for (Index code = 0; code < count; ++code) {
    Rat v = f.evaluate(hochschild_differential(basis_chain(a, up, code)));
    if (v != 0) out.values.emplace(code, v);
  }
  return out;
}

GradedMap::GradedMap(std::string name, ChainSpace source,
                     const AlgebraPresentation& target, int shift, Rule rule)
    : name_(std::move(name)),
      source_(std::move(source)),
      target_(&target),
      shift_(shift),
      rule_(std::move(rule)) {}

Chain GradedMap::apply(const Chain& c) const {
  if (!source_.contains(c))
    throw std::invalid_argument(name_ + ": chain is not supported on the source space");
  Chain out = zero_chain(*target_, c.degree + shift_);
  const Index dim = source_.algebra().dim;
  for (const auto& [code, v] : c.terms) {
    Chain img = rule_(c.degree, decode_tuple(code, dim, c.degree + 1));
    out.axpy(v, img);
  }
  return out;
}

const SparseMatrix& GradedMap::matrix(int degree) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = cache_.find(degree);
  if (it != cache_.end()) return it->second;

  if (degree + shift_ < 0)
    throw std::invalid_argument(name_ + ": target degree would be negative");
  SparseMatrix m(chain_dim(target_->dim, degree + shift_), source_.dim(degree));
  for (Index local = 0; local < m.cols; ++local) {
    Chain img = rule_(degree, source_.tuple(degree, local));
    if (img.degree != degree + shift_)
      throw std::logic_error(name_ + ": rule produced wrong degree");
    for (const auto& [code, v] : img.terms) m.col[local].set(code, v);
  }
  return cache_.emplace(degree, std::move(m)).first->second;
}

const SparseMatrix& materialize(const GradedMap& map, int degree) {
  return map.matrix(degree);
}

GradedMap hochschild_map(const AlgebraPresentation& a) {
  return GradedMap("hochschild differential", ChainSpace(a), a, -1,
                   [&a](int degree, const std::vector<Index>& t) {
                     return hochschild_differential(
                         basis_chain(a, degree, encode_tuple(t, a.dim)));
                   });
}

GradedMap bar_map(const AlgebraPresentation& a) {
  return GradedMap("bar differential", ChainSpace(a), a, -1,
                   [&a](int degree, const std::vector<Index>& t) {
                     return bar_differential(
                         basis_chain(a, degree, encode_tuple(t, a.dim)));
                   });
}

GradedMap factorwise_map(std::string name, const AlgebraPresentation& source,
                         const AlgebraPresentation& target, SparseMatrix coeff) {
  if (coeff.rows != target.dim || coeff.cols != source.dim)
    throw std::invalid_argument(name + ": coefficient matrix shape mismatch");
  auto coeffp = std::make_shared<SparseMatrix>(std::move(coeff));
  return GradedMap(
      std::move(name), ChainSpace(source), target, 0,
      [&target, coeffp](int degree, const std::vector<Index>& t) {
        Chain out = element_chain(target, coeffp->col[t[0]]);
        for (int i = 1; i <= degree; ++i)
          out = tensor_element(out, coeffp->col[t[i]]);
        return out;
      });
}

}  // namespace hochlab
