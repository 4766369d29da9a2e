#include "hochlab/chain.hpp"

#include <sstream>
#include <stdexcept>

namespace hochlab {

Index pow_checked(Index base, unsigned exp) {
  constexpr Index kCeiling = Index(1) << 62;
  Index out = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && out > kCeiling / base)
      throw std::overflow_error("chain space dimension exceeds 2^62");
    out *= base;
  }
  return out;
}

std::vector<Index> decode_tuple(Index code, Index dim, int factors) {
  std::vector<Index> t(factors);
  for (int i = 0; i < factors; ++i) {
    t[i] = code % dim;
    code /= dim;
  }
  if (code != 0) throw std::out_of_range("tuple code out of range");
  return t;
}

Index encode_tuple(const std::vector<Index>& tuple, Index dim) {
  Index code = 0;
  for (std::size_t i = tuple.size(); i-- > 0;) {
    if (tuple[i] >= dim) throw std::out_of_range("tuple entry out of range");
    code = code * dim + tuple[i];
  }
  return code;
}

std::string tuple_key(const std::vector<Index>& tuple) {
  std::ostringstream os;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) os << ",";
    os << tuple[i];
  }
  return os.str();
}

std::vector<Index> parse_tuple_key(const std::string& key) {
  std::vector<Index> out;
  std::istringstream is(key);
  std::string part;
  while (std::getline(is, part, ',')) {
    if (part.empty()) throw std::invalid_argument("malformed tuple key: " + key);
    for (char ch : part)
      if (ch < '0' || ch > '9')
        throw std::invalid_argument("malformed tuple key: " + key);
    out.push_back(std::stoull(part));
  }
  if (out.empty()) throw std::invalid_argument("empty tuple key");
  return out;
}

void Chain::axpy(const Rat& c, const Chain& other) {
  if (c == 0 || other.is_zero()) return;
  if (alg != other.alg || degree != other.degree)
    throw std::invalid_argument("chain axpy: mismatched spaces");
  for (const auto& [code, v] : other.terms) add_term(code, c * v);
}

void Chain::scale(const Rat& c) {
  if (c == 0) {
    terms.clear();
    return;
  }
  for (auto& [code, v] : terms) v *= c;
}

Chain zero_chain(const AlgebraPresentation& a, int degree) {
  if (degree < 0) throw std::invalid_argument("chain degree must be >= 0");
  Chain c;
  c.alg = &a;
  c.degree = degree;
  return c;
}

Chain basis_chain(const AlgebraPresentation& a, int degree, Index code) {
  Chain c = zero_chain(a, degree);
  if (code >= chain_dim(a.dim, degree))
    throw std::out_of_range("basis chain code out of range");
  c.add_term(code, Rat(1));
  return c;
}

Chain element_chain(const AlgebraPresentation& a, const Element& x) {
  Chain c = zero_chain(a, 0);
  for (const auto& [i, v] : x.e) {
    if (i >= a.dim) throw std::out_of_range("element index out of range");
    c.add_term(i, v);
  }
  return c;
}

Chain tensor(const Chain& a, const Chain& b) {
  if (a.alg != b.alg) throw std::invalid_argument("tensor: mismatched algebras");
  Chain out = zero_chain(*a.alg, a.degree + b.degree + 1);
  const Index stride = chain_dim(a.alg->dim, a.degree);
  for (const auto& [ca, va] : a.terms)
    for (const auto& [cb, vb] : b.terms) out.add_term(ca + stride * cb, va * vb);
  return out;
}

Chain tensor_element(const Chain& a, const Element& x) {
  Chain out = zero_chain(*a.alg, a.degree + 1);
  const Index stride = chain_dim(a.alg->dim, a.degree);
  for (const auto& [ca, va] : a.terms)
    for (const auto& [i, v] : x.e) {
      if (i >= a.alg->dim) throw std::out_of_range("element index out of range");
      out.add_term(ca + stride * i, va * v);
    }
  return out;
}

SparseVec chain_to_vec(const Chain& c) {
  SparseVec v;
  v.e.insert(c.terms.begin(), c.terms.end());
  return v;
}

Chain vec_to_chain(const AlgebraPresentation& a, int degree, const SparseVec& v) {
  Chain c = zero_chain(a, degree);
  const Index bound = chain_dim(a.dim, degree);
  for (const auto& [code, val] : v.e) {
    if (code >= bound) throw std::out_of_range("chain code out of range");
    c.terms.emplace(code, val);
  }
  return c;
}

Rat Cochain::evaluate(const Chain& c) const {
  if (alg != c.alg || degree != c.degree)
    throw std::invalid_argument("cochain evaluation: mismatched spaces");
  Rat acc(0);
  const auto* small = &values;
  if (c.terms.size() < values.size()) {
    for (const auto& [code, v] : c.terms) {
      auto it = values.find(code);
      if (it != values.end()) acc += v * it->second;
    }
    return acc;
  }
  for (const auto& [code, v] : *small) {
    auto it = c.terms.find(code);
    if (it != c.terms.end()) acc += v * it->second;
  }
  return acc;
}

SparseVec cochain_to_vec(const Cochain& f) {
  SparseVec v;
  v.e.insert(f.values.begin(), f.values.end());
  return v;
}

Cochain vec_to_cochain(const AlgebraPresentation& a, int degree, const SparseVec& v) {
  Cochain f;
  f.alg = &a;
  f.degree = degree;
  const Index bound = chain_dim(a.dim, degree);
  for (const auto& [code, val] : v.e) {
    if (code >= bound) throw std::out_of_range("cochain code out of range");
    f.values.emplace(code, val);
  }
  return f;
}

}  // namespace hochlab
