#pragma once

// Chains of degree n are exact rational combinations of (n+1)-tuples of
// algebra basis elements.  A tuple (i_0, ..., i_n) is stored as the
// mixed-radix code  sum_t i_t * dim^t  (first factor least significant), so
// term maps iterate in a canonical order and coordinate vectors over a chain
// space are just sparse vectors over codes.

#include <map>
#include <string>
#include <vector>

#include "hochlab/algebra.hpp"

namespace hochlab {

// Throws when the power exceeds 2^62 (nothing downstream wants codes that
// close to the Index ceiling).
Index pow_checked(Index base, unsigned exp);

inline Index chain_dim(Index algebra_dim, int degree) {
  return pow_checked(algebra_dim, static_cast<unsigned>(degree) + 1);
}

std::vector<Index> decode_tuple(Index code, Index dim, int factors);
Index encode_tuple(const std::vector<Index>& tuple, Index dim);
std::string tuple_key(const std::vector<Index>& tuple);  // "i0,i1,...,in"
std::vector<Index> parse_tuple_key(const std::string& key);

struct Chain {
  const AlgebraPresentation* alg = nullptr;
  int degree = 0;
  std::map<Index, Rat> terms;

  bool is_zero() const { return terms.empty(); }

  void add_term(Index code, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms.emplace(code, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  void axpy(const Rat& c, const Chain& other);
  void scale(const Rat& c);
};

Chain zero_chain(const AlgebraPresentation& a, int degree);
Chain basis_chain(const AlgebraPresentation& a, int degree, Index code);
Chain element_chain(const AlgebraPresentation& a, const Element& x);  // degree 0

// Concatenation of tuples: degree adds as (a.degree + b.degree + 1).
Chain tensor(const Chain& a, const Chain& b);
// Append one algebra element as an extra factor.
Chain tensor_element(const Chain& a, const Element& x);

SparseVec chain_to_vec(const Chain& c);
Chain vec_to_chain(const AlgebraPresentation& a, int degree, const SparseVec& v);

// A degree-n cochain is a functional on degree-n chains, stored by its values
// on basis tuples.
struct Cochain {
  const AlgebraPresentation* alg = nullptr;
  int degree = 0;
  std::map<Index, Rat> values;

  Rat evaluate(const Chain& c) const;
  void set(Index code, const Rat& v) {
    if (v == 0)
      values.erase(code);
    else
      values[code] = v;
  }
};

SparseVec cochain_to_vec(const Cochain& f);
Cochain vec_to_cochain(const AlgebraPresentation& a, int degree, const SparseVec& v);

}  // namespace hochlab
