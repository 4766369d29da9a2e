#pragma once

// Sparse exact vectors and matrices.  Representation invariants:
//   - no explicit zero entries are ever stored;
//   - entry maps are ordered, so iteration order is deterministic;
//   - indices are within the declared dimensions.
// Columns are the primary axis: matrices are arrays of column vectors, which
// matches how graded maps are materialized (one column per source basis tuple).

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hochlab/rational.hpp"

namespace hochlab {

using Index = std::uint64_t;

struct SparseVec {
  std::map<Index, Rat> e;

  bool is_zero() const { return e.empty(); }
  std::size_t nnz() const { return e.size(); }

  Rat get(Index i) const {
    auto it = e.find(i);
    return it == e.end() ? Rat(0) : it->second;
  }

  void set(Index i, const Rat& v) {
    if (v == 0)
      e.erase(i);
    else
      e[i] = v;
  }

  void add(Index i, const Rat& v) {
    if (v == 0) return;
    auto [it, fresh] = e.emplace(i, v);
    if (!fresh) {
      it->second += v;
      if (it->second == 0) e.erase(it);
    }
  }

  // this += c * other
  void axpy(const Rat& c, const SparseVec& other) {
    if (c == 0) return;
    for (const auto& [i, v] : other.e) add(i, c * v);
  }

  void scale(const Rat& c) {
    if (c == 0) {
      e.clear();
      return;
    }
    for (auto& [i, v] : e) v *= c;
  }

  // Smallest index with a nonzero entry; only valid when !is_zero().
  Index leading() const { return e.begin()->first; }

  Rat dot(const SparseVec& other) const;

  bool operator==(const SparseVec& other) const { return e == other.e; }
};

struct SparseMatrix {
  Index rows = 0;
  Index cols = 0;
  std::vector<SparseVec> col;  // col.size() == cols

  SparseMatrix() = default;
  SparseMatrix(Index r, Index c) : rows(r), cols(c), col(c) {}

  Rat get(Index r, Index c) const { return col.at(c).get(r); }
  void set(Index r, Index c, const Rat& v);
  void add(Index r, Index c, const Rat& v);

  std::size_t nnz() const;
  bool is_zero() const;

  SparseMatrix transpose() const;
  SparseVec apply(const SparseVec& x) const;          // this * x
  SparseMatrix multiply(const SparseMatrix& b) const; // this * b
  SparseMatrix plus(const SparseMatrix& b, const Rat& scale) const;

  static SparseMatrix identity(Index n);

  bool operator==(const SparseMatrix& other) const;

  // Matrix-market-like text form: header line "rows cols nnz", then one
  // "row col p/q" line per entry in column-major order.  Exact round trip.
  std::string to_text() const;
  static SparseMatrix from_text(const std::string& text);
};

}  // namespace hochlab
