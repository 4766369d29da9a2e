#pragma once

// Independent dense checkers used to cross-validate the sparse engine.
// Everything here is written in the most literal way possible (textbook
// Gauss elimination over rows) and shares no code with src/.

#include <cstdint>
#include <optional>
#include <vector>

#include "hochlab/sparse.hpp"

namespace oracle {

using hochlab::Index;
using hochlab::Rat;
using hochlab::SparseMatrix;
using hochlab::SparseVec;

using DenseMat = std::vector<std::vector<Rat>>;

inline DenseMat from_sparse(const SparseMatrix& m) {
  DenseMat d(m.rows, std::vector<Rat>(m.cols, Rat(0)));
  for (Index j = 0; j < m.cols; ++j)
    for (const auto& [i, c] : m.col[j].e) d[i][j] = c;
  return d;
}

// Row-echelon rank by forward elimination, first-nonzero pivoting.
inline Index rank(DenseMat a) {
  if (a.empty()) return 0;
  const size_t rows = a.size(), cols = a[0].size();
  Index r = 0;
  size_t lead_row = 0;
  for (size_t j = 0; j < cols && lead_row < rows; ++j) {
    size_t piv = lead_row;
    while (piv < rows && a[piv][j] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[lead_row]);
    for (size_t i = lead_row + 1; i < rows; ++i) {
      if (a[i][j] == 0) continue;
      const Rat f = a[i][j] / a[lead_row][j];
      for (size_t jj = j; jj < cols; ++jj) a[i][jj] -= f * a[lead_row][jj];
    }
    ++lead_row;
    ++r;
  }
  return r;
}

inline Index rank(const SparseMatrix& m) { return rank(from_sparse(m)); }

inline Index kernel_dim(const SparseMatrix& m) { return m.cols - rank(m); }

// Gauss-Jordan solve of a x == b; std::nullopt when inconsistent.
inline std::optional<std::vector<Rat>> solve(DenseMat a, std::vector<Rat> b) {
  const size_t rows = a.size();
  const size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<size_t> pivot_col;
  size_t lead_row = 0;
  for (size_t j = 0; j < cols && lead_row < rows; ++j) {
    size_t piv = lead_row;
    while (piv < rows && a[piv][j] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[lead_row]);
    std::swap(b[piv], b[lead_row]);
    const Rat inv = 1 / a[lead_row][j];
    for (size_t jj = 0; jj < cols; ++jj) a[lead_row][jj] *= inv;
    b[lead_row] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == lead_row || a[i][j] == 0) continue;
      const Rat f = a[i][j];
      for (size_t jj = 0; jj < cols; ++jj) a[i][jj] -= f * a[lead_row][jj];
      b[i] -= f * b[lead_row];
    }
    pivot_col.push_back(j);
    ++lead_row;
  }
  for (size_t i = lead_row; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;
  std::vector<Rat> x(cols, Rat(0));
  for (size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = b[r];
  return x;
}

inline std::optional<std::vector<Rat>> solve(const SparseMatrix& m, const SparseVec& b) {
  std::vector<Rat> rhs(m.rows, Rat(0));
  for (const auto& [i, c] : b.e) rhs[i] = c;
  return solve(from_sparse(m), rhs);
}

inline bool product_is_zero(const SparseMatrix& a, const SparseMatrix& b) {
  return a.multiply(b).is_zero();
}

// Certifies that the selected columns of m are linearly independent by a
// dense elimination mod p.  Independence mod p implies independence over Q,
// so a true return is a sound rank lower bound even for matrices far too
// large for exact dense elimination.
inline bool columns_independent_mod_p(const SparseMatrix& m,
                                      const std::vector<Index>& cols,
                                      std::uint64_t p = 1000003) {
  // Compact rows to the union support.
  std::map<Index, size_t> row_of;
  for (Index j : cols)
    for (const auto& [i, c] : m.col[j].e) {
      (void)c;
      row_of.emplace(i, 0);
    }
  size_t next = 0;
  for (auto& [i, slot] : row_of) {
    (void)i;
    slot = next++;
  }
  std::vector<std::vector<std::uint64_t>> a(
      row_of.size(), std::vector<std::uint64_t>(cols.size(), 0));
  for (size_t jj = 0; jj < cols.size(); ++jj)
    for (const auto& [i, c] : m.col[cols[jj]].e) {
      mpz_class num = c.get_num() % static_cast<long>(p);
      mpz_class den = c.get_den() % static_cast<long>(p);
      if (den == 0) return false;  // unlucky prime, caller should retry
      mpz_class inv;
      mpz_class pz(static_cast<unsigned long>(p));
      if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()) == 0) return false;
      mpz_class val = ((num * inv) % pz + pz) % pz;
      a[row_of.at(i)][jj] = val.get_ui();
    }

  const std::uint64_t P = p;
  auto inv_mod = [&](std::uint64_t x) {
    std::uint64_t r = 1, e = P - 2, base = x % P;
    while (e) {
      if (e & 1) r = (__uint128_t)r * base % P;
      base = (__uint128_t)base * base % P;
      e >>= 1;
    }
    return r;
  };
  size_t lead_row = 0;
  for (size_t j = 0; j < cols.size(); ++j) {
    size_t piv = lead_row;
    while (piv < a.size() && a[piv][j] == 0) ++piv;
    if (piv == a.size()) return false;  // dependent (or unlucky prime)
    std::swap(a[piv], a[lead_row]);
    const std::uint64_t f0 = inv_mod(a[lead_row][j]);
    for (size_t jj = j; jj < cols.size(); ++jj)
      a[lead_row][jj] = (__uint128_t)a[lead_row][jj] * f0 % P;
    for (size_t i = lead_row + 1; i < a.size(); ++i) {
      if (a[i][j] == 0) continue;
      const std::uint64_t f = a[i][j];
      for (size_t jj = j; jj < cols.size(); ++jj) {
        std::uint64_t sub = (__uint128_t)f * a[lead_row][jj] % P;
        a[i][jj] = (a[i][jj] + P - sub) % P;
      }
    }
    ++lead_row;
  }
  return true;
}

}  // namespace oracle
