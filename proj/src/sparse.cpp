#include "hochlab/sparse.hpp"

#include <sstream>

namespace hochlab {

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  // mpq_class(str) aborts on garbage, so validate by hand first.
  std::size_t slash = s.find('/');
  auto check_int = [&](std::size_t from, std::size_t to) {
    if (from >= to) throw std::invalid_argument("malformed rational: " + s);
    std::size_t i = from;
    if (s[i] == '-') ++i;
    if (i >= to) throw std::invalid_argument("malformed rational: " + s);
    for (; i < to; ++i)
      if (s[i] < '0' || s[i] > '9')
        throw std::invalid_argument("malformed rational: " + s);
  };
  if (slash == std::string::npos) {
    check_int(0, s.size());
  } else {
    check_int(0, slash);
    check_int(slash + 1, s.size());
  }
  Rat r(s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

std::string Fnv1a::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 0; i < 16; ++i) out[15 - i] = digits[(h >> (4 * i)) & 0xF];
  return out;
}

Rat SparseVec::dot(const SparseVec& other) const {
  // walk the shorter map
  const SparseVec* a = this;
  const SparseVec* b = &other;
  if (a->e.size() > b->e.size()) std::swap(a, b);
  Rat acc(0);
  for (const auto& [i, v] : a->e) {
    auto it = b->e.find(i);
    if (it != b->e.end()) acc += v * it->second;
  }
  return acc;
}

void SparseMatrix::set(Index r, Index c, const Rat& v) {
  if (r >= rows || c >= cols) throw std::out_of_range("sparse entry out of range");
  col[c].set(r, v);
}

void SparseMatrix::add(Index r, Index c, const Rat& v) {
  if (r >= rows || c >= cols) throw std::out_of_range("sparse entry out of range");
  col[c].add(r, v);
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& v : col) n += v.nnz();
  return n;
}

bool SparseMatrix::is_zero() const {
  for (const auto& v : col)
    if (!v.is_zero()) return false;
  return true;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols, rows);
  for (Index c = 0; c < cols; ++c)
    for (const auto& [r, v] : col[c].e) t.col[r].e.emplace(c, v);
  return t;
}

SparseVec SparseMatrix::apply(const SparseVec& x) const {
  SparseVec y;
  for (const auto& [c, v] : x.e) {
    if (c >= cols) throw std::out_of_range("apply: vector index out of range");
    y.axpy(v, col[c]);
  }
  return y;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& b) const {
  if (cols != b.rows) throw std::invalid_argument("multiply: shape mismatch");
  SparseMatrix out(rows, b.cols);
  for (Index c = 0; c < b.cols; ++c) out.col[c] = apply(b.col[c]);
  return out;
}

SparseMatrix SparseMatrix::plus(const SparseMatrix& b, const Rat& scale) const {
  if (rows != b.rows || cols != b.cols)
    throw std::invalid_argument("plus: shape mismatch");
  SparseMatrix out = *this;
  for (Index c = 0; c < cols; ++c) out.col[c].axpy(scale, b.col[c]);
  return out;
}

SparseMatrix SparseMatrix::identity(Index n) {
  SparseMatrix m(n, n);
  for (Index i = 0; i < n; ++i) m.col[i].set(i, Rat(1));
  return m;
}

bool SparseMatrix::operator==(const SparseMatrix& other) const {
  return rows == other.rows && cols == other.cols && col == other.col;
}

std::string SparseMatrix::to_text() const {
  std::ostringstream os;
  os << rows << " " << cols << " " << nnz() << "\n";
  for (Index c = 0; c < cols; ++c)
    for (const auto& [r, v] : col[c].e)
      os << r << " " << c << " " << rat_str(v) << "\n";
  return os.str();
}

SparseMatrix SparseMatrix::from_text(const std::string& text) {
  std::istringstream is(text);
  Index rows, cols;
  std::size_t nnz;
  if (!(is >> rows >> cols >> nnz))
    throw std::invalid_argument("sparse text: bad header");
  SparseMatrix m(rows, cols);
  for (std::size_t k = 0; k < nnz; ++k) {
    Index r, c;
    std::string lit;
    if (!(is >> r >> c >> lit)) throw std::invalid_argument("sparse text: truncated");
    m.set(r, c, parse_rat(lit));
  }
  return m;
}

}  // namespace hochlab
