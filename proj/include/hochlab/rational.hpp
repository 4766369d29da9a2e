#pragma once

// Exact scalar type for the whole library.  Everything that feeds a verdict is
// computed in Rat; floating point only ever appears in the numeric l2 norm
// estimates, which never decide anything.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hochlab {

using Rat = mpq_class;

// The safe two-argument constructor.  mpq_class(p, q) does NOT canonicalize
// and GMP arithmetic silently misbehaves on non-canonical values; construct
// rationals through rat_of or parse_rat, never through mpq_class(p, q).
inline Rat rat_of(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Canonical form: "p/q" with q > 0 and gcd(p,q)=1, "p" alone when q == 1.
inline std::string rat_str(const Rat& r) { return r.get_str(); }

// Accepts "p", "p/q", optional leading minus. Throws on malformed input or
// zero denominator.
Rat parse_rat(const std::string& s);

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

// FNV-1a, used for stable content hashes of canonical serializations.
struct Fnv1a {
  std::uint64_t h = 1469598103934665603ull;
  void feed(const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
      h ^= p[i];
      h *= 1099511628211ull;
    }
  }
  void feed(const std::string& s) { feed(s.data(), s.size()); }
  void feed(std::uint64_t v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    feed(b, 8);
  }
  std::string hex() const;
};

}  // namespace hochlab
