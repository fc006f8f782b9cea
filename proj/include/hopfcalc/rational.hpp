#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hopfcalc {

using Rat = mpq_class;
using Int = mpz_class;

inline Int factorial(unsigned n) {
  Int r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Int binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Int r = 1;
  for (unsigned i = 0; i < k; ++i) { r *= (n - i); r /= (i + 1); }
  return r;
}

// Catalan number C_n = binom(2n,n)/(n+1)
inline Int catalan(unsigned n) {
  return binomial(2 * n, n) / (n + 1);
}

inline Rat rat_pow(const Rat& base, unsigned e) {
  Rat r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

// A rational extended with +infinity, the value of a submodular function on
// a forbidden set (e.g. non-lower-sets of a poset). Infinity absorbs addition
// and may never be subtracted.
struct ExtQ {
  bool inf = false;
  Rat v = 0;

  ExtQ() = default;
  ExtQ(const Rat& x) : inf(false), v(x) {}
  ExtQ(long x) : inf(false), v(x) {}
  static ExtQ infinity() { ExtQ e; e.inf = true; return e; }

  bool operator==(const ExtQ& o) const {
    if (inf || o.inf) return inf == o.inf;
    return v == o.v;
  }
  bool operator!=(const ExtQ& o) const { return !(*this == o); }

  ExtQ operator+(const ExtQ& o) const {
    if (inf || o.inf) return infinity();
    return ExtQ(v + o.v);
  }
  // Defined only when the subtrahend is finite.
  ExtQ operator-(const ExtQ& o) const {
    if (o.inf) throw std::logic_error("subtracting infinity");
    if (inf) return infinity();
    return ExtQ(v - o.v);
  }
  bool operator<=(const ExtQ& o) const {
    if (o.inf) return true;
    if (inf) return false;
    return v <= o.v;
  }

  std::string str() const {
    return inf ? "inf" : v.get_str();
  }
};

}  // namespace hopfcalc
