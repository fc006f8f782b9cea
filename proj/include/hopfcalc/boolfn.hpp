#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bits.hpp"
#include "labels.hpp"
#include "rational.hpp"

namespace hopfcalc {

// Extended submodular set function z : 2^I -> Q u {inf}, z(empty) = 0,
// stored as a dense table indexed by subset mask.
struct BoolFn {
  std::vector<std::string> labels;
  std::vector<ExtQ> vals;  // size 1 << n

  int n() const { return (int)labels.size(); }
  const ExtQ& operator[](Mask m) const { return vals[m]; }
  ExtQ& operator[](Mask m) { return vals[m]; }

  static BoolFn zero(std::vector<std::string> lbls) {
    BoolFn z;
    z.labels = std::move(lbls);
    z.vals.assign(size_t(1) << z.labels.size(), ExtQ(0));
    return z;
  }
};

// z(A u B) + z(A n B) <= z(A) + z(B), checked by local exchange.
inline bool is_submodular(const BoolFn& z) {
  int n = z.n();
  if ((size_t)z.vals.size() != size_t(1) << n) return false;
  if (z.vals[0] != ExtQ(0)) return false;
  for (Mask a = 0; a < (Mask(1) << n); ++a) {
    for (int i = 0; i < n; ++i) {
      if (a & (Mask(1) << i)) continue;
      for (int j = i + 1; j < n; ++j) {
        if (a & (Mask(1) << j)) continue;
        Mask ai = a | (Mask(1) << i), aj = a | (Mask(1) << j);
        if (!(z[ai | aj] + z[a] <= z[ai] + z[aj])) return false;
      }
    }
  }
  return true;
}

inline bool is_finite(const BoolFn& z) {
  for (auto& v : z.vals)
    if (v.inf) return false;
  return true;
}

// All values in {0, inf}.
inline bool is_01inf(const BoolFn& z) {
  for (auto& v : z.vals)
    if (!v.inf && v.v != 0) return false;
  return true;
}

// z(A) = sum of singleton values for all A (and everything finite): the base
// polytope is a single point.
inline bool is_point(const BoolFn& z) {
  int n = z.n();
  if (!is_finite(z)) return false;
  for (Mask a = 1; a < (Mask(1) << n); ++a) {
    ExtQ s(0);
    for (int i : bits_of(a)) s = s + z[Mask(1) << i];
    if (z[a] != s) return false;
  }
  return true;
}

// Hopf monoid structure on submodular functions.
struct SF {
  using Obj = BoolFn;
  static std::string name() { return "sf"; }

  static std::string encode(const Obj& z) {
    std::string out = "sf{" + join_labels(z.labels, full_mask(z.n())) + "|";
    for (Mask m = 1; m < (Mask(1) << z.n()); ++m) {
      if (m > 1) out += ",";
      out += z[m].str();
    }
    return out + "}";
  }

  static Obj product(const Obj& a, const Obj& b) {
    LabelMerge lm = merge_labels(a.labels, b.labels);
    Obj out;
    out.labels = lm.labels;
    int n = (int)lm.labels.size();
    Mask in_a = 0, in_b = 0;
    for (size_t i = 0; i < lm.map_a.size(); ++i) in_a |= Mask(1) << lm.map_a[i];
    for (size_t i = 0; i < lm.map_b.size(); ++i) in_b |= Mask(1) << lm.map_b[i];
    std::vector<int> back = subindex(full_mask(n), in_a);
    std::vector<int> backb = subindex(full_mask(n), in_b);
    out.vals.resize(size_t(1) << n);
    for (Mask e = 0; e < (Mask(1) << n); ++e) {
      Mask ea = 0, eb = 0;
      for (int i : bits_of(e & in_a)) ea |= Mask(1) << back[i];
      for (int i : bits_of(e & in_b)) eb |= Mask(1) << backb[i];
      out.vals[e] = a[ea] + b[eb];
    }
    return out;
  }

  // (z|_S, z/_S); vanishes when z(S) is infinite.
  static std::optional<std::pair<Obj, Obj>> coproduct(const Obj& z, Mask s) {
    if (z[s].inf) return std::nullopt;
    int n = z.n();
    Mask t = full_mask(n) & ~s;
    Obj res, con;
    res.labels = sub_labels(z.labels, s);
    con.labels = sub_labels(z.labels, t);
    res.vals.resize(size_t(1) << res.n());
    con.vals.resize(size_t(1) << con.n());
    std::vector<int> smap = subindex(full_mask(n), s);
    std::vector<int> tmap = subindex(full_mask(n), t);
    for_each_subset(s, [&](Mask e) {
      Mask loc = 0;
      for (int i : bits_of(e)) loc |= Mask(1) << smap[i];
      res.vals[loc] = z[e];
    });
    for_each_subset(t, [&](Mask e) {
      Mask loc = 0;
      for (int i : bits_of(e)) loc |= Mask(1) << tmap[i];
      con.vals[loc] = z[e | s] - z[s];
    });
    return std::make_pair(std::move(res), std::move(con));
  }
};

}  // namespace hopfcalc
