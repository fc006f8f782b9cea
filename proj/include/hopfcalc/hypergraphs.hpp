#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gp.hpp"
#include "graphs.hpp"
#include "hopf.hpp"

namespace hopfcalc {

// Multiset of subsets of the ground set; the empty set is always present
// exactly once (mult[0] == 1).
struct Hypergraph {
  std::vector<std::string> labels;
  std::vector<long> mult;  // size 1 << n

  int n() const { return (int)labels.size(); }

  static Hypergraph empty(std::vector<std::string> lbls) {
    Hypergraph h;
    h.labels = std::move(lbls);
    h.mult.assign(size_t(1) << h.labels.size(), 0);
    h.mult[0] = 1;
    return h;
  }

  bool is_simple() const {
    for (size_t i = 1; i < mult.size(); ++i)
      if (mult[i] > 1) return false;
    return mult[0] == 1;
  }
};

inline std::string encode_hypergraph(const Hypergraph& h) {
  std::string out = "{" + join_labels(h.labels, full_mask(h.n())) + "|";
  bool first = true;
  for (Mask m = 0; m < (Mask(1) << h.n()); ++m)
    for (long c = 0; c < h.mult[m]; ++c) {
      if (!first) out += ",";
      out += m ? join_labels(h.labels, m, "") : std::string("-");
      first = false;
    }
  return out + "}";
}

inline Hypergraph support(const Hypergraph& h) {
  Hypergraph out = h;
  for (auto& m : out.mult)
    if (m > 1) m = 1;
  return out;
}

inline Hypergraph hg_union(const Hypergraph& a, const Hypergraph& b) {
  LabelMerge lm = merge_labels(a.labels, b.labels);
  Hypergraph out = Hypergraph::empty(lm.labels);
  for (Mask m = 1; m < (Mask(1) << a.n()); ++m) out.mult[remap_mask(m, lm.map_a)] += a.mult[m];
  for (Mask m = 1; m < (Mask(1) << b.n()); ++m) out.mult[remap_mask(m, lm.map_b)] += b.mult[m];
  return out;
}

// (H|_S, H/_S): hyperedges inside S; and the traces H cap T of hyperedges
// not inside S, multiplicities added.
inline std::pair<Hypergraph, Hypergraph> hg_minors(const Hypergraph& h, Mask s) {
  int n = h.n();
  Mask t = full_mask(n) & ~s;
  Hypergraph res = Hypergraph::empty(sub_labels(h.labels, s));
  Hypergraph con = Hypergraph::empty(sub_labels(h.labels, t));
  std::vector<int> smap = subindex(full_mask(n), s);
  std::vector<int> tmap = subindex(full_mask(n), t);
  for (Mask m = 1; m < (Mask(1) << n); ++m) {
    if (!h.mult[m]) continue;
    if ((m & ~s) == 0)
      res.mult[remap_mask(m, smap)] += h.mult[m];
    else
      con.mult[remap_mask(m & t, tmap)] += h.mult[m];
  }
  return {std::move(res), std::move(con)};
}

struct HG {
  using Obj = Hypergraph;
  static std::string name() { return "hypergraph"; }
  static std::string encode(const Obj& h) { return encode_hypergraph(h); }
  static Obj product(const Obj& a, const Obj& b) { return hg_union(a, b); }
  static std::optional<std::pair<Obj, Obj>> coproduct(const Obj& h, Mask s) {
    return hg_minors(h, s);
  }
};

// Simple hypergraphs: same minors with multiplicities forgotten.
struct SHG {
  using Obj = Hypergraph;
  static std::string name() { return "simple-hypergraph"; }
  static std::string encode(const Obj& h) { return encode_hypergraph(h); }
  static Obj product(const Obj& a, const Obj& b) { return support(hg_union(a, b)); }
  static std::optional<std::pair<Obj, Obj>> coproduct(const Obj& h, Mask s) {
    auto [res, con] = hg_minors(h, s);
    return std::make_pair(support(res), support(con));
  }
};

// z(J) = sum of multiplicities of hyperedges meeting J; P(z) is the
// Minkowski sum of the simplex faces Delta_H.
inline BoolFn hypergraphic_polytope(const Hypergraph& h) {
  int n = h.n();
  BoolFn z = BoolFn::zero(h.labels);
  for (Mask a = 1; a < (Mask(1) << n); ++a) {
    long c = 0;
    for (Mask m = 1; m < (Mask(1) << n); ++m)
      if (h.mult[m] && (m & a)) c += h.mult[m];
    z[a] = ExtQ(Rat(c));
  }
  return z;
}

inline Hypergraph hypergraph_from_table(std::vector<std::string> labels,
                                        const std::vector<Int>& y) {
  Hypergraph h = Hypergraph::empty(std::move(labels));
  for (Mask m = 1; m < (Mask)y.size(); ++m) h.mult[m] = y[m].get_si();
  return h;
}

// Components of the support: vertices sharing a hyperedge are connected;
// isolated vertices count.
inline int hypergraph_components(const Hypergraph& h) {
  int n = h.n();
  std::vector<Mask> adj(n, 0);
  for (Mask m = 1; m < (Mask(1) << n); ++m)
    if (h.mult[m])
      for (int i : bits_of(m))
        for (int j : bits_of(m))
          if (i != j) adj[i] |= Mask(1) << j;
  return components(adj);
}

// mu(Delta) along a composition: the disjoint union of iterated minors.
inline Hypergraph hg_of_composition(const Hypergraph& h, const std::vector<Mask>& blocks) {
  auto factors = higher_coproduct<HG>(h, blocks);
  Hypergraph out = (*factors)[0];
  for (size_t i = 1; i < factors->size(); ++i) out = hg_union(out, (*factors)[i]);
  return out;
}

// The face hypergraph for a composition of the polytope's normal fan. The
// polytope map is a co-opposite morphism, so the face selected by
// (S1,...,Sk) on the polytope side is H(Sk,...,S1) on the hypergraph side.
inline Hypergraph hg_face(const Hypergraph& h, std::vector<Mask> gp_blocks) {
  std::reverse(gp_blocks.begin(), gp_blocks.end());
  return hg_of_composition(h, gp_blocks);
}

// s(H) = sum over faces of the hypergraphic polytope of (-1)^{c(G)} G, where
// G is the face hypergraph read off any witness composition. Grouping-free.
inline FormalSum<Hypergraph> antipode_hg(const Hypergraph& h) {
  FormalSum<Hypergraph> out;
  int n = h.n();
  for (auto& [key, rec] : enumerate_faces(hypergraphic_polytope(h))) {
    Hypergraph g = hg_face(h, rec.witnesses.front());
    Rat sign = ((n + rec.dim) % 2 == 0) ? Rat(1) : Rat(-1);
    out.add(encode_hypergraph(g), g, sign);
  }
  return out;
}

// Simple version: push each face through supp and combine. Cancellation-free.
inline FormalSum<Hypergraph> antipode_shg(const Hypergraph& h) {
  FormalSum<Hypergraph> out;
  int n = h.n();
  for (auto& [key, rec] : enumerate_faces(hypergraphic_polytope(h))) {
    Hypergraph g = support(hg_face(h, rec.witnesses.front()));
    Rat sign = ((n + rec.dim) % 2 == 0) ? Rat(1) : Rat(-1);
    out.add(encode_hypergraph(g), g, sign);
  }
  return out;
}

// --- simplicial complexes -------------------------------------------------

// Downward-closed face family containing the empty face.
struct Complex {
  std::vector<std::string> labels;
  std::vector<char> face;  // size 1 << n

  int n() const { return (int)labels.size(); }

  static Complex empty(std::vector<std::string> lbls) {
    Complex c;
    c.labels = std::move(lbls);
    c.face.assign(size_t(1) << c.labels.size(), 0);
    c.face[0] = 1;
    return c;
  }

  bool downward_closed() const {
    for (Mask m = 1; m < (Mask(1) << n()); ++m)
      if (face[m])
        for (int i : bits_of(m))
          if (!face[m & ~(Mask(1) << i)]) return false;
    return face[0] == 1;
  }
};

inline std::string encode_complex(const Complex& c) {
  std::string out = "sc{" + join_labels(c.labels, full_mask(c.n())) + "|";
  bool first = true;
  for (Mask m = 1; m < (Mask(1) << c.n()); ++m)
    if (c.face[m]) {
      if (!first) out += ",";
      out += join_labels(c.labels, m, "");
      first = false;
    }
  return out + "}";
}

inline Complex complex_restrict(const Complex& c, Mask s) {
  Complex out = Complex::empty(sub_labels(c.labels, s));
  std::vector<int> smap = subindex(full_mask(c.n()), s);
  for_each_subset(s, [&](Mask m) {
    if (m && c.face[m]) out.face[remap_mask(m, smap)] = 1;
  });
  return out;
}

struct SC {
  using Obj = Complex;
  static std::string name() { return "complex"; }
  static std::string encode(const Obj& c) { return encode_complex(c); }
  static Obj product(const Obj& a, const Obj& b) {
    LabelMerge lm = merge_labels(a.labels, b.labels);
    Obj out = Complex::empty(lm.labels);
    for (Mask m = 1; m < (Mask(1) << a.n()); ++m)
      if (a.face[m]) out.face[remap_mask(m, lm.map_a)] = 1;
    for (Mask m = 1; m < (Mask(1) << b.n()); ++m)
      if (b.face[m]) out.face[remap_mask(m, lm.map_b)] = 1;
    return out;
  }
  static std::optional<std::pair<Obj, Obj>> coproduct(const Obj& c, Mask s) {
    Mask t = full_mask(c.n()) & ~s;
    return std::make_pair(complex_restrict(c, s), complex_restrict(c, t));
  }
};

inline Hypergraph complex_as_hypergraph(const Complex& c) {
  Hypergraph h = Hypergraph::empty(c.labels);
  for (Mask m = 1; m < (Mask(1) << c.n()); ++m)
    if (c.face[m]) h.mult[m] = 1;
  return h;
}

inline Graph one_skeleton(const Complex& c) {
  Graph g = Graph::empty(c.labels);
  for (int i = 0; i < c.n(); ++i)
    for (int j = i + 1; j < c.n(); ++j)
      if (c.face[(Mask(1) << i) | (Mask(1) << j)]) g.em_ref(i, j) = 1;
  return g;
}

// s(C) = sum over flats f of the 1-skeleton of (-1)^{c(f)} a(g/f) C(f),
// where C(f) restricts C to the components of f.
inline FormalSum<Complex> antipode_sc(const Complex& c) {
  Graph g = one_skeleton(c);
  FormalSum<Complex> out;
  for (auto& f : graph_flats(g)) {
    std::vector<int> comp;
    int nc = components(component_adjacency(g, f), &comp);
    Complex cf = Complex::empty(c.labels);
    for (Mask m = 1; m < (Mask(1) << c.n()); ++m) {
      if (!c.face[m]) continue;
      auto b = bits_of(m);
      bool one_comp = true;
      for (int i : b)
        if (comp[i] != comp[b[0]]) { one_comp = false; break; }
      if (one_comp) cf.face[m] = 1;
    }
    Rat a((long)acyclic_orientations(contract_flat(g, f)).size());
    out.add(encode_complex(cf), cf, (nc % 2 == 0) ? a : -a);
  }
  return out;
}

}  // namespace hopfcalc
