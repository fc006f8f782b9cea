#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "boolfn.hpp"
#include "gp.hpp"
#include "hopf.hpp"
#include "labels.hpp"

namespace hopfcalc {

// Multigraph with half-edges: full edges are unordered vertex pairs with
// multiplicity, half-edges are singletons with multiplicity.
struct Graph {
  std::vector<std::string> labels;
  std::vector<int> half;   // half[i] = multiplicity of half-edge {i}
  std::vector<int> pairs;  // pairs[i*n+j] (i<j) = multiplicity of edge {i,j}

  int n() const { return (int)labels.size(); }
  int em(int i, int j) const {
    if (i > j) std::swap(i, j);
    return pairs[(size_t)i * n() + j];
  }
  int& em_ref(int i, int j) {
    if (i > j) std::swap(i, j);
    return pairs[(size_t)i * n() + j];
  }

  static Graph empty(std::vector<std::string> lbls) {
    Graph g;
    g.labels = std::move(lbls);
    g.half.assign(g.labels.size(), 0);
    g.pairs.assign(g.labels.size() * g.labels.size(), 0);
    return g;
  }

  bool is_simple() const {
    for (int h : half)
      if (h) return false;
    for (int m : pairs)
      if (m > 1) return false;
    return true;
  }

  size_t edge_total() const {
    size_t t = 0;
    for (int h : half) t += h;
    for (int i = 0; i < n(); ++i)
      for (int j = i + 1; j < n(); ++j) t += em(i, j);
    return t;
  }
};

inline std::string encode_graph(const Graph& g) {
  std::string out = "{" + join_labels(g.labels, full_mask(g.n())) + "|";
  bool first = true;
  for (int i = 0; i < g.n(); ++i)
    for (int m = 0; m < g.half[i]; ++m) {
      if (!first) out += ",";
      out += g.labels[i];
      first = false;
    }
  for (int i = 0; i < g.n(); ++i)
    for (int j = i + 1; j < g.n(); ++j)
      for (int m = 0; m < g.em(i, j); ++m) {
        if (!first) out += ",";
        out += g.labels[i] + g.labels[j];
        first = false;
      }
  return out + "}";
}

inline Graph graph_union(const Graph& a, const Graph& b) {
  LabelMerge lm = merge_labels(a.labels, b.labels);
  Graph out = Graph::empty(lm.labels);
  for (int i = 0; i < a.n(); ++i) {
    out.half[lm.map_a[i]] += a.half[i];
    for (int j = i + 1; j < a.n(); ++j) out.em_ref(lm.map_a[i], lm.map_a[j]) += a.em(i, j);
  }
  for (int i = 0; i < b.n(); ++i) {
    out.half[lm.map_b[i]] += b.half[i];
    for (int j = i + 1; j < b.n(); ++j) out.em_ref(lm.map_b[i], lm.map_b[j]) += b.em(i, j);
  }
  return out;
}

// g|_S: induced sub(multi)graph. g/_S: on T = I\S, edges inside T kept and
// each cross edge {s,t} becomes a half-edge at t.
inline std::pair<Graph, Graph> graph_coproduct(const Graph& g, Mask s) {
  int n = g.n();
  Mask t = full_mask(n) & ~s;
  Graph res = Graph::empty(sub_labels(g.labels, s));
  Graph con = Graph::empty(sub_labels(g.labels, t));
  std::vector<int> smap = subindex(full_mask(n), s);
  std::vector<int> tmap = subindex(full_mask(n), t);
  for (int i = 0; i < n; ++i) {
    bool in_s = (s >> i) & 1;
    if (in_s)
      res.half[smap[i]] += g.half[i];
    else
      con.half[tmap[i]] += g.half[i];
    for (int j = i + 1; j < n; ++j) {
      int m = g.em(i, j);
      if (!m) continue;
      bool js = (s >> j) & 1;
      if (in_s && js)
        res.em_ref(smap[i], smap[j]) += m;
      else if (!in_s && !js)
        con.em_ref(tmap[i], tmap[j]) += m;
      else if (in_s)
        con.half[tmap[j]] += m;  // cross edge, i in S
      else
        con.half[tmap[i]] += m;  // cross edge, j in S
    }
  }
  return {std::move(res), std::move(con)};
}

// Multigraphs with half-edges under restriction/half-edge contraction.
struct G {
  using Obj = Graph;
  static std::string name() { return "graph"; }
  static std::string encode(const Obj& g) { return encode_graph(g); }
  static Obj product(const Obj& a, const Obj& b) { return graph_union(a, b); }
  static std::optional<std::pair<Obj, Obj>> coproduct(const Obj& g, Mask s) {
    return graph_coproduct(g, s);
  }
};

inline Graph simplify(const Graph& g) {
  Graph out = Graph::empty(g.labels);
  for (int i = 0; i < g.n(); ++i)
    for (int j = i + 1; j < g.n(); ++j)
      if (g.em(i, j)) out.em_ref(i, j) = 1;
  return out;
}

// Simple graphs; both coproduct factors are induced subgraphs.
struct SG {
  using Obj = Graph;
  static std::string name() { return "simple-graph"; }
  static std::string encode(const Obj& g) { return encode_graph(g); }
  static Obj product(const Obj& a, const Obj& b) { return graph_union(a, b); }
  static std::optional<std::pair<Obj, Obj>> coproduct(const Obj& g, Mask s) {
    auto [res, con] = graph_coproduct(g, s);
    return std::make_pair(std::move(res), simplify(con));
  }
};

// z(A) = number of edges and half-edges meeting A; P(z) is the graphic
// zonotope of g.
inline BoolFn incidence_fn(const Graph& g) {
  int n = g.n();
  BoolFn z = BoolFn::zero(g.labels);
  for (Mask a = 1; a < (Mask(1) << n); ++a) {
    long c = 0;
    for (int i = 0; i < n; ++i) {
      if ((a >> i) & 1) c += g.half[i];
      for (int j = i + 1; j < n; ++j)
        if (((a >> i) | (a >> j)) & 1) c += g.em(i, j);
    }
    z[a] = ExtQ(Rat(c));
  }
  return z;
}

// --- flats and orientations ------------------------------------------------

inline std::vector<Mask> component_adjacency(const Graph& g,
                                             const std::vector<std::pair<int, int>>& edges) {
  std::vector<Mask> adj(g.n(), 0);
  for (auto& [i, j] : edges) {
    adj[i] |= Mask(1) << j;
    adj[j] |= Mask(1) << i;
  }
  return adj;
}

// A flat is a set of vertex pairs (taken with all parallel copies) such that
// any edge of g joining two vertices in the same flat component is in the
// flat. Returned as lists of vertex pairs.
inline std::vector<std::vector<std::pair<int, int>>> graph_flats(const Graph& g) {
  std::vector<std::pair<int, int>> present;
  for (int i = 0; i < g.n(); ++i)
    for (int j = i + 1; j < g.n(); ++j)
      if (g.em(i, j)) present.push_back({i, j});
  std::vector<std::vector<std::pair<int, int>>> out;
  for (Mask pick = 0; pick < (Mask(1) << present.size()); ++pick) {
    std::vector<std::pair<int, int>> f;
    for (size_t e = 0; e < present.size(); ++e)
      if ((pick >> e) & 1) f.push_back(present[e]);
    std::vector<int> comp;
    components(component_adjacency(g, f), &comp);
    bool flat = true;
    for (size_t e = 0; e < present.size() && flat; ++e)
      if (!((pick >> e) & 1) && comp[present[e].first] == comp[present[e].second])
        flat = false;
    if (flat) out.push_back(std::move(f));
  }
  return out;
}

inline int flat_components(const Graph& g, const std::vector<std::pair<int, int>>& f) {
  return components(component_adjacency(g, f));
}

inline bool orientation_acyclic(int n, const std::vector<std::pair<int, int>>& arcs) {
  std::vector<Mask> out(n, 0);
  for (auto& [u, v] : arcs) out[u] |= Mask(1) << v;
  std::vector<int> state(n, 0);  // 0 new, 1 on path, 2 done
  std::function<bool(int)> dfs = [&](int v) {
    state[v] = 1;
    for (int u : bits_of(out[v])) {
      if (state[u] == 1) return false;
      if (state[u] == 0 && !dfs(u)) return false;
    }
    state[v] = 2;
    return true;
  };
  for (int s = 0; s < n; ++s)
    if (state[s] == 0 && !dfs(s)) return false;
  return true;
}

// Acyclic orientations of the simplification of g.
inline std::vector<std::vector<std::pair<int, int>>> acyclic_orientations(const Graph& g) {
  std::vector<std::pair<int, int>> present;
  for (int i = 0; i < g.n(); ++i)
    for (int j = i + 1; j < g.n(); ++j)
      if (g.em(i, j)) present.push_back({i, j});
  std::vector<std::vector<std::pair<int, int>>> out;
  for (Mask dir = 0; dir < (Mask(1) << present.size()); ++dir) {
    std::vector<std::pair<int, int>> arcs;
    for (size_t e = 0; e < present.size(); ++e) {
      auto [i, j] = present[e];
      arcs.push_back(((dir >> e) & 1) ? std::pair{j, i} : std::pair{i, j});
    }
    if (orientation_acyclic(g.n(), arcs)) out.push_back(std::move(arcs));
  }
  return out;
}

// Contract the components of flat f to single vertices; edges between
// distinct components survive (simplified). Also returns the component map.
inline Graph contract_flat(const Graph& g, const std::vector<std::pair<int, int>>& f,
                           std::vector<int>* comp_out = nullptr) {
  std::vector<int> comp;
  int c = components(component_adjacency(g, f), &comp);
  Graph out = Graph::empty(default_labels(c));
  for (int i = 0; i < g.n(); ++i)
    for (int j = i + 1; j < g.n(); ++j)
      if (g.em(i, j) && comp[i] != comp[j]) out.em_ref(comp[i], comp[j]) = 1;
  if (comp_out) *comp_out = comp;
  return out;
}

struct ZonotopeFace {
  std::vector<std::pair<int, int>> flat;
  std::vector<std::pair<int, int>> orientation;  // arcs of the contraction
  Graph face_graph;                              // g(f,o)
};

// Faces of the graphic zonotope: pairs of a flat f and an acyclic orientation
// o of g/f. g(f,o) keeps the flat's edges and the original half-edges and
// turns each non-flat edge copy into a half-edge at its source.
inline std::vector<ZonotopeFace> zonotope_faces(const Graph& g) {
  std::vector<ZonotopeFace> out;
  for (auto& f : graph_flats(g)) {
    std::vector<int> comp;
    Graph contracted = contract_flat(g, f, &comp);
    std::vector<char> in_flat(g.n() * g.n(), 0);
    for (auto& [i, j] : f) in_flat[i * g.n() + j] = 1;
    for (auto& o : acyclic_orientations(contracted)) {
      std::vector<char> src(contracted.n() * contracted.n(), 0);  // src[c1][c2]: c1 -> c2
      for (auto& [u, v] : o) src[u * contracted.n() + v] = 1;
      Graph face = Graph::empty(g.labels);
      face.half = g.half;
      for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j) {
          int m = g.em(i, j);
          if (!m) continue;
          if (in_flat[i * g.n() + j])
            face.em_ref(i, j) = m;
          else if (src[comp[i] * contracted.n() + comp[j]])
            face.half[i] += m;
          else
            face.half[j] += m;
        }
      out.push_back({f, o, std::move(face)});
    }
  }
  return out;
}

// s(g) = sum over flats f and acyclic orientations o of g/f of
// (-1)^{c(f)} g(f,o), with c counting isolated vertices.
inline FormalSum<Graph> antipode_graph(const Graph& g) {
  FormalSum<Graph> out;
  for (auto& zf : zonotope_faces(g)) {
    int c = flat_components(g, zf.flat);
    out.add(encode_graph(zf.face_graph), zf.face_graph, (c % 2 == 0) ? Rat(1) : Rat(-1));
  }
  return out;
}

// s(g) = sum over flats f of (-1)^{c(f)} a(g/f) f for simple g, where a is
// the number of acyclic orientations.
inline FormalSum<Graph> antipode_simple_graph(const Graph& g) {
  FormalSum<Graph> out;
  for (auto& f : graph_flats(g)) {
    Graph fg = Graph::empty(g.labels);
    for (auto& [i, j] : f) fg.em_ref(i, j) = g.em(i, j);
    int c = flat_components(g, f);
    Rat a((long)acyclic_orientations(contract_flat(g, f)).size());
    out.add(encode_graph(fg), fg, ((c % 2 == 0) ? a : -a));
  }
  return out;
}

// --- chromatic invariant ---------------------------------------------------

inline Character<SG> edgeless_character() {
  return [](const Graph& g) {
    for (int m : g.pairs)
      if (m) return Rat(0);
    return Rat(1);
  };
}

inline Int chromatic(const Graph& g, int m) {
  int n = g.n();
  if (n == 0) return 1;
  Int count = 0;
  std::vector<int> y(n, 1);
  while (true) {
    bool proper = true;
    for (int i = 0; i < n && proper; ++i)
      for (int j = i + 1; j < n && proper; ++j)
        if (g.em(i, j) && y[i] == y[j]) proper = false;
    if (proper) ++count;
    int i = 0;
    while (i < n && y[i] == m) y[i++] = 1;
    if (i == n) break;
    ++y[i];
  }
  return count;
}

// Number of pairs (m-coloring y, acyclic orientation o) with y weakly
// increasing along every arc of o.
inline Int compatible_pairs(const Graph& g, int m) {
  int n = g.n();
  if (n == 0) return 1;
  auto orients = acyclic_orientations(g);
  Int count = 0;
  std::vector<int> y(n, 1);
  while (true) {
    for (auto& o : orients) {
      bool ok = true;
      for (auto& [u, v] : o)
        if (y[u] > y[v]) { ok = false; break; }
      if (ok) ++count;
    }
    int i = 0;
    while (i < n && y[i] == m) y[i++] = 1;
    if (i == n) break;
    ++y[i];
  }
  return count;
}

// --- Humpert-Martin characters --------------------------------------------

// Generalized binomial coefficient binom(c, j) for integer c.
inline Rat binomial_z(long c, unsigned j) {
  Rat r = 1;
  for (unsigned i = 0; i < j; ++i) r *= Rat(c - (long)i, (long)i + 1);
  return r;
}

// The character xi_k(g) = k^{|I|} convolved with the c-th convolution power
// of the edgeless character, evaluated on g.
inline Rat humpert_martin_value(const Rat& k, long c, const Graph& g) {
  Character<SG> xi = [k](const Graph& h) { return rat_pow(k, h.n()); };
  Character<SG> zeta = edgeless_character();
  Character<SG> acc = xi;
  if (c >= 0) {
    for (long i = 0; i < c; ++i) acc = convolve<SG>(acc, zeta);
  } else {
    Character<SG> inv = character_inverse<SG>(zeta);
    for (long i = 0; i < -c; ++i) acc = convolve<SG>(acc, inv);
  }
  return acc(g);
}

// n! [x^n] e^{kx}(1+x)^c
inline Rat humpert_martin_egf(const Rat& k, long c, unsigned n) {
  Rat acc = 0;
  for (unsigned j = 0; j <= n; ++j)
    acc += Rat(factorial(n)) / Rat(factorial(n - j)) * rat_pow(k, n - j) * binomial_z(c, j);
  return acc;
}

inline Graph complete_graph(int n) {
  Graph g = Graph::empty(default_labels(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.em_ref(i, j) = 1;
  return g;
}

}  // namespace hopfcalc
