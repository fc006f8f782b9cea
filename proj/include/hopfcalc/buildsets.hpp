#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bits.hpp"
#include "formal_sum.hpp"
#include "graphs.hpp"
#include "hopf.hpp"
#include "hypergraphs.hpp"
#include "labels.hpp"

namespace hopfcalc {

// Building set: a family of nonempty "connected" subsets containing all
// singletons and closed under union of overlapping pairs.
struct BuildingSet {
  std::vector<std::string> labels;
  std::vector<Mask> sets;  // sorted, nonempty, no repeats

  int n() const { return (int)labels.size(); }

  void canonicalize() {
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  }
};

inline bool is_building_set(const BuildingSet& b) {
  std::set<Mask> have(b.sets.begin(), b.sets.end());
  if (have.count(0)) return false;
  for (int i = 0; i < b.n(); ++i)
    if (!have.count(Mask(1) << i)) return false;
  for (Mask x : b.sets)
    for (Mask y : b.sets)
      if ((x & y) && !have.count(x | y)) return false;
  return true;
}

inline std::string encode_buildset(const BuildingSet& b) {
  std::string out = "bs{" + join_labels(b.labels, full_mask(b.n())) + "|";
  bool first = true;
  for (Mask s : b.sets) {
    if (!first) out += ",";
    out += join_labels(b.labels, s, "");
    first = false;
  }
  return out + "}";
}

// The maximal sets; they partition the ground set.
inline std::vector<Mask> bs_components(const BuildingSet& b) {
  std::vector<Mask> out;
  for (Mask s : b.sets) {
    bool maximal = true;
    for (Mask t : b.sets)
      if (t != s && (t & s) == s) maximal = false;
    if (maximal) out.push_back(s);
  }
  return out;
}

inline Hypergraph bs_as_hypergraph(const BuildingSet& b) {
  Hypergraph h;
  h.labels = b.labels;
  h.mult.assign(size_t(1) << b.n(), 0);
  h.mult[0] = 1;
  for (Mask s : b.sets) h.mult[s] = 1;
  return h;
}

inline BuildingSet bs_from_hypergraph(const Hypergraph& h) {
  BuildingSet b;
  b.labels = h.labels;
  for (Mask s = 1; s < (Mask(1) << h.n()); ++s)
    if (h.mult[s]) b.sets.push_back(s);
  return b;
}

// B|_S = members inside S; B/_S = nonempty traces on T. Same operations as
// for simple hypergraphs.
struct BS {
  using Obj = BuildingSet;
  static std::string name() { return "building-set"; }
  static std::string encode(const Obj& b) { return encode_buildset(b); }
  static Obj product(const Obj& a, const Obj& b) {
    LabelMerge lm = merge_labels(a.labels, b.labels);
    Obj out;
    out.labels = lm.labels;
    for (Mask s : a.sets) out.sets.push_back(remap_mask(s, lm.map_a));
    for (Mask s : b.sets) out.sets.push_back(remap_mask(s, lm.map_b));
    out.canonicalize();
    return out;
  }
  static std::optional<std::pair<Obj, Obj>> coproduct(const Obj& b, Mask s) {
    Mask t = full_mask(b.n()) & ~s;
    Obj res, con;
    res.labels = sub_labels(b.labels, s);
    con.labels = sub_labels(b.labels, t);
    std::vector<int> smap = subindex(full_mask(b.n()), s);
    std::vector<int> tmap = subindex(full_mask(b.n()), t);
    for (Mask x : b.sets) {
      if ((x & s) == x) res.sets.push_back(remap_mask(x, smap));
      if (x & t) con.sets.push_back(remap_mask(x & t, tmap));
    }
    res.canonicalize();
    con.canonicalize();
    return std::make_pair(std::move(res), std::move(con));
  }
};

// Nested sets: pairwise nested-or-disjoint, no union of >= 2 disjoint members
// is connected, and all components present. Returned with members sorted.
inline std::vector<std::vector<Mask>> nested_sets(const BuildingSet& b) {
  std::vector<Mask> comps = bs_components(b);
  std::set<Mask> member(b.sets.begin(), b.sets.end());
  std::set<Mask> comp_set(comps.begin(), comps.end());
  std::vector<Mask> cand;
  for (Mask s : b.sets)
    if (!comp_set.count(s)) cand.push_back(s);

  auto admissible = [&](const std::vector<Mask>& cur, Mask tau) {
    for (Mask s : cur)
      if ((s & tau) && (s & tau) != s && (s & tau) != tau) return false;
    std::vector<Mask> partners;
    for (Mask s : cur)
      if (!(s & tau)) partners.push_back(s);
    for (Mask pick = 1; pick < (Mask(1) << partners.size()); ++pick) {
      Mask u = tau;
      bool disjoint = true;
      for (size_t i = 0; i < partners.size() && disjoint; ++i)
        if ((pick >> i) & 1) {
          if (u & partners[i]) disjoint = false;
          u |= partners[i];
        }
      if (disjoint && member.count(u)) return false;
    }
    return true;
  };

  std::vector<std::vector<Mask>> out;
  std::vector<Mask> cur(comps);
  std::function<void(size_t)> rec = [&](size_t i) {
    std::vector<Mask> sorted(cur);
    std::sort(sorted.begin(), sorted.end());
    out.push_back(std::move(sorted));
    for (size_t j = i; j < cand.size(); ++j)
      if (admissible(cur, cand[j])) {
        cur.push_back(cand[j]);
        rec(j + 1);
        cur.pop_back();
      }
  };
  rec(0);
  return out;
}

// B(N): for each member tau, restrict to tau and contract the union of its
// proper subtubes; the pieces live on disjoint essential sets.
inline BuildingSet bs_of_nested(const BuildingSet& b, const std::vector<Mask>& nested) {
  std::set<Mask> member(b.sets.begin(), b.sets.end());
  BuildingSet out;
  out.labels = b.labels;
  for (Mask tau : nested) {
    Mask below = 0;
    for (Mask s : nested)
      if (s != tau && (s & tau) == s) below |= s;
    for (Mask x : b.sets)
      if ((x & tau) == x && (x & ~below)) out.sets.push_back(x & ~below);
  }
  out.canonicalize();
  return out;
}

// s(B) = sum over nested sets N of (-1)^{|N|} B(N).
inline FormalSum<BuildingSet> antipode_bs(const BuildingSet& b) {
  FormalSum<BuildingSet> out;
  for (auto& nested : nested_sets(b)) {
    BuildingSet g = bs_of_nested(b, nested);
    out.add(encode_buildset(g), g, (nested.size() % 2 == 0) ? Rat(1) : Rat(-1));
  }
  return out;
}

// --- ripping and sewing ----------------------------------------------------

// w/_S on T: u,v in T are joined iff w has an S-thread between them (a path
// whose intermediate vertices all lie in S).
inline Graph sew_through(const Graph& w, Mask s) {
  int n = w.n();
  Mask t = full_mask(n) & ~s;
  std::vector<int> comp(n, -1);
  {
    std::vector<Mask> adj(n, 0);
    for (int i : bits_of(s))
      for (int j : bits_of(s))
        if (i < j && w.em(i, j)) {
          adj[i] |= Mask(1) << j;
          adj[j] |= Mask(1) << i;
        }
    int c = 0;
    for (int i : bits_of(s))
      if (comp[i] < 0) {
        std::vector<int> stack{i};
        comp[i] = c;
        while (!stack.empty()) {
          int v = stack.back();
          stack.pop_back();
          for (int u : bits_of(adj[v]))
            if (comp[u] < 0) {
              comp[u] = c;
              stack.push_back(u);
            }
        }
        ++c;
      }
  }
  std::vector<Mask> touch;  // touch[c] = T-vertices adjacent to S-component c
  for (int i : bits_of(s)) {
    if ((size_t)comp[i] >= touch.size()) touch.resize(comp[i] + 1, 0);
    for (int u : bits_of(t))
      if (w.em(i, u)) touch[comp[i]] |= Mask(1) << u;
  }
  Graph out = Graph::empty(sub_labels(w.labels, t));
  std::vector<int> tmap = subindex(full_mask(n), t);
  for (int u : bits_of(t))
    for (int v : bits_of(t)) {
      if (u >= v) continue;
      bool joined = w.em(u, v) > 0;
      for (Mask c : touch)
        if (((c >> u) & 1) && ((c >> v) & 1)) joined = true;
      if (joined) out.em_ref(tmap[u], tmap[v]) = 1;
    }
  return out;
}

// Simple graphs under ripping (induced subgraph) and sewing.
struct W {
  using Obj = Graph;
  static std::string name() { return "rip-sew-graph"; }
  static std::string encode(const Obj& g) { return encode_graph(g); }
  static Obj product(const Obj& a, const Obj& b) { return graph_union(a, b); }
  static std::optional<std::pair<Obj, Obj>> coproduct(const Obj& g, Mask s) {
    return std::make_pair(graph_coproduct(g, s).first, sew_through(g, s));
  }
};

inline bool connected_in(const Graph& w, Mask j) {
  if (!j) return false;
  std::vector<Mask> adj(w.n(), 0);
  for (int i : bits_of(j))
    for (int k : bits_of(j))
      if (i < k && w.em(i, k)) {
        adj[i] |= Mask(1) << k;
        adj[k] |= Mask(1) << i;
      }
  int first = bits_of(j).front();
  Mask seen = Mask(1) << first;
  std::vector<int> stack{first};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : bits_of(adj[v]))
      if (!((seen >> u) & 1)) {
        seen |= Mask(1) << u;
        stack.push_back(u);
      }
  }
  return seen == j;
}

// The graphical building set: all vertex subsets inducing a connected graph.
inline BuildingSet tubes(const Graph& w) {
  BuildingSet b;
  b.labels = w.labels;
  for (Mask j = 1; j < (Mask(1) << w.n()); ++j)
    if (connected_in(w, j)) b.sets.push_back(j);
  return b;
}

inline std::vector<std::vector<Mask>> tubings(const Graph& w) { return nested_sets(tubes(w)); }

// w(t): restrict to each tube and sew through the union of its proper
// subtubes; the pieces live on the essential sets, which partition I.
inline Graph w_of_tubing(const Graph& w, const std::vector<Mask>& t) {
  Graph out = Graph::empty(w.labels);
  for (Mask tau : t) {
    Mask below = 0;
    for (Mask s : t)
      if (s != tau && (s & tau) == s) below |= s;
    Graph res = graph_coproduct(w, tau).first;
    Graph piece = sew_through(res, remap_mask(below, subindex(full_mask(w.n()), tau)));
    std::vector<int> pback = bits_of(tau & ~below);
    for (int a = 0; a < piece.n(); ++a)
      for (int bidx = a + 1; bidx < piece.n(); ++bidx)
        if (piece.em(a, bidx)) out.em_ref(pback[a], pback[bidx]) = 1;
  }
  return out;
}

// s(w) = sum over tubings t of (-1)^{|t|} w(t).
inline FormalSum<Graph> antipode_w(const Graph& w) {
  FormalSum<Graph> out;
  for (auto& t : tubings(w)) {
    Graph g = w_of_tubing(w, t);
    out.add(encode_graph(g), g, (t.size() % 2 == 0) ? Rat(1) : Rat(-1));
  }
  return out;
}

// --- Loday associahedra ----------------------------------------------------

// The hypergraph of intervals of a linear order, given as the sequence of
// ground indices in order.
inline Hypergraph loday_hypergraph(std::vector<std::string> labels, const std::vector<int>& order) {
  Hypergraph h;
  h.labels = std::move(labels);
  h.mult.assign(size_t(1) << h.n(), 0);
  h.mult[0] = 1;
  for (size_t i = 0; i < order.size(); ++i) {
    Mask m = 0;
    for (size_t j = i; j < order.size(); ++j) {
      m |= Mask(1) << order[j];
      h.mult[m] = 1;
    }
  }
  return h;
}

inline BoolFn loday_associahedron(const std::vector<std::string>& labels,
                                  const std::vector<int>& order) {
  return hypergraphic_polytope(loday_hypergraph(labels, order));
}

inline BoolFn loday_associahedron(int n) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  return loday_associahedron(default_labels(n), order);
}

}  // namespace hopfcalc
