#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gp.hpp"
#include "hopf.hpp"
#include "preposet.hpp"

namespace hopfcalc {

// Posets are stored as preposets whose relation is antisymmetric.
using Poset = Preposet;

inline Poset poset_from_strict_pairs(std::vector<std::string> labels,
                                     const std::vector<std::pair<int, int>>& rels) {
  Poset p;
  p.labels = std::move(labels);
  int n = p.n();
  p.leq.assign(n, 0);
  for (int i = 0; i < n; ++i) p.leq[i] |= Mask(1) << i;
  for (auto& [i, j] : rels) p.leq[j] |= Mask(1) << i;
  // transitive closure
  for (bool changed = true; changed;) {
    changed = false;
    for (int j = 0; j < n; ++j)
      for (int i : bits_of(p.leq[j]))
        if ((p.leq[i] & ~p.leq[j]) != 0) {
          p.leq[j] |= p.leq[i];
          changed = true;
        }
  }
  return p;
}

inline std::vector<std::pair<int, int>> strict_pairs(const Poset& p) {
  std::vector<std::pair<int, int>> out;
  for (int j = 0; j < p.n(); ++j)
    for (int i : bits_of(p.leq[j]))
      if (i != j) out.push_back({i, j});  // i < j in p
  return out;
}

inline Poset induced_poset(const Poset& p, Mask s) {
  Poset out;
  out.labels = sub_labels(p.labels, s);
  std::vector<int> map = subindex(full_mask(p.n()), s);
  out.leq.assign(out.n(), 0);
  for (int j : bits_of(s))
    for (int i : bits_of(p.leq[j] & s)) out.leq[map[j]] |= Mask(1) << map[i];
  return out;
}

struct P {
  using Obj = Poset;
  static std::string name() { return "poset"; }
  static std::string encode(const Obj& p) { return p.encode(); }

  static Obj product(const Obj& a, const Obj& b) {
    LabelMerge lm = merge_labels(a.labels, b.labels);
    Obj out;
    out.labels = lm.labels;
    out.leq.assign(out.n(), 0);
    for (int j = 0; j < a.n(); ++j) out.leq[lm.map_a[j]] = remap_mask(a.leq[j], lm.map_a);
    for (int j = 0; j < b.n(); ++j) out.leq[lm.map_b[j]] = remap_mask(b.leq[j], lm.map_b);
    return out;
  }

  // Nonzero only when S is a lower set; then both factors are induced.
  static std::optional<std::pair<Obj, Obj>> coproduct(const Obj& p, Mask s) {
    if (!p.is_lower_set(s)) return std::nullopt;
    Mask t = full_mask(p.n()) & ~s;
    return std::make_pair(induced_poset(p, s), induced_poset(p, t));
  }
};

// Generating rays of the poset cone, one per cover relation: e_j - e_i for
// each cover i <. j.
inline std::vector<std::pair<int, int>> cover_relations(const Poset& p) {
  std::vector<std::pair<int, int>> covers;
  for (auto& [i, j] : strict_pairs(p)) {
    bool cover = true;
    for (int k : bits_of(p.leq[j] & ~p.leq[i]))
      if (k != j && p.le(i, k)) { cover = false; break; }
    if (cover) covers.push_back({i, j});
  }
  return covers;
}

inline std::vector<std::vector<Rat>> poset_cone_rays(const Poset& p) {
  std::vector<std::vector<Rat>> rays;
  for (auto& [i, j] : cover_relations(p)) {
    std::vector<Rat> r(p.n(), Rat(0));
    r[j] = 1;
    r[i] = -1;
    rays.push_back(std::move(r));
  }
  return rays;
}

// Simple cycles of the comparability graph, each listed once (smallest
// vertex first, lower second-vertex orientation).
inline std::vector<std::vector<int>> comparability_cycles(const Poset& p) {
  int n = p.n();
  std::vector<Mask> adj(n, 0);
  for (auto& [i, j] : strict_pairs(p)) {
    adj[i] |= Mask(1) << j;
    adj[j] |= Mask(1) << i;
  }
  std::vector<std::vector<int>> cycles;
  std::vector<int> path;
  std::function<void(int, int, Mask)> dfs = [&](int start, int v, Mask used) {
    for (int u : bits_of(adj[v])) {
      if (u == start && path.size() >= 3) {
        if (path[1] < path.back()) cycles.push_back(path);
        continue;
      }
      if (u <= start || (used & (Mask(1) << u))) continue;
      path.push_back(u);
      dfs(start, u, used | (Mask(1) << u));
      path.pop_back();
    }
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    dfs(s, s, Mask(1) << s);
  }
  return cycles;
}

// The subposet of p given by a subset of its strict relations.
inline Poset subposet_from(const Poset& p, const std::vector<std::pair<int, int>>& rels,
                           Mask picked) {
  Poset q;
  q.labels = p.labels;
  q.leq.assign(p.n(), 0);
  for (int i = 0; i < p.n(); ++i) q.leq[i] |= Mask(1) << i;
  for (size_t e = 0; e < rels.size(); ++e)
    if ((picked >> e) & 1) q.leq[rels[e].second] |= Mask(1) << rels[e].first;
  return q;
}

// Positive subposets: transitively closed subsets of the strict relations of
// p such that around every simple circuit, taking all down-edges forces all
// up-edges and vice versa.
inline std::vector<Poset> positive_subposets(const Poset& p) {
  auto rels = strict_pairs(p);
  auto cycles = comparability_cycles(p);
  // per cycle, the relation indices traversed upward resp. downward
  std::vector<std::pair<std::vector<int>, std::vector<int>>> cyc_edges;
  auto rel_index = [&](int i, int j) {
    for (size_t e = 0; e < rels.size(); ++e)
      if (rels[e].first == i && rels[e].second == j) return (int)e;
    return -1;
  };
  for (auto& cyc : cycles) {
    std::vector<int> up, down;
    for (size_t t = 0; t < cyc.size(); ++t) {
      int a = cyc[t], b = cyc[(t + 1) % cyc.size()];
      if (p.le(a, b))
        up.push_back(rel_index(a, b));
      else
        down.push_back(rel_index(b, a));
    }
    cyc_edges.push_back({std::move(up), std::move(down)});
  }
  std::vector<Poset> out;
  for (Mask picked = 0; picked < (Mask(1) << rels.size()); ++picked) {
    Poset q = subposet_from(p, rels, picked);
    bool ok = true;
    for (int j = 0; j < p.n() && ok; ++j)
      for (int i : bits_of(q.leq[j]))
        if ((q.leq[i] & ~q.leq[j]) != 0) ok = false;
    if (!ok) continue;
    auto has = [&](int e) { return e >= 0 && ((picked >> e) & 1); };
    for (auto& [up, down] : cyc_edges) {
      bool all_up = true, all_down = true;
      for (int e : up) all_up &= has(e);
      for (int e : down) all_down &= has(e);
      if (all_down && !all_up) { ok = false; break; }
      if (all_up && !all_down) { ok = false; break; }
    }
    if (ok) out.push_back(std::move(q));
  }
  return out;
}

// s(p) = sum over positive subposets q of (-1)^{c(q)} q, c(q) counting the
// connected components of the Hasse diagram of q (isolated vertices too).
inline FormalSum<Poset> antipode_poset(const Poset& p) {
  FormalSum<Poset> out;
  for (auto& q : positive_subposets(p)) {
    int c = q.comparability_components();
    out.add(q.encode(), q, (c % 2 == 0) ? Rat(1) : Rat(-1));
  }
  return out;
}

// --- order polynomial -----------------------------------------------------

inline Character<P> antichain_character() {
  return [](const Poset& p) { return strict_pairs(p).empty() ? Rat(1) : Rat(0); };
}

// Number of strictly order-preserving maps y : p -> [m].
inline Int order_polynomial_strict(const Poset& p, int m) {
  int n = p.n();
  if (n == 0) return 1;
  auto rels = strict_pairs(p);
  Int count = 0;
  std::vector<int> y(n, 1);
  while (true) {
    bool ok = true;
    for (auto& [i, j] : rels)
      if (y[i] >= y[j]) { ok = false; break; }
    if (ok) ++count;
    int i = 0;
    while (i < n && y[i] == m) y[i++] = 1;
    if (i == n) break;
    ++y[i];
  }
  return count;
}

// Number of weakly order-preserving maps y : p -> [m].
inline Int order_polynomial_weak(const Poset& p, int m) {
  int n = p.n();
  if (n == 0) return 1;
  auto rels = strict_pairs(p);
  Int count = 0;
  std::vector<int> y(n, 1);
  while (true) {
    bool ok = true;
    for (auto& [i, j] : rels)
      if (y[i] > y[j]) { ok = false; break; }
    if (ok) ++count;
    int i = 0;
    while (i < n && y[i] == m) y[i++] = 1;
    if (i == n) break;
    ++y[i];
  }
  return count;
}

// Strict order polynomial through the character engine.
inline Poly order_polynomial(const Poset& p) {
  return polynomial_invariant<P>(antichain_character(), p);
}

}  // namespace hopfcalc
