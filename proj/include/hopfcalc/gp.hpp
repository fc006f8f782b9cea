#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "boolfn.hpp"
#include "hopf.hpp"
#include "linalg.hpp"
#include "preposet.hpp"

namespace hopfcalc {

// --- base polytope P(z) = {x : x(A) <= z(A), x(I) = z(I)} -----------------

// Greedy point along a linear order (order[0] gets filled first). Defined
// when every prefix has finite value.
inline std::optional<std::vector<Rat>> greedy_vertex(const BoolFn& z,
                                                     const std::vector<int>& order) {
  int n = z.n();
  std::vector<Rat> x(n);
  Mask pre = 0;
  for (int i : order) {
    Mask nxt = pre | (Mask(1) << i);
    if (z[nxt].inf || z[pre].inf) return std::nullopt;
    x[i] = z[nxt].v - z[pre].v;
    pre = nxt;
  }
  if (pre != full_mask(n)) return std::nullopt;
  return x;
}

inline std::string point_key(const std::vector<Rat>& x) {
  std::string k;
  for (auto& v : x) k += v.get_str() + ";";
  return k;
}

// All vertices, as greedy points over the orders with finite prefix chains.
inline std::vector<std::vector<Rat>> vertices(const BoolFn& z) {
  int n = z.n();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::map<std::string, std::vector<Rat>> seen;
  do {
    auto v = greedy_vertex(z, order);
    if (v) seen.emplace(point_key(*v), *v);
  } while (std::next_permutation(order.begin(), order.end()));
  std::vector<std::vector<Rat>> out;
  for (auto& [k, v] : seen) out.push_back(v);
  return out;
}

// Dimension of P(z) from its implicit equalities: the constraint x(A) <= z(A)
// is tight on all of P(z) exactly when z(A) and z(I\A) are finite with
// z(A) + z(I\A) = z(I). dim = n - rank of the tight indicator vectors.
inline int polytope_dim(const BoolFn& z) {
  int n = z.n();
  Mask full = full_mask(n);
  std::vector<std::vector<Rat>> rows;
  auto push = [&](Mask a) {
    std::vector<Rat> r(n, Rat(0));
    for (int i : bits_of(a)) r[i] = 1;
    rows.push_back(std::move(r));
  };
  push(full);
  for (Mask a = 1; a < full; ++a) {
    Mask b = full & ~a;
    if (!z[a].inf && !z[b].inf && z[a].v + z[b].v == z[full].v) push(a);
  }
  return n - matrix_rank(std::move(rows));
}

// --- faces ----------------------------------------------------------------

struct FaceRecord {
  BoolFn fn;
  int dim = 0;
  std::vector<std::vector<Mask>> witnesses;  // compositions selecting this face
};

inline std::string fn_table_key(const BoolFn& z) {
  std::string k;
  for (Mask m = 1; m < (Mask(1) << z.n()); ++m) k += z[m].str() + ";";
  return k;
}

// The face selected by a set composition: mu(Delta_{S1,...,Sk}(z)), absent
// when an intermediate restriction is infinite (direction unbounded on P(z)).
inline std::optional<BoolFn> face_of_composition(const BoolFn& z,
                                                 const std::vector<Mask>& blocks) {
  auto hc = higher_coproduct<SF>(z, blocks);
  if (!hc) return std::nullopt;
  BoolFn f = (*hc)[0];
  for (size_t i = 1; i < hc->size(); ++i) f = SF::product(f, (*hc)[i]);
  return f;
}

// All nonempty faces of P(z), keyed by the face's value table. Each face of
// a generalized permutahedron arises from at least one set composition.
inline std::map<std::string, FaceRecord> enumerate_faces(const BoolFn& z) {
  std::map<std::string, FaceRecord> out;
  int n = z.n();
  if (n == 0) {
    out.emplace("", FaceRecord{z, 0, {{}}});
    return out;
  }
  for_each_composition(full_mask(n), [&](const std::vector<Mask>& blocks) {
    auto f = face_of_composition(z, blocks);
    if (!f) return;
    std::string key = fn_table_key(*f);
    auto it = out.find(key);
    if (it == out.end()) {
      FaceRecord rec;
      rec.fn = *f;
      rec.dim = polytope_dim(*f);
      rec.witnesses.push_back(blocks);
      out.emplace(std::move(key), std::move(rec));
    } else {
      it->second.witnesses.push_back(blocks);
    }
  });
  return out;
}

// Face census: counts of faces by dimension, index d = number of d-faces.
inline std::vector<long> face_census(const BoolFn& z) {
  auto faces = enumerate_faces(z);
  int top = 0;
  for (auto& [k, r] : faces) top = std::max(top, r.dim);
  std::vector<long> census(top + 1, 0);
  for (auto& [k, r] : faces) ++census[r.dim];
  return census;
}

// Antipode in the geometric form: s(z) = (-1)^n sum_{faces q} (-1)^{dim q} q.
inline FormalSum<BoolFn> antipode_gp(const BoolFn& z) {
  FormalSum<BoolFn> out;
  int n = z.n();
  for (auto& [key, rec] : enumerate_faces(z)) {
    Rat sign = ((n + rec.dim) % 2 == 0) ? Rat(1) : Rat(-1);
    out.add(SF::encode(rec.fn), rec.fn, sign);
  }
  return out;
}

// --- normal equivalence ---------------------------------------------------

// Partition of the set-composition list (in enumeration order) by which face
// each composition selects; vanished compositions share the sentinel class.
inline std::vector<std::vector<int>> normal_fan_key(const BoolFn& z) {
  std::map<std::string, std::vector<int>> classes;
  int idx = 0;
  for_each_composition(full_mask(z.n()), [&](const std::vector<Mask>& blocks) {
    auto f = face_of_composition(z, blocks);
    classes[f ? fn_table_key(*f) : std::string("-")].push_back(idx);
    ++idx;
  });
  std::vector<std::vector<int>> key;
  for (auto& [k, v] : classes) key.push_back(v);
  std::sort(key.begin(), key.end());
  return key;
}

// Cheaper key: partition of the n! linear orders by greedy point. Maximal
// normal cones are unions of these chambers, so equality of this partition
// is implied by normal equivalence; for generalized permutahedra the two
// partitions determine each other (cross-checked in the tests).
inline std::vector<std::vector<int>> chamber_key(const BoolFn& z) {
  int n = z.n();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::map<std::string, std::vector<int>> classes;
  int idx = 0;
  do {
    auto v = greedy_vertex(z, order);
    classes[v ? point_key(*v) : std::string("-")].push_back(idx);
    ++idx;
  } while (std::next_permutation(order.begin(), order.end()));
  std::vector<std::vector<int>> key;
  for (auto& [k, v] : classes) key.push_back(v);
  std::sort(key.begin(), key.end());
  return key;
}

inline bool normally_equivalent(const BoolFn& a, const BoolFn& b) {
  if (a.n() != b.n()) return false;
  return normal_fan_key(a) == normal_fan_key(b);
}

// Relabel ground elements: element i of z becomes element perm[i].
inline BoolFn permute_ground(const BoolFn& z, const std::vector<int>& perm) {
  BoolFn out = z;  // keep labels
  int n = z.n();
  for (Mask m = 0; m < (Mask(1) << n); ++m) {
    Mask img = 0;
    for (int i : bits_of(m)) img |= Mask(1) << perm[i];
    out.vals[img] = z.vals[m];
  }
  return out;
}

// Normally equivalent after some relabeling of the ground set.
inline bool quasinormally_equivalent(const BoolFn& a, const BoolFn& b) {
  if (a.n() != b.n()) return false;
  int n = a.n();
  auto ka = normal_fan_key(a);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (normal_fan_key(permute_ground(b, perm)) == ka) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// --- basic character and invariant ----------------------------------------

inline Character<SF> basic_character() {
  return [](const BoolFn& z) { return is_point(z) ? Rat(1) : Rat(0); };
}

// Level-set composition of y : I -> {1..n}, blocks in decreasing value.
inline std::vector<Mask> level_set_composition(const std::vector<int>& y, int top) {
  std::vector<Mask> blocks;
  for (int v = top; v >= 1; --v) {
    Mask b = 0;
    for (size_t i = 0; i < y.size(); ++i)
      if (y[i] == v) b |= Mask(1) << i;
    if (b) blocks.push_back(b);
  }
  return blocks;
}

// Number of y : I -> [m] whose maximum face on P(z) is a single point.
inline Int count_generic_directions(const BoolFn& z, int m) {
  int n = z.n();
  if (n == 0) return 1;
  Int count = 0;
  std::vector<int> y(n, 1);
  while (true) {
    auto f = face_of_composition(z, level_set_composition(y, m));
    if (f && is_point(*f)) ++count;
    int i = 0;
    while (i < n && y[i] == m) y[i++] = 1;
    if (i == n) break;
    ++y[i];
  }
  return count;
}

// Sum over y : I -> [m] of the number of vertices of the y-maximum face,
// where directions unbounded above on P(z) contribute nothing.
inline Int sum_face_vertex_counts(const BoolFn& z, int m) {
  int n = z.n();
  if (n == 0) return 1;
  Int total = 0;
  std::vector<int> y(n, 1);
  while (true) {
    auto f = face_of_composition(z, level_set_composition(y, m));
    if (f) total += (long)vertices(*f).size();
    int i = 0;
    while (i < n && y[i] == m) y[i++] = 1;
    if (i == n) break;
    ++y[i];
  }
  return total;
}

// --- hypergraph readback (Rota-style test) --------------------------------

struct RelationalResult {
  bool ok = false;
  // multiplicity y(K) for each nonempty K, indexed by mask, when ok
  std::vector<Int> y;
  Mask witness = 0;  // a set whose readback coefficient fails, when !ok
  Rat witness_value = 0;
};

// Decide whether z(J) = sum_{K cap J nonempty} y(K) for some multiplicity
// function y : 2^I \ {0} -> Z>=0, and recover y. Readback:
//   y(I \ B) = - sum_{K >= B} (-1)^{|K \ B|} z(K).
inline RelationalResult relational_test(const BoolFn& z) {
  RelationalResult res;
  int n = z.n();
  Mask full = full_mask(n);
  if (!is_finite(z)) return res;
  res.y.assign(size_t(1) << n, 0);
  for (Mask b = 0; b < full; ++b) {
    Rat acc = 0;
    for_each_subset(full & ~b, [&](Mask extra) {
      Rat sign = (popcount(extra) % 2 == 0) ? Rat(1) : Rat(-1);
      acc += sign * z[b | extra].v;
    });
    acc = -acc;
    Mask k = full & ~b;
    if (acc < 0 || acc.get_den() != 1) {
      res.witness = k;
      res.witness_value = acc;
      return res;
    }
    res.y[k] = acc.get_num();
  }
  res.ok = true;
  return res;
}

// --- {0,inf} functions and preposets --------------------------------------

// The lower-set indicator function of a preposet: 0 on lower sets, inf
// elsewhere. Its base polyhedron is the cone of the preposet.
inline BoolFn lower_fn(const Preposet& p) {
  BoolFn z = BoolFn::zero(p.labels);
  for (Mask m = 1; m < (Mask(1) << p.n()); ++m)
    if (!p.is_lower_set(m)) z[m] = ExtQ::infinity();
  return z;
}

// Recover the preposet from a {0,inf} submodular function: the support
// {A : z(A) = 0} is a lattice of sets, and i <= j exactly when every
// support set containing j contains i.
inline std::optional<Preposet> preposet_from_01inf(const BoolFn& z) {
  int n = z.n();
  Mask full = full_mask(n);
  if (!is_01inf(z) || z[0].inf || z[full].inf) return std::nullopt;
  std::vector<Mask> supp;
  for (Mask m = 0; m <= full; ++m) {
    if (!z[m].inf) supp.push_back(m);
    if (m == full) break;
  }
  for (Mask a : supp)
    for (Mask b : supp)
      if (z[a | b].inf || z[a & b].inf) return std::nullopt;
  Preposet p;
  p.labels = z.labels;
  p.leq.assign(n, 0);
  for (int j = 0; j < n; ++j) {
    Mask forced = full;
    for (Mask a : supp)
      if ((a >> j) & 1) forced &= a;
    p.leq[j] = forced;
  }
  return p;
}

}  // namespace hopfcalc
