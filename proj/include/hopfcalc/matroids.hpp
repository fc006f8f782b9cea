#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "gp.hpp"
#include "hopf.hpp"

namespace hopfcalc {

struct Matroid {
  std::vector<std::string> labels;
  std::vector<Mask> bases;  // sorted, distinct, equal popcount

  int n() const { return (int)labels.size(); }
  int rank() const { return bases.empty() ? 0 : popcount(bases[0]); }

  int rank_of(Mask a) const {
    int r = 0;
    for (Mask b : bases) r = std::max(r, popcount(b & a));
    return r;
  }
  bool independent(Mask a) const { return rank_of(a) == popcount(a); }

  void canonicalize() { std::sort(bases.begin(), bases.end()); }
};

inline bool exchange_axiom(const Matroid& m) {
  if (m.bases.empty()) return false;
  int r = popcount(m.bases[0]);
  for (Mask b : m.bases)
    if (popcount(b) != r) return false;
  for (Mask b1 : m.bases)
    for (Mask b2 : m.bases)
      for (int x : bits_of(b1 & ~b2)) {
        bool found = false;
        Mask without = b1 & ~(Mask(1) << x);
        for (int y : bits_of(b2 & ~b1))
          if (std::binary_search(m.bases.begin(), m.bases.end(), without | (Mask(1) << y))) {
            found = true;
            break;
          }
        if (!found) return false;
      }
  return true;
}

inline std::string encode_matroid(const Matroid& m) {
  std::string out = "m{" + join_labels(m.labels, full_mask(m.n())) + "|";
  bool first = true;
  for (Mask b : m.bases) {
    if (!first) out += ",";
    out += b ? join_labels(m.labels, b, "") : std::string("-");
    first = false;
  }
  return out + "}";
}

struct M {
  using Obj = Matroid;
  static std::string name() { return "matroid"; }
  static std::string encode(const Obj& m) { return encode_matroid(m); }

  static Obj product(const Obj& a, const Obj& b) {
    LabelMerge lm = merge_labels(a.labels, b.labels);
    Obj out;
    out.labels = lm.labels;
    for (Mask ba : a.bases)
      for (Mask bb : b.bases)
        out.bases.push_back(remap_mask(ba, lm.map_a) | remap_mask(bb, lm.map_b));
    out.canonicalize();
    return out;
  }

  // (m|_S, m/_S): restriction to S and contraction by S.
  static std::optional<std::pair<Obj, Obj>> coproduct(const Obj& m, Mask s) {
    int n = m.n();
    Mask t = full_mask(n) & ~s;
    std::vector<int> smap = subindex(full_mask(n), s);
    std::vector<int> tmap = subindex(full_mask(n), t);
    int rs = m.rank_of(s);
    Obj res, con;
    res.labels = sub_labels(m.labels, s);
    con.labels = sub_labels(m.labels, t);
    for_each_subset(s, [&](Mask a) {
      if (popcount(a) == rs && m.independent(a)) res.bases.push_back(remap_mask(a, smap));
    });
    int rc = m.rank() - rs;
    for_each_subset(t, [&](Mask b) {
      if (popcount(b) == rc && m.rank_of(b | s) == rs + rc)
        con.bases.push_back(remap_mask(b, tmap));
    });
    res.canonicalize();
    con.canonicalize();
    return std::make_pair(std::move(res), std::move(con));
  }
};

inline BoolFn rank_fn(const Matroid& m) {
  BoolFn z = BoolFn::zero(m.labels);
  for (Mask a = 1; a < (Mask(1) << m.n()); ++a) z[a] = ExtQ(Rat(m.rank_of(a)));
  return z;
}

// Read the matroid off a face of a matroid polytope: the face's vertices are
// 0/1 basis indicators.
inline Matroid matroid_of_face(const std::vector<std::string>& labels, const BoolFn& face) {
  Matroid m;
  m.labels = labels;
  for (auto& v : vertices(face)) {
    Mask b = 0;
    for (size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 1)
        b |= Mask(1) << i;
      else if (v[i] != 0)
        throw std::logic_error("matroid polytope face with non-0/1 vertex");
    }
    m.bases.push_back(b);
  }
  m.canonicalize();
  return m;
}

// s(m) = sum over faces of P(rank_m) of (-1)^{|I| - dim} (face matroid).
inline FormalSum<Matroid> antipode_matroid(const Matroid& m) {
  FormalSum<Matroid> out;
  int n = m.n();
  for (auto& [key, rec] : enumerate_faces(rank_fn(m))) {
    Matroid fm = matroid_of_face(m.labels, rec.fn);
    Rat sign = ((n - rec.dim) % 2 == 0) ? Rat(1) : Rat(-1);
    out.add(encode_matroid(fm), fm, sign);
  }
  return out;
}

inline Matroid permute_matroid(const Matroid& m, const std::vector<int>& perm) {
  Matroid out = m;
  for (auto& b : out.bases) b = remap_mask(b, perm);
  out.canonicalize();
  return out;
}

// Lexicographically least encoding over all ground-set relabelings.
inline std::string matroid_iso_key(const Matroid& m) {
  int n = m.n();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string k = encode_matroid(permute_matroid(m, perm));
    if (best.empty() || k < best) best = k;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Antipode grouped by matroid isomorphism class (one representative each).
inline FormalSum<Matroid> antipode_matroid_isoclasses(const Matroid& m) {
  FormalSum<Matroid> out;
  for (auto& [key, v] : antipode_matroid(m).terms)
    out.add(matroid_iso_key(v.first), v.first, v.second);
  return out;
}

// --- invariants -----------------------------------------------------------

inline Character<M> single_basis_character() {
  return [](const Matroid& m) { return m.bases.size() == 1 ? Rat(1) : Rat(0); };
}

// Number of weightings y : I -> [k] admitting a unique y-maximum basis.
inline Int bjr_invariant(const Matroid& m, int k) {
  int n = m.n();
  if (n == 0) return 1;
  Int count = 0;
  std::vector<int> y(n, 1);
  while (true) {
    long best = -1;
    int nbest = 0;
    for (Mask b : m.bases) {
      long w = 0;
      for (int i : bits_of(b)) w += y[i];
      if (w > best) { best = w; nbest = 1; }
      else if (w == best) ++nbest;
    }
    if (nbest == 1) ++count;
    int i = 0;
    while (i < n && y[i] == k) y[i++] = 1;
    if (i == n) break;
    ++y[i];
  }
  return count;
}

// Sum over all weightings y : I -> [k] of the number of y-maximum bases.
inline Int bjr_reciprocity_count(const Matroid& m, int k) {
  int n = m.n();
  if (n == 0) return 1;
  Int total = 0;
  std::vector<int> y(n, 1);
  while (true) {
    long best = -1;
    int nbest = 0;
    for (Mask b : m.bases) {
      long w = 0;
      for (int i : bits_of(b)) w += y[i];
      if (w > best) { best = w; nbest = 1; }
      else if (w == best) ++nbest;
    }
    total += nbest;
    int i = 0;
    while (i < n && y[i] == k) y[i++] = 1;
    if (i == n) break;
    ++y[i];
  }
  return total;
}

// --- flats, Mobius number, Bergman polynomial -----------------------------

inline std::vector<Mask> matroid_flats(const Matroid& m) {
  std::vector<Mask> flats;
  int n = m.n();
  for (Mask f = 0; f < (Mask(1) << n); ++f) {
    int r = m.rank_of(f);
    bool flat = true;
    for (int i = 0; i < n && flat; ++i)
      if (!((f >> i) & 1) && m.rank_of(f | (Mask(1) << i)) == r) flat = false;
    if (flat) flats.push_back(f);
    if (f == full_mask(n)) break;
  }
  return flats;
}

// Mobius number mu(bottom, top) of the lattice of flats.
inline Int mobius_number(const Matroid& m) {
  auto flats = matroid_flats(m);  // ascending as masks; subsets precede supersets? not
  std::sort(flats.begin(), flats.end(), [](Mask a, Mask b) {
    int pa = popcount(a), pb = popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::map<Mask, Int> mu;
  for (Mask f : flats) {
    Int s = 0;
    for (Mask g : flats)
      if (g != f && (g & f) == g) s += mu[g];
    mu[f] = (f == flats.front()) ? Int(1) : Int(-s);
  }
  return mu[flats.back()];
}

inline Character<M> loopless_character() {
  return [](const Matroid& m) {
    for (int i = 0; i < m.n(); ++i)
      if (m.rank_of(Mask(1) << i) == 0) return Rat(0);
    return Rat(1);
  };
}

// B(m)(x) = sum_d c_d binom(x, d), c_d = number of flag chains
// closure(empty) = F_0 < F_1 < ... < F_d = I of flats.
inline Poly bergman_polynomial(const Matroid& m) {
  auto flats = matroid_flats(m);
  Mask bottom = 0;
  for (Mask f : flats)
    if (m.rank_of(f) == 0) bottom = f;  // closure of the empty set
  Mask top = full_mask(m.n());
  // chains counted by dynamic programming over the flat order
  std::sort(flats.begin(), flats.end(), [](Mask a, Mask b) {
    int pa = popcount(a), pb = popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  // chains_to[f][d] = number of strict chains bottom = F_0 < ... < F_d = f
  std::map<Mask, std::vector<Int>> chains_to;
  for (Mask f : flats) {
    std::vector<Int> row(flats.size() + 1, 0);
    if (f == bottom) row[0] = 1;
    for (Mask g : flats)
      if (g != f && (g & f) == g && chains_to.count(g)) {
        auto& prev = chains_to[g];
        for (size_t d = 0; d + 1 < row.size(); ++d) row[d + 1] += prev[d];
      }
    chains_to[f] = std::move(row);
  }
  Poly b;
  auto& crow = chains_to[top];
  for (size_t d = 0; d < crow.size(); ++d) {
    if (m.n() == 0 && d == 0) { b += Poly::constant(1); continue; }
    if (crow[d] != 0) b += Poly::binom_x((unsigned)d) * Rat(crow[d]);
  }
  return b;
}

// B(-1) equals the signed lattice Mobius number mu_L(bottom, top); since
// matroid Mobius numbers have sign (-1)^{lattice rank}, this is the
// reciprocity B(-1) = (-1)^rank |mu|. Cross-checked against the character
// engine: B(-1) = gamma(s(m)) for the loopless character gamma.
inline bool bergman_reciprocity_check(const Matroid& m) {
  Poly b = bergman_polynomial(m);
  Int mu = mobius_number(m);
  if (b.eval(Rat(-1)) != Rat(mu)) return false;
  int lattice_rank = m.rank();  // bottom flat has rank 0 inside the lattice
  if (mu != 0 && (mu < 0) != (lattice_rank % 2 == 1)) return false;
  // the character identity needs a loopless matroid: a loop survives every
  // restriction and contraction, so gamma kills each antipode term
  for (int i = 0; i < m.n(); ++i)
    if (m.rank_of(Mask(1) << i) == 0) return true;
  Rat via_char = character_inverse<M>(loopless_character())(m);
  return via_char == b.eval(Rat(-1));
}

// --- small constructors ---------------------------------------------------

inline Matroid uniform_matroid(int r, int n) {
  Matroid m;
  m.labels = default_labels(n);
  for (Mask b = 0; b < (Mask(1) << n); ++b)
    if (popcount(b) == r) m.bases.push_back(b);
  if (r == 0) m.bases = {0};
  m.canonicalize();
  return m;
}

}  // namespace hopfcalc
