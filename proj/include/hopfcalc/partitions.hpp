#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bits.hpp"
#include "formal_sum.hpp"
#include "hopf.hpp"
#include "labels.hpp"
#include "rational.hpp"

namespace hopfcalc {

struct SetPartition {
  std::vector<std::string> labels;
  std::vector<Mask> blocks;  // nonempty, disjoint, covering; sorted

  int n() const { return (int)labels.size(); }
  void canonicalize() { std::sort(blocks.begin(), blocks.end()); }
};

inline std::string encode_partition(const SetPartition& p) {
  std::string out = "pi{" + join_labels(p.labels, full_mask(p.n())) + "|";
  bool first = true;
  for (Mask b : p.blocks) {
    if (!first) out += ",";
    out += join_labels(p.labels, b, "");
    first = false;
  }
  return out + "}";
}

// Both coproduct branches are traces of the blocks.
struct Pi {
  using Obj = SetPartition;
  static std::string name() { return "partition"; }
  static std::string encode(const Obj& p) { return encode_partition(p); }
  static Obj product(const Obj& a, const Obj& b) {
    LabelMerge lm = merge_labels(a.labels, b.labels);
    Obj out;
    out.labels = lm.labels;
    for (Mask m : a.blocks) out.blocks.push_back(remap_mask(m, lm.map_a));
    for (Mask m : b.blocks) out.blocks.push_back(remap_mask(m, lm.map_b));
    out.canonicalize();
    return out;
  }
  static std::optional<std::pair<Obj, Obj>> coproduct(const Obj& p, Mask s) {
    Mask t = full_mask(p.n()) & ~s;
    Obj res, con;
    res.labels = sub_labels(p.labels, s);
    con.labels = sub_labels(p.labels, t);
    std::vector<int> smap = subindex(full_mask(p.n()), s);
    std::vector<int> tmap = subindex(full_mask(p.n()), t);
    for (Mask b : p.blocks) {
      if (b & s) res.blocks.push_back(remap_mask(b & s, smap));
      if (b & t) con.blocks.push_back(remap_mask(b & t, tmap));
    }
    res.canonicalize();
    con.canonicalize();
    return std::make_pair(std::move(res), std::move(con));
  }
};

// All set partitions of the bits of m, as block masks.
inline std::vector<std::vector<Mask>> set_partitions_of(Mask m) {
  std::vector<int> elems = bits_of(m);
  std::vector<std::vector<Mask>> out;
  std::vector<Mask> cur;
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == elems.size()) {
      out.push_back(cur);
      return;
    }
    Mask bit = Mask(1) << elems[i];
    for (size_t j = 0; j < cur.size(); ++j) {
      cur[j] |= bit;
      rec(i + 1);
      cur[j] &= ~bit;
    }
    cur.push_back(bit);
    rec(i + 1);
    cur.pop_back();
  };
  rec(0);
  return out;
}

// s(pi) = sum over refinements rho of (-1)^{b(rho)} (pi:rho)! rho, where
// (pi:rho)! multiplies n_i! over the blocks p_i of pi, n_i the number of
// rho-blocks inside p_i.
inline FormalSum<SetPartition> antipode_partition(const SetPartition& p) {
  FormalSum<SetPartition> out;
  std::vector<std::vector<std::vector<Mask>>> per_block;
  for (Mask b : p.blocks) per_block.push_back(set_partitions_of(b));
  std::vector<size_t> pick(p.blocks.size(), 0);
  while (true) {
    SetPartition rho;
    rho.labels = p.labels;
    Rat coeff = 1;
    for (size_t i = 0; i < pick.size(); ++i) {
      auto& part = per_block[i][pick[i]];
      coeff *= Rat(factorial((unsigned)part.size()));
      for (Mask b : part) rho.blocks.push_back(b);
    }
    if (rho.blocks.size() % 2) coeff = -coeff;
    rho.canonicalize();
    out.add(encode_partition(rho), rho, coeff);
    size_t i = 0;
    while (i < pick.size() && pick[i] + 1 == per_block[i].size()) pick[i++] = 0;
    if (i == pick.size()) break;
    ++pick[i];
  }
  return out;
}

// --- paths ------------------------------------------------------------------

// Vertex-disjoint paths covering the ground set; each path is a word of
// ground indices, stored as the lexicographic minimum of word and reversal.
struct PathFamily {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> paths;

  int n() const { return (int)labels.size(); }
  void canonicalize() {
    for (auto& w : paths) {
      std::vector<int> rev(w.rbegin(), w.rend());
      if (rev < w) w = std::move(rev);
    }
    std::sort(paths.begin(), paths.end());
  }
};

inline std::string encode_paths(const PathFamily& p) {
  std::string out = "f{" + join_labels(p.labels, full_mask(p.n())) + "|";
  bool first = true;
  for (auto& w : p.paths) {
    if (!first) out += ",";
    for (int v : w) out += p.labels[v];
    first = false;
  }
  return out + "}";
}

inline PathFamily single_path(std::vector<std::string> labels, std::vector<int> word) {
  PathFamily p;
  p.labels = std::move(labels);
  if (!word.empty()) p.paths.push_back(std::move(word));
  p.canonicalize();
  return p;
}

// Restriction keeps the S-vertices of each path in inherited order (one path
// per path); contraction keeps the maximal runs of T-vertices.
struct F {
  using Obj = PathFamily;
  static std::string name() { return "paths"; }
  static std::string encode(const Obj& p) { return encode_paths(p); }
  static Obj product(const Obj& a, const Obj& b) {
    LabelMerge lm = merge_labels(a.labels, b.labels);
    Obj out;
    out.labels = lm.labels;
    for (auto& w : a.paths) {
      std::vector<int> nw;
      for (int v : w) nw.push_back(lm.map_a[v]);
      out.paths.push_back(std::move(nw));
    }
    for (auto& w : b.paths) {
      std::vector<int> nw;
      for (int v : w) nw.push_back(lm.map_b[v]);
      out.paths.push_back(std::move(nw));
    }
    out.canonicalize();
    return out;
  }
  static std::optional<std::pair<Obj, Obj>> coproduct(const Obj& p, Mask s) {
    Mask t = full_mask(p.n()) & ~s;
    Obj res, con;
    res.labels = sub_labels(p.labels, s);
    con.labels = sub_labels(p.labels, t);
    std::vector<int> smap = subindex(full_mask(p.n()), s);
    std::vector<int> tmap = subindex(full_mask(p.n()), t);
    for (auto& w : p.paths) {
      std::vector<int> kept;
      for (int v : w)
        if ((s >> v) & 1) kept.push_back(smap[v]);
      if (!kept.empty()) res.paths.push_back(std::move(kept));
      std::vector<int> run;
      for (int v : w) {
        if ((t >> v) & 1) {
          run.push_back(tmap[v]);
        } else if (!run.empty()) {
          con.paths.push_back(run);
          run.clear();
        }
      }
      if (!run.empty()) con.paths.push_back(std::move(run));
    }
    res.canonicalize();
    con.canonicalize();
    return std::make_pair(std::move(res), std::move(con));
  }
};

// Partitions of {0,...,n-1} with no blocks p != q and a < b < c < d such that
// a,c in p and b,d in q.
inline bool is_noncrossing(const std::vector<Mask>& blocks, int n) {
  std::vector<int> owner(n, -1);
  for (size_t i = 0; i < blocks.size(); ++i)
    for (int v : bits_of(blocks[i])) owner[v] = (int)i;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          if (owner[a] == owner[c] && owner[b] == owner[d] && owner[a] != owner[b]) return false;
  return true;
}

inline std::vector<std::vector<Mask>> noncrossing_partitions(int n) {
  std::vector<std::vector<Mask>> out;
  for (auto& p : set_partitions_of(full_mask(n)))
    if (is_noncrossing(p, n)) out.push_back(p);
  return out;
}

// Merge blocks of a partition of {0,...,n-1} while some block ending at b is
// followed by a block starting at b+1.
inline std::vector<Mask> adjacent_closure(std::vector<Mask> blocks) {
  bool merged = true;
  while (merged) {
    merged = false;
    for (size_t i = 0; i < blocks.size() && !merged; ++i)
      for (size_t j = 0; j < blocks.size() && !merged; ++j) {
        if (i == j) continue;
        int hi = 31 - __builtin_clz(blocks[i]);
        if (__builtin_ctz(blocks[j]) == hi + 1) {
          blocks[i] |= blocks[j];
          blocks.erase(blocks.begin() + j);
          merged = true;
        }
      }
  }
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

// s(l) = sum over noncrossing partitions pi of positions of
// (-1)^{|pi|} C_{(closure(pi):pi)} l(pi).
inline FormalSum<PathFamily> antipode_single_path(const std::vector<std::string>& labels,
                                                 const std::vector<int>& word) {
  FormalSum<PathFamily> out;
  int n = (int)word.size();
  if (n == 0) {
    PathFamily e;
    e.labels = labels;
    out.add(encode_paths(e), e, Rat(1));
    return out;
  }
  for (auto& pi : noncrossing_partitions(n)) {
    PathFamily g;
    g.labels = labels;
    for (Mask b : pi) {
      std::vector<int> path;
      for (int pos : bits_of(b)) path.push_back(word[pos]);
      g.paths.push_back(std::move(path));
    }
    g.canonicalize();
    Rat coeff = (pi.size() % 2 == 0) ? Rat(1) : Rat(-1);
    std::vector<Mask> closure = adjacent_closure(pi);
    for (Mask big : closure) {
      int inside = 0;
      for (Mask b : pi)
        if ((b & big) == b) ++inside;
      coeff *= Rat(catalan((unsigned)inside));
    }
    out.add(encode_paths(g), g, coeff);
  }
  return out;
}

// Multiplicative extension to sets of paths.
inline FormalSum<PathFamily> antipode_paths(const PathFamily& p) {
  FormalSum<PathFamily> acc;
  PathFamily e;
  acc.add(encode_paths(e), e, Rat(1));
  Mask done = 0;
  for (auto& w : p.paths) {
    Mask piece = 0;
    for (int v : w) piece |= Mask(1) << v;
    std::vector<int> pmap = subindex(full_mask(p.n()), piece);
    std::vector<int> local;
    for (int v : w) local.push_back(pmap[v]);
    FormalSum<PathFamily> part = antipode_single_path(sub_labels(p.labels, piece), local);
    FormalSum<PathFamily> next;
    for (auto& [ka, ta] : acc.terms)
      for (auto& [kb, tb] : part.terms) {
        PathFamily prod = F::product(ta.first, tb.first);
        next.add(encode_paths(prod), prod, ta.second * tb.second);
      }
    acc = std::move(next);
    done |= piece;
  }
  (void)done;
  return acc;
}

// (n+|m|)! / ((n+1)! m_1! m_2! ...) for a partition type given by block-size
// multiplicities m[i] = number of blocks of size i.
inline Rat assoc_type_coeff(const std::vector<unsigned>& m) {
  unsigned n = 0, total = 0;
  for (size_t i = 0; i < m.size(); ++i) {
    n += (unsigned)(i + 1) * m[i];
    total += m[i];
  }
  Rat r = Rat(factorial(n + total)) / Rat(factorial(n + 1));
  for (unsigned mi : m) r /= Rat(factorial(mi));
  return r;
}

}  // namespace hopfcalc
