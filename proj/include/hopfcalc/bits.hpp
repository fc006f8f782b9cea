#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hopfcalc {

using Mask = uint32_t;

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask full_mask(int n) { return n == 0 ? 0 : ((Mask(1) << n) - 1); }

// Positions of set bits, ascending.
inline std::vector<int> bits_of(Mask m) {
  std::vector<int> out;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1) out.push_back(i);
  return out;
}

// Iterate all subsets of `m`, including 0 and m itself, in increasing
// numeric order (the spec's lexicographic-by-bitmask order).
template <class Fn>
void for_each_subset(Mask m, Fn&& fn) {
  Mask s = 0;
  while (true) {
    fn(s);
    if (s == m) break;
    s = (s - m) & m;  // next subset of m above s
  }
}

// Re-index the elements of subset `sub` of `ambient` to 0..k-1.
// Returns map[old_bit] = new_bit for bits of sub, -1 elsewhere.
inline std::vector<int> subindex(Mask ambient, Mask sub) {
  std::vector<int> map;
  int hi = 0;
  for (Mask m = ambient; m; m >>= 1) ++hi;
  map.assign(hi, -1);
  int next = 0;
  for (int i = 0; i < hi; ++i)
    if (sub & (Mask(1) << i)) map[i] = next++;
  return map;
}

// All set compositions (ordered lists of disjoint nonempty blocks covering
// `m`), first block chosen lexicographically by bitmask. Callback receives
// the blocks. Returns the number of compositions visited.
inline uint64_t for_each_composition(Mask m,
                                     const std::function<void(const std::vector<Mask>&)>& fn) {
  uint64_t count = 0;
  std::vector<Mask> blocks;
  std::function<void(Mask)> rec = [&](Mask rest) {
    if (rest == 0) {
      ++count;
      fn(blocks);
      return;
    }
    for_each_subset(rest, [&](Mask b) {
      if (b == 0) return;
      blocks.push_back(b);
      rec(rest & ~b);
      blocks.pop_back();
    });
  };
  rec(m);
  return count;
}

inline uint64_t count_compositions(int n) {
  return for_each_composition(full_mask(n), [](const std::vector<Mask>&) {});
}

// Connected components of an undirected graph given as adjacency bitmasks
// over vertices 0..n-1. Returns component id per vertex and the count.
inline int components(const std::vector<Mask>& adj, std::vector<int>* comp_out = nullptr) {
  int n = (int)adj.size();
  std::vector<int> comp(n, -1);
  int c = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = c;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : bits_of(adj[v]))
        if (comp[u] < 0) { comp[u] = c; stack.push_back(u); }
    }
    ++c;
  }
  if (comp_out) *comp_out = comp;
  return c;
}

}  // namespace hopfcalc
