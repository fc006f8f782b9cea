#pragma once

#include <string>
#include <vector>

#include "bits.hpp"
#include "labels.hpp"

namespace hopfcalc {

// Preposet (reflexive transitive relation) on 0..n-1.
// leq[j] = mask of all i with i <= j.
struct Preposet {
  std::vector<std::string> labels;
  std::vector<Mask> leq;

  int n() const { return (int)labels.size(); }
  bool le(int i, int j) const { return (leq[j] >> i) & 1; }

  bool valid() const {
    int m = n();
    for (int j = 0; j < m; ++j)
      if (!le(j, j)) return false;
    for (int j = 0; j < m; ++j)
      for (int i : bits_of(leq[j]))
        if ((leq[i] & ~leq[j]) != 0) return false;  // i<=j but some k<=i, not <=j
    return true;
  }

  bool is_poset() const {  // antisymmetric
    for (int j = 0; j < n(); ++j)
      for (int i : bits_of(leq[j]))
        if (i != j && le(j, i)) return false;
    return true;
  }

  // Connected components of the comparability graph.
  int comparability_components() const {
    std::vector<Mask> adj(n(), 0);
    for (int j = 0; j < n(); ++j)
      for (int i : bits_of(leq[j]))
        if (i != j) { adj[i] |= Mask(1) << j; adj[j] |= Mask(1) << i; }
    return components(adj);
  }

  bool is_lower_set(Mask a) const {
    for (int j : bits_of(a))
      if ((leq[j] & ~a) != 0) return false;
    return true;
  }

  std::string encode() const {
    std::string out = "pre{" + join_labels(labels, full_mask(n())) + "|";
    bool first = true;
    for (int j = 0; j < n(); ++j)
      for (int i : bits_of(leq[j]))
        if (i != j) {
          if (!first) out += ",";
          out += labels[i] + "<" + labels[j];
          first = false;
        }
    return out + "}";
  }
};

}  // namespace hopfcalc
