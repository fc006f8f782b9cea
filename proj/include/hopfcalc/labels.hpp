#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "bits.hpp"

namespace hopfcalc {

// Objects keep their labels sorted ascending; these helpers maintain that
// invariant across restriction and product.

inline std::vector<std::string> sub_labels(const std::vector<std::string>& labels, Mask s) {
  std::vector<std::string> out;
  for (int i : bits_of(s)) out.push_back(labels[i]);
  return out;
}

struct LabelMerge {
  std::vector<std::string> labels;  // sorted union
  std::vector<int> map_a, map_b;    // old index -> merged index
};

inline LabelMerge merge_labels(const std::vector<std::string>& a,
                               const std::vector<std::string>& b) {
  LabelMerge m;
  m.map_a.resize(a.size());
  m.map_b.resize(b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      m.map_a[i++] = (int)m.labels.size();
      m.labels.push_back(a[i - 1]);
    } else if (i == a.size() || b[j] < a[i]) {
      m.map_b[j++] = (int)m.labels.size();
      m.labels.push_back(b[j - 1]);
    } else {
      throw std::invalid_argument("product requires disjoint label sets: " + a[i]);
    }
  }
  return m;
}

inline Mask remap_mask(Mask m, const std::vector<int>& map) {
  Mask out = 0;
  for (int i : bits_of(m)) out |= Mask(1) << map[i];
  return out;
}

inline std::string join_labels(const std::vector<std::string>& labels, Mask s,
                               const char* sep = ",") {
  std::string out;
  bool first = true;
  for (int i : bits_of(s)) {
    if (!first) out += sep;
    out += labels[i];
    first = false;
  }
  return out;
}

inline std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::string(1, char('a' + i)));
  return out;
}

}  // namespace hopfcalc
