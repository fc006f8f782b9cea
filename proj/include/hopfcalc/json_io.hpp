#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "buildsets.hpp"
#include "graphs.hpp"
#include "hypergraphs.hpp"
#include "matroids.hpp"
#include "partitions.hpp"
#include "posets.hpp"
#include "series.hpp"

namespace hopfcalc {

using nlohmann::json;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::vector<std::string> parse_ground(const json& j,
                                             const char* field) {
  if (!j.contains(field) || !j[field].is_array())
    throw InputError(std::string("missing ground-set array '") + field + "'");
  std::vector<std::string> labels;
  for (auto& v : j[field]) {
    if (!v.is_string()) throw InputError("ground-set entries must be strings");
    labels.push_back(v.get<std::string>());
  }
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
    throw InputError("repeated ground-set element");
  return labels;
}

inline std::map<std::string, int> index_of(
    const std::vector<std::string>& labels) {
  std::map<std::string, int> m;
  for (size_t i = 0; i < labels.size(); ++i) m[labels[i]] = (int)i;
  return m;
}

inline Mask mask_of(const json& arr, const std::map<std::string, int>& idx) {
  Mask m = 0;
  for (auto& v : arr) {
    auto it = idx.find(v.get<std::string>());
    if (it == idx.end()) throw InputError("unknown element: " + v.dump());
    m |= Mask(1) << it->second;
  }
  return m;
}

inline Graph parse_graph(const json& j, bool simple) {
  auto labels = parse_ground(j, "vertices");
  auto idx = index_of(labels);
  Graph g = Graph::empty(labels);
  for (auto& e : j.value("edges", json::array())) {
    if (!e.is_array() || e.empty() || e.size() > 2)
      throw InputError("edges must be 1- or 2-element label lists");
    Mask m = mask_of(e, idx);
    auto b = bits_of(m);
    if (b.size() == 1) {
      if (e.size() == 2) throw InputError("loops are not allowed");
      ++g.half[b[0]];
    } else {
      ++g.em_ref(b[0], b[1]);
    }
  }
  if (simple && !g.is_simple())
    throw InputError("simple graph may not carry half-edges or repeats");
  return g;
}

inline Matroid parse_matroid(const json& j) {
  Matroid m;
  m.labels = parse_ground(j, "ground");
  auto idx = index_of(m.labels);
  for (auto& b : j.value("bases", json::array()))
    m.bases.push_back(mask_of(b, idx));
  std::sort(m.bases.begin(), m.bases.end());
  m.bases.erase(std::unique(m.bases.begin(), m.bases.end()), m.bases.end());
  if (m.bases.empty()) throw InputError("matroid needs at least one basis");
  for (Mask b : m.bases)
    if (popcount(b) != popcount(m.bases[0]))
      throw InputError("bases must have equal cardinality");
  return m;
}

inline Poset parse_poset(const json& j) {
  auto labels = parse_ground(j, "ground");
  auto idx = index_of(labels);
  std::vector<std::pair<int, int>> rels;
  for (auto& r : j.value("relations", json::array())) {
    if (!r.is_array() || r.size() != 2)
      throw InputError("relations must be [smaller, larger] pairs");
    rels.push_back({(int)bits_of(mask_of(json::array({r[0]}), idx))[0],
                    (int)bits_of(mask_of(json::array({r[1]}), idx))[0]});
  }
  Poset p = poset_from_strict_pairs(labels, rels);
  for (int i = 0; i < p.n(); ++i)
    for (int k : bits_of(p.leq[i]))
      if (k != i && ((p.leq[k] >> i) & 1))
        throw InputError("relation is not antisymmetric");
  return p;
}

inline Hypergraph parse_hypergraph(const json& j, bool simple) {
  auto labels = parse_ground(j, "ground");
  auto idx = index_of(labels);
  Hypergraph h = Hypergraph::empty(labels);
  for (auto& e : j.value("edges", json::array())) {
    Mask m = mask_of(e, idx);
    if (m == 0) throw InputError("hyperedges must be nonempty");
    ++h.mult[m];
  }
  if (simple && !h.is_simple())
    throw InputError("simple hypergraph may not repeat edges");
  return h;
}

inline Complex parse_complex(const json& j) {
  auto labels = parse_ground(j, "ground");
  auto idx = index_of(labels);
  Complex c = Complex::empty(labels);
  for (auto& f : j.value("facets", json::array())) {
    Mask m = mask_of(f, idx);
    // downward closure
    for (Mask s = m;; s = (s - 1) & m) {
      c.face[s] = 1;
      if (s == 0) break;
    }
  }
  return c;
}

inline BuildingSet parse_buildset(const json& j) {
  BuildingSet b;
  b.labels = parse_ground(j, "ground");
  auto idx = index_of(b.labels);
  for (auto& s : j.value("sets", json::array())) {
    Mask m = mask_of(s, idx);
    if (m == 0) throw InputError("building-set members must be nonempty");
    b.sets.push_back(m);
  }
  b.canonicalize();
  if (!is_building_set(b))
    throw InputError("not a building set (singletons and overlap unions required)");
  return b;
}

inline SetPartition parse_partition(const json& j) {
  std::vector<std::string> labels;
  if (j.contains("ground")) {
    labels = parse_ground(j, "ground");
  } else {
    for (auto& b : j.value("blocks", json::array()))
      for (auto& v : b) labels.push_back(v.get<std::string>());
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
      throw InputError("repeated element across blocks");
  }
  auto idx = index_of(labels);
  SetPartition p;
  p.labels = labels;
  Mask seen = 0;
  for (auto& b : j.value("blocks", json::array())) {
    Mask m = mask_of(b, idx);
    if (m == 0 || (m & seen)) throw InputError("blocks must partition the ground set");
    seen |= m;
    p.blocks.push_back(m);
  }
  if (seen != full_mask((int)labels.size()))
    throw InputError("blocks must cover the ground set");
  std::sort(p.blocks.begin(), p.blocks.end());
  return p;
}

inline PathFamily parse_paths(const json& j) {
  std::vector<std::string> labels;
  if (j.contains("ground")) {
    labels = parse_ground(j, "ground");
  } else {
    for (auto& w : j.value("paths", json::array()))
      for (auto& v : w) labels.push_back(v.get<std::string>());
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
      throw InputError("repeated element across paths");
  }
  auto idx = index_of(labels);
  PathFamily p;
  p.labels = labels;
  Mask seen = 0;
  for (auto& w : j.value("paths", json::array())) {
    std::vector<int> word;
    for (auto& v : w) {
      Mask m = mask_of(json::array({v}), idx);
      int i = bits_of(m)[0];
      if ((seen >> i) & 1) throw InputError("paths must be vertex-disjoint");
      seen |= m;
      word.push_back(i);
    }
    if (word.empty()) throw InputError("paths must be nonempty");
    p.paths.push_back(word);
  }
  if (seen != full_mask((int)labels.size()))
    throw InputError("paths must cover the ground set");
  p.canonicalize();
  return p;
}

inline Rat parse_rat(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw InputError("bad rational: " + s);
  r.canonicalize();
  return r;
}

// {"kind":"egf"|"ogf","coeffs":["1","-1/2",...]}; returns kind + coefficients.
inline std::pair<std::string, std::vector<Rat>> parse_series(const json& j) {
  std::string kind = j.value("kind", "");
  if (kind != "egf" && kind != "ogf")
    throw InputError("series kind must be \"egf\" or \"ogf\"");
  std::vector<Rat> coeffs;
  for (auto& c : j.value("coeffs", json::array())) {
    if (c.is_string()) coeffs.push_back(parse_rat(c.get<std::string>()));
    else if (c.is_number_integer()) coeffs.push_back(Rat((long)c.get<long>()));
    else throw InputError("series coefficients must be strings or integers");
  }
  if (coeffs.empty()) throw InputError("series needs at least one coefficient");
  return {kind, coeffs};
}

template <class Obj>
std::string render_sum_text(const FormalSum<Obj>& s,
                            std::string (*enc)(const Obj&)) {
  if (s.terms.empty()) return "0";
  std::string out;
  for (auto& [key, v] : s.terms) {
    if (!out.empty()) out += " ";
    Rat a = v.second < 0 ? Rat(-v.second) : v.second;
    out += (v.second < 0 ? "-" : "+") + a.get_str() + "*" + enc(v.first);
  }
  return out;
}

template <class Obj>
json render_sum_json(const FormalSum<Obj>& s, std::string (*enc)(const Obj&)) {
  json terms = json::array();
  for (auto& [key, v] : s.terms)
    terms.push_back({{"coeff", v.second.get_str()}, {"object", enc(v.first)}});
  return json{{"terms", terms}};
}

}  // namespace hopfcalc
