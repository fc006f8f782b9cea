#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "rational.hpp"

namespace hopfcalc {

// Formal rational linear combination of objects, keyed by a canonical
// encoding string. Each key keeps a representative object so terms can be
// rendered or inspected. Terms with coefficient 0 are dropped.
template <class Obj>
struct FormalSum {
  std::map<std::string, std::pair<Obj, Rat>> terms;

  void add(const std::string& key, const Obj& obj, const Rat& c) {
    if (c == 0) return;
    auto it = terms.find(key);
    if (it == terms.end()) {
      terms.emplace(key, std::make_pair(obj, c));
    } else {
      it->second.second += c;
      if (it->second.second == 0) terms.erase(it);
    }
  }

  FormalSum& operator+=(const FormalSum& o) {
    for (auto& [k, v] : o.terms) add(k, v.first, v.second);
    return *this;
  }
  FormalSum operator*(const Rat& r) const {
    FormalSum out;
    if (r == 0) return out;
    out.terms = terms;
    for (auto& [k, v] : out.terms) v.second *= r;
    return out;
  }
  bool operator==(const FormalSum& o) const {
    if (terms.size() != o.terms.size()) return false;
    auto it = o.terms.begin();
    for (auto& [k, v] : terms) {
      if (k != it->first || v.second != it->second.second) return false;
      ++it;
    }
    return true;
  }

  size_t size() const { return terms.size(); }
  Rat coeff(const std::string& key) const {
    auto it = terms.find(key);
    return it == terms.end() ? Rat(0) : it->second.second;
  }

  std::string str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, v] : terms) {
      const Rat& c = v.second;
      Rat a = c < 0 ? Rat(-c) : c;
      if (first) {
        if (c < 0) os << "-";
        first = false;
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      if (a != 1) os << a.get_str() << "*";
      os << k;
    }
    return os.str();
  }
};

}  // namespace hopfcalc
