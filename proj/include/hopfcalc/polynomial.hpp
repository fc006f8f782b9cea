#pragma once

#include <string>
#include <vector>

#include "rational.hpp"

namespace hopfcalc {

// Dense univariate polynomial with exact rational coefficients,
// coeffs[k] = coefficient of x^k.
struct Poly {
  std::vector<Rat> coeffs;

  Poly() = default;
  explicit Poly(std::vector<Rat> c) : coeffs(std::move(c)) { trim(); }
  static Poly constant(const Rat& c) { return c == 0 ? Poly() : Poly({c}); }
  static Poly x() { return Poly({Rat(0), Rat(1)}); }

  void trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }
  int degree() const { return (int)coeffs.size() - 1; }  // -1 for zero
  Rat coeff(int k) const {
    return (k >= 0 && k < (int)coeffs.size()) ? coeffs[k] : Rat(0);
  }

  Rat eval(const Rat& x) const {
    Rat v = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * x + *it;
    return v;
  }

  Poly operator+(const Poly& o) const {
    std::vector<Rat> c(std::max(coeffs.size(), o.coeffs.size()), Rat(0));
    for (size_t i = 0; i < coeffs.size(); ++i) c[i] += coeffs[i];
    for (size_t i = 0; i < o.coeffs.size(); ++i) c[i] += o.coeffs[i];
    return Poly(std::move(c));
  }
  Poly operator-(const Poly& o) const {
    std::vector<Rat> c(std::max(coeffs.size(), o.coeffs.size()), Rat(0));
    for (size_t i = 0; i < coeffs.size(); ++i) c[i] += coeffs[i];
    for (size_t i = 0; i < o.coeffs.size(); ++i) c[i] -= o.coeffs[i];
    return Poly(std::move(c));
  }
  Poly operator*(const Poly& o) const {
    if (coeffs.empty() || o.coeffs.empty()) return Poly();
    std::vector<Rat> c(coeffs.size() + o.coeffs.size() - 1, Rat(0));
    for (size_t i = 0; i < coeffs.size(); ++i)
      for (size_t j = 0; j < o.coeffs.size(); ++j) c[i + j] += coeffs[i] * o.coeffs[j];
    return Poly(std::move(c));
  }
  Poly operator*(const Rat& r) const {
    Poly p = *this;
    for (auto& c : p.coeffs) c *= r;
    p.trim();
    return p;
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  bool operator==(const Poly& o) const { return coeffs == o.coeffs; }

  // binomial-coefficient polynomial binom(x, k) = x(x-1)...(x-k+1)/k!
  static Poly binom_x(unsigned k) {
    Poly p = constant(1);
    for (unsigned i = 0; i < k; ++i) p = p * (x() - constant(Rat(i)));
    return p * Rat(Int(1), factorial(k));
  }

  std::string str(const std::string& var = "n") const {
    if (coeffs.empty()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      Rat c = coeffs[k];
      if (c == 0) continue;
      std::string term;
      Rat a = c < 0 ? Rat(-c) : c;
      if (k == 0 || a != 1) term += a.get_str();
      if (k >= 1) {
        if (!term.empty()) term += "*";
        term += var;
        if (k >= 2) term += "^" + std::to_string(k);
      }
      if (out.empty())
        out = (c < 0 ? "-" : "") + term;
      else
        out += (c < 0 ? " - " : " + ") + term;
    }
    return out;
  }
};

}  // namespace hopfcalc
