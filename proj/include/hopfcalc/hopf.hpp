#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "bits.hpp"
#include "formal_sum.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace hopfcalc {

// A family F models a Hopf monoid in set species (or a linearized one with
// zero coproduct branches). Required interface:
//
//   using Obj = ...;                // has std::vector<std::string> labels
//   static std::string name();
//   static std::string encode(const Obj&);           // canonical form
//   static Obj product(const Obj&, const Obj&);      // disjoint label sets,
//                                                    // merged label-sorted
//   static std::optional<std::pair<Obj,Obj>>         // (z|_S, z/_S), nullopt
//   coproduct(const Obj&, Mask S);                   // when the term is zero
//
// Indices inside an object always run 0..n-1; labels carry identity across
// restriction/contraction/product.

template <class F>
int ground_size(const typename F::Obj& z) {
  return (int)z.labels.size();
}

// Iterated coproduct along an ordered list of blocks partitioning the ground
// set of z (masks over z's own index space). Returns the factors
// z|_{S1}, (z/_{S1})|_{S2 within}, ... or nullopt if any step vanishes.
template <class F>
std::optional<std::vector<typename F::Obj>> higher_coproduct(
    const typename F::Obj& z, const std::vector<Mask>& blocks) {
  int n = ground_size<F>(z);
  std::vector<typename F::Obj> factors;
  typename F::Obj cur = z;
  Mask remaining = full_mask(n);
  for (Mask b : blocks) {
    Mask local = 0;
    int idx = 0;
    for (int i = 0; i < n; ++i) {
      if (!((remaining >> i) & 1)) continue;
      if ((b >> i) & 1) local |= Mask(1) << idx;
      ++idx;
    }
    auto cp = F::coproduct(cur, local);
    if (!cp) return std::nullopt;
    factors.push_back(cp->first);
    cur = cp->second;
    remaining &= ~b;
  }
  return factors;
}

// Takeuchi's alternating sum over set compositions:
//   s(z) = sum_{(S1,...,Sk)} (-1)^k mu(Delta_{S1,...,Sk}(z)).
template <class F>
FormalSum<typename F::Obj> takeuchi_antipode(const typename F::Obj& z) {
  using Obj = typename F::Obj;
  FormalSum<Obj> out;
  int n = ground_size<F>(z);
  if (n == 0) {
    out.add(F::encode(z), z, Rat(1));
    return out;
  }
  for_each_composition(full_mask(n), [&](const std::vector<Mask>& blocks) {
    auto hc = higher_coproduct<F>(z, blocks);
    if (!hc) return;
    Obj prod = (*hc)[0];
    for (size_t i = 1; i < hc->size(); ++i) prod = F::product(prod, (*hc)[i]);
    Rat sign = (blocks.size() % 2 == 0) ? Rat(1) : Rat(-1);
    out.add(F::encode(prod), prod, sign);
  });
  return out;
}

// Characters: multiplicative Rat-valued functionals. Multiplicativity is the
// caller's responsibility; the group operations below assume it.
template <class F>
using Character = std::function<Rat(const typename F::Obj&)>;

template <class F>
Character<F> convolve(Character<F> phi, Character<F> psi) {
  return [phi, psi](const typename F::Obj& z) {
    int n = ground_size<F>(z);
    Rat acc = 0;
    for_each_subset(full_mask(n), [&](Mask s) {
      auto cp = F::coproduct(z, s);
      if (!cp) return;
      acc += phi(cp->first) * psi(cp->second);
    });
    return acc;
  };
}

// Inverse in the character group: (phi^-1)(z) = phi(s(z)) computed directly
// as the alternating sum over compositions.
template <class F>
Character<F> character_inverse(Character<F> phi) {
  return [phi](const typename F::Obj& z) {
    int n = ground_size<F>(z);
    Rat acc = 0;
    for_each_composition(full_mask(n), [&](const std::vector<Mask>& blocks) {
      auto hc = higher_coproduct<F>(z, blocks);
      if (!hc) return;
      Rat term = (blocks.size() % 2 == 0) ? Rat(1) : Rat(-1);
      for (auto& f : *hc) term *= phi(f);
      acc += term;
    });
    return acc;
  };
}

// Apply a character to a formal sum by linearity.
template <class F>
Rat apply_character(Character<F> phi, const FormalSum<typename F::Obj>& sum) {
  Rat acc = 0;
  for (auto& [k, v] : sum.terms) acc += v.second * phi(v.first);
  return acc;
}

// Polynomial invariant of z under the character zeta, expressed in the
// binomial basis: chi(n) = sum_k chi_k * binom(n, k) where chi_k sums
// prod zeta(factor) over k-block compositions.
template <class F>
Poly polynomial_invariant(Character<F> zeta, const typename F::Obj& z) {
  int n = ground_size<F>(z);
  std::vector<Rat> by_parts(n + 1, Rat(0));
  if (n == 0) by_parts[0] = 1;
  for_each_composition(full_mask(n), [&](const std::vector<Mask>& blocks) {
    if (n == 0) return;  // counted above
    auto hc = higher_coproduct<F>(z, blocks);
    if (!hc) return;
    Rat term = 1;
    for (auto& f : *hc) term *= zeta(f);
    by_parts[blocks.size()] += term;
  });
  Poly chi;
  for (int k = 0; k <= n; ++k)
    if (by_parts[k] != 0) chi += Poly::binom_x(k) * by_parts[k];
  return chi;
}

// chi_z(-m) for integer m >= 0, via exact polynomial evaluation.
template <class F>
Rat reciprocity_eval(Character<F> zeta, const typename F::Obj& z, long m) {
  return polynomial_invariant<F>(zeta, z).eval(Rat(-m));
}

}  // namespace hopfcalc
