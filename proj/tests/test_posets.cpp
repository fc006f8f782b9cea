#include <catch2/catch_amalgamated.hpp>

#include "hopfcalc/posets.hpp"

using namespace hopfcalc;

static Poset chain(int n) {
  std::vector<std::pair<int, int>> rels;
  for (int i = 0; i + 1 < n; ++i) rels.push_back({i, i + 1});
  return poset_from_strict_pairs(default_labels(n), rels);
}

static Poset antichain(int n) { return poset_from_strict_pairs(default_labels(n), {}); }

// a<c, b<c, a<d, b<d
static Poset diamond() {
  return poset_from_strict_pairs(default_labels(4), {{0, 2}, {1, 2}, {0, 3}, {1, 3}});
}

TEST_CASE("poset coproduct vanishes off lower sets") {
  Poset p = chain(2);
  CHECK(P::coproduct(p, 0b01).has_value());
  CHECK(!P::coproduct(p, 0b10).has_value());
}

TEST_CASE("lower-set function is a Hopf morphism into submodular functions") {
  for (auto& p : {chain(3), diamond(), antichain(3)}) {
    BoolFn z = lower_fn(p);
    REQUIRE(is_submodular(z));
    for (Mask s = 0; s < (Mask(1) << p.n()); ++s) {
      auto pc = P::coproduct(p, s);
      auto zc = SF::coproduct(z, s);
      CHECK(pc.has_value() == zc.has_value());
      if (pc && zc) {
        CHECK(fn_table_key(lower_fn(pc->first)) == fn_table_key(zc->first));
        CHECK(fn_table_key(lower_fn(pc->second)) == fn_table_key(zc->second));
      }
    }
  }
}

TEST_CASE("poset cone rays come from cover relations") {
  CHECK(poset_cone_rays(antichain(3)).empty());
  auto rays = poset_cone_rays(chain(3));
  REQUIRE(rays.size() == 2);  // b-a and c-b, not c-a
  CHECK(rays[0] == std::vector<Rat>{-1, 1, 0});
  CHECK(rays[1] == std::vector<Rat>{0, -1, 1});
  CHECK(poset_cone_rays(diamond()).size() == 4);
}

TEST_CASE("diamond poset has 10 positive subposets and cone face census 1,4,4,1") {
  Poset d = diamond();
  CHECK(positive_subposets(d).size() == 10);
  auto census = face_census(lower_fn(d));
  REQUIRE(census.size() == 4);
  CHECK(census[0] == 1);
  CHECK(census[1] == 4);
  CHECK(census[2] == 4);
  CHECK(census[3] == 1);
}

TEST_CASE("positive-subposet antipode equals the alternating-sum oracle") {
  for (auto& p : {chain(2), chain(3), antichain(3), diamond(),
                  poset_from_strict_pairs(default_labels(3), {{0, 1}, {0, 2}})})
    CHECK(antipode_poset(p) == takeuchi_antipode<P>(p));
}

TEST_CASE("antichain antipode is a sign flip") {
  Poset a = antichain(3);
  auto s = antipode_poset(a);
  REQUIRE(s.size() == 1);
  CHECK(s.coeff(a.encode()) == -1);
}

TEST_CASE("face count of the poset cone equals the positive subposet count") {
  for (auto& p : {chain(3), diamond(), antichain(2),
                  poset_from_strict_pairs(default_labels(3), {{0, 2}, {1, 2}})})
    CHECK(enumerate_faces(lower_fn(p)).size() == positive_subposets(p).size());
}

TEST_CASE("order polynomial and Stanley poset reciprocity") {
  Poset c2 = chain(2);
  Poly chi = order_polynomial(c2);
  CHECK(chi.eval(2) == 1);                              // strict maps
  CHECK(Rat(order_polynomial_weak(c2, 2)) == 3);
  for (auto& p : {chain(2), chain(3), diamond(), antichain(3)}) {
    Poly op = order_polynomial(p);
    int n = p.n();
    for (int m = 1; m <= 3; ++m) {
      CHECK(op.eval(m) == Rat(order_polynomial_strict(p, m)));
      Rat recip = op.eval(-m) * ((n % 2 == 0) ? 1 : -1);
      CHECK(recip == Rat(order_polynomial_weak(p, m)));
    }
  }
}

TEST_CASE("preposet round trip on assorted posets") {
  for (auto& p : {chain(4), diamond(), antichain(4),
                  poset_from_strict_pairs(default_labels(4), {{0, 1}, {2, 3}})}) {
    auto q = preposet_from_01inf(lower_fn(p));
    REQUIRE(q);
    CHECK(q->leq == p.leq);
  }
  // a genuine preposet: a ~ b below c
  Preposet q;
  q.labels = default_labels(3);
  q.leq = {0b011, 0b011, 0b111};
  REQUIRE(q.valid());
  CHECK(!q.is_poset());
  auto back = preposet_from_01inf(lower_fn(q));
  REQUIRE(back);
  CHECK(back->leq == q.leq);
}
