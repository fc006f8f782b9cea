#include <catch2/catch_amalgamated.hpp>

#include "hopfcalc/gp.hpp"
#include "hopfcalc/hopf.hpp"

using namespace hopfcalc;

TEST_CASE("set composition counts are the ordered Bell numbers") {
  uint64_t expect[] = {1, 1, 3, 13, 75, 541, 4683};
  for (int n = 0; n <= 6; ++n) CHECK(count_compositions(n) == expect[n]);
}

TEST_CASE("binomial basis polynomials") {
  CHECK(Poly::binom_x(0) == Poly::constant(1));
  CHECK(Poly::binom_x(2).eval(5) == 10);
  CHECK(Poly::binom_x(3).eval(-1) == -1);
}

static BoolFn std_permutahedron(int n) {
  // z(A) = sum_{k=n-|A|+1}^{n} k: the permutahedron of (1..n)
  BoolFn z = BoolFn::zero(default_labels(n));
  for (Mask m = 1; m < (Mask(1) << n); ++m) {
    int a = popcount(m);
    long s = 0;
    for (int k = n - a + 1; k <= n; ++k) s += k;
    z[m] = ExtQ(Rat(s));
  }
  return z;
}

TEST_CASE("permutahedron basics") {
  BoolFn z = std_permutahedron(3);
  REQUIRE(is_submodular(z));
  auto vs = vertices(z);
  CHECK(vs.size() == 6);
  CHECK(polytope_dim(z) == 2);
  auto census = face_census(z);
  REQUIRE(census.size() == 3);
  CHECK(census[0] == 6);
  CHECK(census[1] == 6);
  CHECK(census[2] == 1);
}

TEST_CASE("geometric antipode agrees with the alternating-sum antipode") {
  for (int n = 1; n <= 3; ++n) {
    BoolFn z = std_permutahedron(n);
    CHECK(antipode_gp(z) == takeuchi_antipode<SF>(z));
  }
}

TEST_CASE("submodular product and coproduct") {
  BoolFn z = std_permutahedron(3);
  auto cp = SF::coproduct(z, 0b101);
  REQUIRE(cp);
  BoolFn back = SF::product(cp->first, cp->second);
  CHECK(is_submodular(cp->first));
  CHECK(is_submodular(cp->second));
  CHECK(back.n() == 3);
}

TEST_CASE("relational readback on a known hypergraph sum") {
  // z(J) = #{K in {ab, bc, c} : K meets J}
  BoolFn z = BoolFn::zero(default_labels(3));
  std::vector<Mask> hyper = {0b011, 0b110, 0b100};
  for (Mask j = 1; j < 8; ++j) {
    long c = 0;
    for (Mask k : hyper)
      if (k & j) ++c;
    z[j] = ExtQ(Rat(c));
  }
  auto res = relational_test(z);
  REQUIRE(res.ok);
  CHECK(res.y[0b011] == 1);
  CHECK(res.y[0b110] == 1);
  CHECK(res.y[0b100] == 1);
  CHECK(res.y[0b001] == 0);
  CHECK(res.y[0b111] == 0);

  z[0b111] = ExtQ(Rat(2));  // no longer a hypergraph sum
  auto bad = relational_test(z);
  CHECK(!bad.ok);
}

TEST_CASE("preposet roundtrip through its lower-set function") {
  Preposet p;
  p.labels = default_labels(3);
  p.leq = {0b001, 0b011, 0b011 | 0b100};  // a < b < c
  REQUIRE(p.valid());
  BoolFn z = lower_fn(p);
  CHECK(is_submodular(z));
  auto q = preposet_from_01inf(z);
  REQUIRE(q);
  CHECK(q->leq == p.leq);
  CHECK(polytope_dim(z) == 2);  // cone of a 3-chain
  CHECK(q->comparability_components() == 1);
}

TEST_CASE("basic invariant of a point counts all directions") {
  BoolFn pt = BoolFn::zero(default_labels(2));
  pt[0b01] = ExtQ(Rat(1));
  pt[0b10] = ExtQ(Rat(2));
  pt[0b11] = ExtQ(Rat(3));
  REQUIRE(is_point(pt));
  Poly chi = polynomial_invariant<SF>(basic_character(), pt);
  CHECK(chi.eval(4) == 16);                       // every y is generic
  CHECK(count_generic_directions(pt, 4) == 16);
}

TEST_CASE("basic invariant counts generic directions on a segment") {
  // segment from (1,2) to (2,1): z(a)=2, z(b)=2, z(ab)=3
  BoolFn z = BoolFn::zero(default_labels(2));
  z[0b01] = ExtQ(Rat(2));
  z[0b10] = ExtQ(Rat(2));
  z[0b11] = ExtQ(Rat(3));
  REQUIRE(is_submodular(z));
  for (int m = 1; m <= 4; ++m) {
    Poly chi = polynomial_invariant<SF>(basic_character(), z);
    CHECK(chi.eval(m) == Rat((long)m * m - m));   // y generic iff y_a != y_b
    CHECK(count_generic_directions(z, m) == Int((long)m * m - m));
  }
}

TEST_CASE("reciprocity of the basic invariant") {
  std::vector<BoolFn> cases = {std_permutahedron(2), std_permutahedron(3)};
  // segment with a loose end direction
  for (auto& z : cases) {
    Poly chi = polynomial_invariant<SF>(basic_character(), z);
    int n = z.n();
    for (int m = 1; m <= 3; ++m) {
      Rat lhs = chi.eval(Rat(-m)) * ((n % 2 == 0) ? 1 : -1);
      CHECK(lhs == Rat(sum_face_vertex_counts(z, m)));
    }
  }
}

TEST_CASE("character inverse inverts under convolution") {
  Character<SF> zeta = basic_character();
  Character<SF> inv = character_inverse<SF>(zeta);
  Character<SF> conv = convolve<SF>(zeta, inv);
  BoolFn z = std_permutahedron(3);
  CHECK(conv(z) == 0);  // counit on nonempty ground set
  auto cp = SF::coproduct(z, 0);
  REQUIRE(cp);
  CHECK(conv(cp->first) == 1);  // counit on the empty object
}
