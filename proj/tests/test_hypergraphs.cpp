#include <catch2/catch_amalgamated.hpp>

#include "hopfcalc/hypergraphs.hpp"

using namespace hopfcalc;

static Hypergraph hg_of(std::vector<std::string> labels, std::vector<Mask> edges) {
  Hypergraph h = Hypergraph::empty(std::move(labels));
  for (Mask e : edges) ++h.mult[e];
  return h;
}

// the running example {0,1,2,3,12,23,123} on ground {1,2,3}
static Hypergraph example_h() {
  return hg_of({"1", "2", "3"}, {0b001, 0b010, 0b100, 0b011, 0b110, 0b111});
}

TEST_CASE("hypergraph minors") {
  Hypergraph h = example_h();
  auto [r13, c13] = hg_minors(h, 0b101);
  CHECK(encode_hypergraph(r13) == "{1,3|-,1,3}");
  CHECK(encode_hypergraph(c13) == "{2|-,2,2,2,2}");
  auto [r2, c2] = hg_minors(h, 0b010);
  CHECK(encode_hypergraph(r2) == "{2|-,2}");
  CHECK(encode_hypergraph(c2) == "{1,3|-,1,1,3,3,13}");
  auto [all, none] = hg_minors(h, 0b111);
  CHECK(encode_hypergraph(all) == encode_hypergraph(h));
  CHECK(encode_hypergraph(none) == "{|-}");
}

TEST_CASE("hypergraphic polytope is co-opposite to the minors") {
  Hypergraph h = example_h();
  h.mult[0b011] = 2;  // a multiedge for good measure
  BoolFn z = hypergraphic_polytope(h);
  REQUIRE(is_submodular(z));
  for (Mask s = 0; s <= 0b111; ++s) {
    Mask t = 0b111 & ~s;
    auto [res_t, con_t] = hg_minors(h, t);  // (H|_T, H/_T)
    auto zc = SF::coproduct(z, s);
    REQUIRE(zc);
    CHECK(fn_table_key(zc->first) == fn_table_key(hypergraphic_polytope(con_t)));   // z|_S = z of H/_T
    CHECK(fn_table_key(zc->second) == fn_table_key(hypergraphic_polytope(res_t)));  // z/_S = z of H|_T
  }
}

TEST_CASE("relational readback inverts the polytope construction") {
  Hypergraph h = hg_of({"a", "b", "c", "d"}, {0b0011, 0b0011, 0b1110, 0b1000});
  auto res = relational_test(hypergraphic_polytope(h));
  REQUIRE(res.ok);
  for (Mask m = 1; m < 16; ++m) CHECK(res.y[m] == h.mult[m]);
}

TEST_CASE("hypergraph antipode matches the worked 11-term expansion") {
  Hypergraph h = example_h();
  auto s = antipode_hg(h);
  REQUIRE(s.size() == 11);
  auto coeff = [&](std::vector<Mask> edges) {
    return s.coeff(encode_hypergraph(hg_of({"1", "2", "3"}, std::move(edges))));
  };
  // One face per term, coefficient (-1)^(number of components).
  CHECK(coeff({1, 2, 4, 3, 6, 7}) == -1);      // H itself (1 component)
  CHECK(coeff({1, 2, 4, 1, 6, 1}) == 1);       // {0,1,2,3,1,23,1}
  CHECK(coeff({1, 2, 4, 1, 4, 5}) == 1);       // {0,1,2,3,1,3,13}
  CHECK(coeff({1, 2, 4, 3, 4, 4}) == 1);       // {0,1,2,3,12,3,3}
  CHECK(coeff({1, 2, 4, 2, 6, 6}) == 1);       // {0,1,2,3,2,23,23}
  CHECK(coeff({1, 2, 4, 3, 2, 3}) == 1);       // {0,1,2,3,12,2,12}
  CHECK(coeff({1, 2, 4, 1, 2, 1}) == -1);      // {0,1,2,3,1,2,1}
  CHECK(coeff({1, 2, 4, 1, 4, 1}) == -1);      // {0,1,2,3,1,3,1}
  CHECK(coeff({1, 2, 4, 1, 4, 4}) == -1);      // {0,1,2,3,1,3,3}
  CHECK(coeff({1, 2, 4, 2, 4, 4}) == -1);      // {0,1,2,3,2,3,3}
  CHECK(coeff({1, 2, 4, 2, 2, 2}) == -1);      // {0,1,2,3,2,2,2}
}

TEST_CASE("simple hypergraph antipode groups the same example") {
  auto s = antipode_shg(example_h());
  REQUIRE(s.size() == 5);
  auto coeff = [&](std::vector<Mask> edges) {
    return s.coeff(encode_hypergraph(hg_of({"1", "2", "3"}, std::move(edges))));
  };
  CHECK(coeff({1, 2, 4, 3, 6, 7}) == -1);
  CHECK(coeff({1, 2, 4, 6}) == 2);   // {0,1,2,3,23}
  CHECK(coeff({1, 2, 4, 3}) == 2);   // {0,1,2,3,12}
  CHECK(coeff({1, 2, 4, 5}) == 1);   // {0,1,2,3,13}
  CHECK(coeff({1, 2, 4}) == -5);     // {0,1,2,3}
}

TEST_CASE("hypergraph antipodes equal the alternating-sum oracle") {
  std::vector<Hypergraph> cases;
  cases.push_back(example_h());
  cases.push_back(hg_of({"a"}, {1}));
  cases.push_back(hg_of({"a", "b", "c"}, {0b111, 0b011, 0b011}));
  for (auto& h : cases) CHECK(antipode_hg(h) == takeuchi_antipode<HG>(h));
  for (auto& h : cases) CHECK(antipode_shg(support(h)) == takeuchi_antipode<SHG>(support(h)));
}

TEST_CASE("support is a Hopf morphism") {
  Hypergraph h = example_h();
  h.mult[0b011] = 3;
  h.mult[0b100] = 2;
  for (Mask s = 0; s <= 0b111; ++s) {
    auto hg = HG::coproduct(h, s);
    auto sh = SHG::coproduct(support(h), s);
    CHECK(encode_hypergraph(support(hg->first)) == encode_hypergraph(sh->first));
    CHECK(encode_hypergraph(support(hg->second)) == encode_hypergraph(sh->second));
  }
}

TEST_CASE("component count tracks face dimension") {
  Hypergraph h = example_h();
  for (auto& [key, rec] : enumerate_faces(hypergraphic_polytope(h))) {
    Hypergraph g = hg_face(h, rec.witnesses.front());
    CHECK(hypergraph_components(g) == 3 - rec.dim);
  }
}

TEST_CASE("all pairs give a standard permutahedron up to normal equivalence") {
  Hypergraph h = Hypergraph::empty(default_labels(3));
  h.mult[0b011] = h.mult[0b101] = h.mult[0b110] = 1;
  BoolFn perm = BoolFn::zero(default_labels(3));
  for (Mask m = 1; m < 8; ++m) {
    int a = popcount(m);
    long s = 0;
    for (int k = 3 - a + 1; k <= 3; ++k) s += k;
    perm[m] = ExtQ(Rat(s));
  }
  CHECK(normally_equivalent(hypergraphic_polytope(h), perm));
}

// --- simplicial complexes -------------------------------------------------

static Complex complex_of(std::vector<std::string> labels, std::vector<Mask> facets) {
  Complex c = Complex::empty(std::move(labels));
  for (Mask f : facets)
    for_each_subset(f, [&](Mask m) { c.face[m] = 1; });
  return c;
}

TEST_CASE("simplicial complex antipode equals the alternating-sum oracle") {
  std::vector<Complex> cases;
  cases.push_back(complex_of({"a", "b"}, {0b11}));
  cases.push_back(complex_of({"a", "b", "c"}, {0b011, 0b110}));
  cases.push_back(complex_of({"a", "b", "c"}, {0b111}));
  cases.push_back(complex_of({"a", "b", "c"}, {0b001, 0b010, 0b100}));
  for (auto& c : cases) {
    REQUIRE(c.downward_closed());
    CHECK(antipode_sc(c) == takeuchi_antipode<SC>(c));
  }
}

TEST_CASE("edgeless complex antipode is a sign flip") {
  Complex c = complex_of(default_labels(3), {0b001, 0b010, 0b100});
  auto s = antipode_sc(c);
  REQUIRE(s.size() == 1);
  CHECK(s.coeff(encode_complex(c)) == -1);
}

TEST_CASE("complex polytope is normally equivalent to the 1-skeleton zonotope") {
  std::vector<Complex> cases;
  cases.push_back(complex_of(default_labels(3), {0b111}));
  cases.push_back(complex_of(default_labels(4), {0b0111, 0b1100}));
  cases.push_back(complex_of(default_labels(4), {0b0011, 0b0110, 0b1001}));
  for (auto& c : cases)
    CHECK(normally_equivalent(hypergraphic_polytope(complex_as_hypergraph(c)),
                              incidence_fn(one_skeleton(c))));
}

TEST_CASE("complex antipode is consistent with the simple-hypergraph antipode") {
  Complex c = complex_of({"a", "b", "c"}, {0b011, 0b110});
  FormalSum<Hypergraph> pushed;
  for (auto& [k, v] : antipode_sc(c).terms) {
    Hypergraph h = complex_as_hypergraph(v.first);
    pushed.add(encode_hypergraph(h), h, v.second);
  }
  CHECK(pushed == antipode_shg(complex_as_hypergraph(c)));
}
