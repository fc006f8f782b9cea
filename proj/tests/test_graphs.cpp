#include <catch2/catch_amalgamated.hpp>

#include "hopfcalc/graphs.hpp"

using namespace hopfcalc;

static Graph path_graph(int n) {
  Graph g = Graph::empty(default_labels(n));
  for (int i = 0; i + 1 < n; ++i) g.em_ref(i, i + 1) = 1;
  return g;
}

TEST_CASE("graph coproduct splits edges and makes half-edges") {
  // vertices a,b,x,y with edges {x,y},{x,a},{a,b}; S = {x,y}
  Graph g = Graph::empty({"a", "b", "x", "y"});
  g.em_ref(2, 3) = 1;  // xy
  g.em_ref(0, 2) = 1;  // xa
  g.em_ref(0, 1) = 1;  // ab
  auto [res, con] = graph_coproduct(g, 0b1100);
  CHECK(encode_graph(res) == "{x,y|xy}");
  CHECK(encode_graph(con) == "{a,b|a,ab}");
  auto [all, none] = graph_coproduct(g, 0b1111);
  CHECK(encode_graph(all) == encode_graph(g));
  CHECK(none.n() == 0);
}

TEST_CASE("incidence function is submodular and co-opposite to the coproduct") {
  Graph g = Graph::empty(default_labels(3));
  g.em_ref(0, 1) = 2;
  g.em_ref(1, 2) = 1;
  g.half[0] = 1;
  BoolFn z = incidence_fn(g);
  REQUIRE(is_submodular(z));
  for (Mask s = 0; s <= 7; ++s) {
    Mask t = full_mask(3) & ~s;
    auto [res, con] = graph_coproduct(g, s);
    auto zs = SF::coproduct(z, s);   // (z|_S, z/_S)
    auto zt = SF::coproduct(z, t);
    REQUIRE(zs);
    REQUIRE(zt);
    // inc(g|_S) = inc(g)/_T  and  inc(g/_S) = inc(g)|_T
    CHECK(fn_table_key(incidence_fn(res)) == fn_table_key(zt->second));
    CHECK(fn_table_key(incidence_fn(con)) == fn_table_key(zt->first));
  }
}

TEST_CASE("single edge incidence") {
  Graph g = Graph::empty({"a", "b"});
  g.em_ref(0, 1) = 1;
  BoolFn z = incidence_fn(g);
  CHECK(z[0b01].v == 1);
  CHECK(z[0b10].v == 1);
  CHECK(z[0b11].v == 1);
}

TEST_CASE("triangle zonotope faces") {
  Graph k3 = complete_graph(3);
  auto zf = zonotope_faces(k3);
  CHECK(zf.size() == 13);  // hexagon: 6 + 6 + 1
  CHECK(enumerate_faces(incidence_fn(k3)).size() == 13);
  CHECK(graph_flats(k3).size() == 5);  // empty, 3 single edges, all
}

TEST_CASE("path zonotope faces") {
  auto zf = zonotope_faces(path_graph(3));
  CHECK(zf.size() == 9);
  CHECK(enumerate_faces(incidence_fn(path_graph(3))).size() == 9);
}

TEST_CASE("graph antipode equals the alternating-sum oracle") {
  std::vector<Graph> cases;
  cases.push_back(path_graph(3));
  cases.push_back(complete_graph(3));
  Graph h = Graph::empty(default_labels(3));
  h.em_ref(0, 1) = 2;
  h.half[2] = 1;
  cases.push_back(h);
  for (auto& g : cases) CHECK(antipode_graph(g) == takeuchi_antipode<G>(g));
}

TEST_CASE("two-edge path antipode has 9 terms") {
  auto s = antipode_graph(path_graph(3));
  CHECK(s.size() == 9);
  for (auto& [k, v] : s.terms) CHECK((v.second == 1 || v.second == -1));
}

TEST_CASE("simple graph antipode equals the oracle") {
  for (Mask edges = 0; edges < 8; ++edges) {
    Graph g = Graph::empty(default_labels(3));
    if (edges & 1) g.em_ref(0, 1) = 1;
    if (edges & 2) g.em_ref(0, 2) = 1;
    if (edges & 4) g.em_ref(1, 2) = 1;
    CHECK(antipode_simple_graph(g) == takeuchi_antipode<SG>(g));
  }
}

TEST_CASE("simplification is a Hopf quotient") {
  Graph g = Graph::empty(default_labels(3));
  g.em_ref(0, 1) = 2;
  g.em_ref(1, 2) = 1;
  auto lhs = takeuchi_antipode<G>(g);
  FormalSum<Graph> pushed;
  for (auto& [k, v] : lhs.terms) {
    Graph s = simplify(v.first);
    pushed.add(encode_graph(s), s, v.second);
  }
  CHECK(pushed == takeuchi_antipode<SG>(simplify(g)));
}

TEST_CASE("chromatic polynomial and Stanley reciprocity") {
  Graph k3 = complete_graph(3);
  Poly chi = polynomial_invariant<SG>(edgeless_character(), k3);
  CHECK(chi.eval(3) == 6);
  for (int m = 1; m <= 4; ++m) CHECK(Rat(chromatic(k3, m)) == chi.eval(m));
  // (-1)^3 chi(-1) = 6 acyclic orientations of K3
  CHECK(chi.eval(-1) * -1 == 6);
  for (int m = 1; m <= 3; ++m)
    CHECK(chi.eval(-m) * -1 == Rat(compatible_pairs(k3, m)));

  Graph g = path_graph(3);
  Poly cg = polynomial_invariant<SG>(edgeless_character(), g);
  for (int m = 1; m <= 4; ++m) CHECK(Rat(chromatic(g, m)) == cg.eval(m));
  for (int m = 1; m <= 3; ++m)
    CHECK(cg.eval(-m) * -1 == Rat(compatible_pairs(g, m)));
}

TEST_CASE("derangement and arrangement identities") {
  long derange[] = {1, 0, 1, 2, 9, 44};
  long arrange[] = {1, 2, 5, 16, 65};
  for (int n = 0; n <= 4; ++n) {
    Rat v = humpert_martin_value(Rat(1), -1, complete_graph(n));
    CHECK(v == Rat(derange[n]) * ((n % 2 == 0) ? 1 : -1));
    Rat w = humpert_martin_value(Rat(-1), -1, complete_graph(n));
    CHECK(w == Rat(arrange[n]) * ((n % 2 == 0) ? 1 : -1));
  }
}

TEST_CASE("Humpert-Martin values match the exponential generating function") {
  for (long c : {-1L, 0L, 2L})
    for (long k : {1L, 2L, -1L})
      for (int n = 0; n <= 4; ++n)
        CHECK(humpert_martin_value(Rat(k), c, complete_graph(n)) ==
              humpert_martin_egf(Rat(k), c, n));
}
