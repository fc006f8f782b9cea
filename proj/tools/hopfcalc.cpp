#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>

#include <hopfcalc/json_io.hpp>

using namespace hopfcalc;

namespace {

struct CapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int max_n() {
  if (const char* e = std::getenv("HOPFCALC_MAX_N")) {
    int v = std::atoi(e);
    if (v > 0) return v;
  }
  return 8;
}

void check_cap(int n) {
  if (n > max_n())
    throw CapError("ground set of size " + std::to_string(n) +
                   " exceeds cap " + std::to_string(max_n()) +
                   " (set HOPFCALC_MAX_N to raise)");
}

json load_input(const std::string& in) {
  std::string text = in;
  if (!in.empty() && in[0] == '@') {
    std::ifstream f(in.substr(1));
    if (!f) throw InputError("cannot open file: " + in.substr(1));
    text.assign(std::istreambuf_iterator<char>(f),
                std::istreambuf_iterator<char>());
  }
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("bad JSON: ") + e.what());
  }
}

std::string enc_poset(const Poset& p) { return p.encode(); }

template <class Fam>
int run_antipode(const typename Fam::Obj& obj,
                 FormalSum<typename Fam::Obj> (*formula)(
                     const typename Fam::Obj&),
                 std::string (*enc)(const typename Fam::Obj&),
                 const std::string& method, bool as_json) {
  check_cap((int)obj.labels.size());
  using Obj = typename Fam::Obj;
  auto render = [&](const FormalSum<Obj>& s) {
    if (as_json)
      std::cout << render_sum_json(s, enc).dump() << "\n";
    else
      std::cout << render_sum_text(s, enc) << "\n";
  };
  if (method == "formula") {
    render(formula(obj));
    return 0;
  }
  if (method == "takeuchi") {
    render(takeuchi_antipode<Fam>(obj));
    return 0;
  }
  FormalSum<Obj> a = formula(obj);
  FormalSum<Obj> b = takeuchi_antipode<Fam>(obj);
  if (a == b) {
    std::cout << "MATCH " << a.size() << " terms\n";
    render(a);
    return 0;
  }
  std::cout << "MISMATCH\nformula:  " << render_sum_text(a, enc)
            << "\ntakeuchi: " << render_sum_text(b, enc) << "\n";
  return 1;
}

int dispatch_antipode(const std::string& family, const json& j,
                      const std::string& method, bool as_json) {
  if (family == "graph")
    return run_antipode<G>(parse_graph(j, false), antipode_graph,
                           encode_graph, method, as_json);
  if (family == "simple-graph")
    return run_antipode<SG>(parse_graph(j, true), antipode_simple_graph,
                            encode_graph, method, as_json);
  if (family == "matroid")
    return run_antipode<M>(parse_matroid(j), antipode_matroid,
                           encode_matroid, method, as_json);
  if (family == "poset")
    return run_antipode<P>(parse_poset(j), antipode_poset, enc_poset, method,
                           as_json);
  if (family == "partition")
    return run_antipode<Pi>(parse_partition(j), antipode_partition,
                            encode_partition, method, as_json);
  if (family == "paths")
    return run_antipode<F>(parse_paths(j), antipode_paths, encode_paths,
                           method, as_json);
  if (family == "hypergraph")
    return run_antipode<HG>(parse_hypergraph(j, false), antipode_hg,
                            encode_hypergraph, method, as_json);
  if (family == "simple-hypergraph")
    return run_antipode<SHG>(parse_hypergraph(j, true), antipode_shg,
                             encode_hypergraph, method, as_json);
  if (family == "complex")
    return run_antipode<SC>(parse_complex(j), antipode_sc, encode_complex,
                            method, as_json);
  if (family == "buildset")
    return run_antipode<BS>(parse_buildset(j), antipode_bs, encode_buildset,
                            method, as_json);
  if (family == "w-graph")
    return run_antipode<W>(parse_graph(j, true), antipode_w, encode_graph,
                           method, as_json);
  throw InputError("unknown family: " + family);
}

// Polynomial invariant + ground size for the registered (family, character)
// pairs.
std::pair<Poly, int> invariant_poly(const std::string& family,
                                    const std::string& character,
                                    const json& j) {
  if (character == "chromatic" &&
      (family == "simple-graph" || family == "graph")) {
    Graph g = simplify(parse_graph(j, family == "simple-graph"));
    check_cap(g.n());
    return {polynomial_invariant<SG>(edgeless_character(), g), g.n()};
  }
  if (character == "order" && family == "poset") {
    Poset p = parse_poset(j);
    check_cap(p.n());
    return {order_polynomial(p), p.n()};
  }
  if (character == "bjr" && family == "matroid") {
    Matroid m = parse_matroid(j);
    check_cap(m.n());
    return {polynomial_invariant<M>(single_basis_character(), m), m.n()};
  }
  if (character == "bergman" && family == "matroid") {
    Matroid m = parse_matroid(j);
    check_cap(m.n());
    return {bergman_polynomial(m), m.n()};
  }
  throw InputError("no character '" + character + "' for family '" + family +
                   "'");
}

int run_invariant(const std::string& family, const std::string& character,
                  const json& j, bool poly, long at) {
  auto [chi, n] = invariant_poly(family, character, j);
  if (poly)
    std::cout << chi.str("n") << "\n";
  else
    std::cout << chi.eval(Rat(at)).get_str() << "\n";
  return 0;
}

int run_reciprocity(const std::string& family, const std::string& character,
                    const json& j, long m) {
  if (m < 0) throw InputError("--n must be nonnegative");
  auto [chi, n] = invariant_poly(family, character, j);
  Rat lhs = chi.eval(Rat(-m));
  if (n % 2) lhs = -lhs;
  Int rhs;
  if (character == "chromatic") {
    Graph g = simplify(parse_graph(j, family == "simple-graph"));
    rhs = compatible_pairs(g, (int)m);
  } else if (character == "order") {
    // the invariant is the strict order polynomial; reciprocity pairs it
    // with the weak count
    rhs = order_polynomial_weak(parse_poset(j), (int)m);
  } else if (character == "bjr") {
    rhs = bjr_reciprocity_count(parse_matroid(j), (int)m);
  } else {
    throw InputError("no reciprocity count for character '" + character + "'");
  }
  std::cout << "(-1)^" << n << " chi(-" << m << ") = " << lhs.get_str()
            << " ; direct count = " << rhs.get_str() << "\n";
  if (lhs != Rat(rhs)) {
    std::cout << "MISMATCH\n";
    return 1;
  }
  std::cout << "EQUAL\n";
  return 0;
}

BoolFn polytope_of(const std::string& family, const json& j) {
  if (family == "graph" || family == "simple-graph" || family == "w-graph")
    return incidence_fn(parse_graph(j, family != "graph"));
  if (family == "matroid") return rank_fn(parse_matroid(j));
  if (family == "poset") return lower_fn(parse_poset(j));
  if (family == "hypergraph" || family == "simple-hypergraph")
    return hypergraphic_polytope(parse_hypergraph(j, family != "hypergraph"));
  if (family == "buildset")
    return hypergraphic_polytope(bs_as_hypergraph(parse_buildset(j)));
  if (family == "permutahedron" || family == "associahedron") {
    int n = j.value("n", 0);
    if (n < 1) throw InputError("need {\"n\": k} with k >= 1");
    check_cap(n);
    if (family == "permutahedron") return incidence_fn(complete_graph(n));
    return loday_associahedron(n);
  }
  throw InputError("no polytope for family: " + family);
}

int run_faces(const std::string& family, const json& j) {
  BoolFn z = polytope_of(family, j);
  check_cap(z.n());
  auto faces = enumerate_faces(z);
  std::vector<std::pair<int, std::string>> lines;
  for (auto& [key, rec] : faces) {
    std::string desc;
    for (Mask b : rec.witnesses.front()) {
      if (!desc.empty()) desc += "|";
      for (int i : bits_of(b)) desc += z.labels[i];
    }
    lines.push_back({rec.dim, "dim " + std::to_string(rec.dim) + "  witnesses " +
                                  std::to_string(rec.witnesses.size()) +
                                  "  composition " + desc});
  }
  std::sort(lines.begin(), lines.end());
  for (auto& [d, line] : lines) std::cout << line << "\n";
  std::cout << "f-vector:";
  for (long c : face_census(z)) std::cout << " " << c;
  std::cout << "\n" << faces.size() << " faces\n";
  return 0;
}

int run_invert(const std::string& kind_flag, const std::string& method,
               const json& j) {
  auto [kind, coeffs] = parse_series(j);
  std::string want = kind_flag.empty() ? (kind == "egf" ? "mult" : "comp")
                                       : kind_flag;
  if ((want == "mult") != (kind == "egf"))
    throw InputError("series kind " + kind + " does not match --kind " + want);
  int order = (int)coeffs.size() - 1;
  bool polytopal = (method == "polytopal" || method == "all");
  if (polytopal && order > 6)
    throw CapError("polytopal inversion capped at order 6");
  auto print = [](const std::vector<Rat>& v) {
    std::cout << "coeffs:";
    for (auto& c : v) std::cout << " " << c.get_str();
    std::cout << "\n";
  };
  std::vector<std::vector<Rat>> results;
  if (want == "mult") {
    ExpSeries A{coeffs};
    if (method == "direct" || method == "all")
      results.push_back(mult_inverse_direct(A).a);
    if (method == "enumerative" || method == "all")
      results.push_back(mult_inverse_enumerative(A).a);
    if (polytopal) results.push_back(mult_inverse_polytopal(A, order).a);
  } else {
    OrdSeries C{coeffs};
    if (method == "direct" || method == "all")
      results.push_back(comp_inverse_direct(C).c);
    if (method == "enumerative" || method == "all")
      results.push_back(comp_inverse_enumerative(C).c);
    if (polytopal) results.push_back(comp_inverse_polytopal(C, order).c);
  }
  if (results.empty()) throw InputError("unknown method: " + method);
  for (size_t i = 1; i < results.size(); ++i)
    if (results[i] != results[0]) {
      std::cout << "METHOD MISMATCH\n";
      for (auto& r : results) print(r);
      return 1;
    }
  print(results[0]);
  if (results.size() > 1)
    std::cout << results.size() << " methods agree\n";
  return 0;
}

int run_char_group_check(const std::string& kind, int nmax) {
  check_cap(nmax);
  std::mt19937 rng(20240901);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
  auto coeffs = [&](int N) {
    std::vector<Rat> v{Rat(1)};
    for (int i = 1; i <= N; ++i) {
      Rat r(num(rng), den(rng));
      r.canonicalize();
      v.push_back(r);
    }
    return v;
  };
  bool ok = true;
  if (kind == "perm" || kind == "both") {
    bool r = char_group_perm_iso(nmax, ExpSeries{coeffs(nmax)},
                                 ExpSeries{coeffs(nmax)});
    std::cout << "perm: " << (r ? "ok" : "MISMATCH") << "\n";
    ok = ok && r;
  }
  if (kind == "assoc" || kind == "both") {
    bool r = char_group_assoc_iso(nmax, OrdSeries{coeffs(nmax)},
                                  OrdSeries{coeffs(nmax)});
    std::cout << "assoc: " << (r ? "ok" : "MISMATCH") << "\n";
    ok = ok && r;
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hopfcalc: antipodes, invariants, faces, and series inversion "
               "for generalized permutahedra"};
  app.require_subcommand(1);

  std::string family, input, character;
  std::string antipode_method = "formula", invert_method = "direct";
  std::string invert_kind, chk_kind = "both";
  bool as_json = false, want_poly = false;
  long at_n = 1;
  int nmax = 5;

  auto* cmd_antipode = app.add_subcommand("antipode", "cancellation-free or brute-force antipode");
  cmd_antipode->add_option("--family", family)->required();
  cmd_antipode->add_option("--in", input)->required();
  cmd_antipode->add_option("--method", antipode_method)
      ->check(CLI::IsMember({"formula", "takeuchi", "both"}));
  cmd_antipode->add_flag("--json", as_json);

  auto* cmd_oracle = app.add_subcommand("oracle-diff", "compare formula antipode against the alternating-sum oracle");
  cmd_oracle->add_option("--family", family)->required();
  cmd_oracle->add_option("--in", input)->required();

  auto* cmd_invariant = app.add_subcommand("invariant", "polynomial invariant of an object");
  cmd_invariant->add_option("--family", family)->required();
  cmd_invariant->add_option("--character", character)->required();
  cmd_invariant->add_option("--in", input)->required();
  cmd_invariant->add_flag("--poly", want_poly);
  cmd_invariant->add_option("--n", at_n);

  auto* cmd_reciprocity = app.add_subcommand("reciprocity", "evaluate chi(-n) against the direct count");
  cmd_reciprocity->add_option("--family", family)->required();
  cmd_reciprocity->add_option("--character", character)->required();
  cmd_reciprocity->add_option("--in", input)->required();
  cmd_reciprocity->add_option("--n", at_n)->required();

  auto* cmd_faces = app.add_subcommand("faces", "enumerate faces of the associated polytope");
  cmd_faces->add_option("--family", family)->required();
  cmd_faces->add_option("--in", input)->required();

  auto* cmd_invert = app.add_subcommand("invert", "series inversion");
  cmd_invert->add_option("--in", input)->required();
  cmd_invert->add_option("--kind", invert_kind)->check(CLI::IsMember({"mult", "comp"}));
  cmd_invert->add_option("--method", invert_method)
      ->check(CLI::IsMember({"direct", "enumerative", "polytopal", "all"}));

  auto* cmd_chk = app.add_subcommand("char-group-check", "character group vs series group isomorphisms");
  cmd_chk->add_option("--kind", chk_kind)
      ->check(CLI::IsMember({"perm", "assoc", "both"}));
  cmd_chk->add_option("--nmax", nmax);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_antipode->parsed())
      return dispatch_antipode(family, load_input(input), antipode_method, as_json);
    if (cmd_oracle->parsed())
      return dispatch_antipode(family, load_input(input), "both", false);
    if (cmd_invariant->parsed())
      return run_invariant(family, character, load_input(input), want_poly,
                           at_n);
    if (cmd_reciprocity->parsed())
      return run_reciprocity(family, character, load_input(input), at_n);
    if (cmd_faces->parsed()) return run_faces(family, load_input(input));
    if (cmd_invert->parsed())
      return run_invert(invert_kind, invert_method, load_input(input));
    if (cmd_chk->parsed()) return run_char_group_check(chk_kind, nmax);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const CapError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
