// Acceptance driver: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>

#include "cayley/checks.hpp"
#include "cayley/coset.hpp"
#include "cayley/lincon.hpp"

using namespace cayley;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      note += (note.empty() ? "" : "; ") + what;
    }
  }
};

Elem el(const GroupTable& G, const std::string& s) { return G.parse(s); }

Form word(const LatticePtr& L, std::initializer_list<const char*> letters) {
  std::vector<int> w;
  for (const char* l : letters) w.push_back(L->pos(L->group().parse(l)));
  return monomial(L, w);
}

std::set<Elem> as_set(const std::vector<Elem>& xs) { return {xs.begin(), xs.end()}; }

void suite(Outcome& o, const SuiteResult& r, const std::string& where) {
  o.expect(r.passed, where + " " + r.name + " worst " + std::to_string(r.worst) + (r.detail.empty() ? "" : " " + r.detail));
}

Outcome criterion1() {
  Outcome o;
  auto L = build_lattice("S(3)", "(12),(13),(23)");
  const GroupTable& G = L->group();
  o.expect(as_set(L->S0()) == as_set(L->S()), "S0 != S");
  o.expect(as_set(L->S2()) == std::set<Elem>{el(G, "(123)"), el(G, "(132)")}, "S2");
  const RelationSpace& rs = L->relations(2);
  o.expect(rs.rank == 2, "relation rank " + std::to_string(rs.rank));
  o.expect(rs.dim - rs.rank == 7, "independent 2-forms");
  Form r1 = word(L, {"(12)", "(13)"}) + word(L, {"(13)", "(23)"}) + word(L, {"(23)", "(12)"});
  Form r2 = word(L, {"(12)", "(23)"}) + word(L, {"(23)", "(13)"}) + word(L, {"(13)", "(12)"});
  o.expect(forms_equal(r1, Form(L, 2)) && forms_equal(r2, Form(L, 2)), "relation sums not zero");
  return o;
}

Outcome criterion2() {
  Outcome o;
  auto L = build_lattice("A(4)", "(123),(243),(134),(142)");
  const RelationSpace& rs = L->relations(2);
  o.expect(rs.rank == 4, "relation rank " + std::to_string(rs.rank));
  o.expect(rs.dim - rs.rank == 12, "independent 2-forms");
  std::vector<Eigen::VectorXcd> cycles;
  for (Elem g : L->S2()) {
    auto cs = enumerate_cycles(*L, g);
    o.expect(cs.size() == 2, "cycle count at " + L->label(g));
    for (const auto& c : cs) {
      Form sum(L, 2), wsum(L, 2);
      for (size_t k = 0; k < c.size(); ++k) {
        int a = L->pos(c[k]), b = L->pos(c[(k + 1) % c.size()]);
        sum += monomial(L, {a, b});
        wsum += wedge(theta(L, a), theta(L, b));
      }
      o.expect(wsum.max_abs() == 0, "wedge cycle sum nonzero");
      cycles.push_back(sum.table().col(0));
    }
  }
  Eigen::MatrixXcd M(L->n() * L->n(), static_cast<Eigen::Index>(cycles.size()));
  for (size_t k = 0; k < cycles.size(); ++k) M.col(static_cast<Eigen::Index>(k)) = cycles[k];
  o.expect(cycles.size() == 8 && Eigen::FullPivLU<Eigen::MatrixXcd>(M).rank() == 8, "refined relations not 8");
  o.expect(wedge(word(L, {"(142)"}), word(L, {"(142)"})).max_abs() == 0, "(142)^(142) != 0");
  return o;
}

Outcome criterion3() {
  Outcome o;
  auto L = build_lattice("S(4)", "(12),(13),(14),(23),(24),(34)");
  o.expect(L->S2().size() == 11, "|S2| = " + std::to_string(L->S2().size()));
  const RelationSpace& rs = L->relations(2);
  o.expect(rs.dim - rs.rank == 25, "independent 2-forms " + std::to_string(rs.dim - rs.rank));
  return o;
}

Outcome criterion4() {
  Outcome o;
  auto L = build_lattice("A(5)", "(12345),(15432),(12)(34)");
  o.expect(L->order() == 60, "order");
  o.expect(L->n() == 3, "out-degree");
  o.expect(connected_components(*L).size() == 1, "not connected");
  o.expect(!is_bicovariant(*L), "bicovariant");
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (int m = 3; m <= 5; ++m) {
    auto L = build_lattice("Z(" + std::to_string(m) + ")", "1");
    o.expect(is_zero_mod_relations(d(theta(L, 0))), "d theta^1 != 0 on Z" + std::to_string(m));
    o.expect(!solve_exact(theta(L, 0)).has_value(), "theta^1 exact on Z" + std::to_string(m));
    o.expect(h1_dimension(L) >= 1, "h1 on Z" + std::to_string(m));
  }
  o.expect(h1_dimension(build_lattice("Z(4)", "1,2")) == 0, "h1 on Z4{1,2}");
  return o;
}

Outcome criterion6() {
  Outcome o;
  auto L = build_lattice("S(3)", "(12),(13),(23)");
  const GroupTable& G = L->group();
  std::vector<Elem> s(6);
  for (Elem g = 0; g < 6; ++g) {
    const std::string& l = G.label(g);
    s[g] = G.parse(l == "e" || l == "(123)" || l == "(132)" ? "(12)" : "(13)");
  }
  DiscreteVF X = make_discrete(L, s);
  o.expect(is_differentiable_map(*L, flow(X)).differentiable, "S3 flow not differentiable");
  Form t12 = theta(L, L->pos(el(G, "(12)"))), t13 = theta(L, L->pos(el(G, "(13)"))),
       t23 = theta(L, L->pos(el(G, "(23)")));
  Form pulled = pullback_form(flow(X), t12);
  o.expect(forms_equal(pulled, t13), "pullback of theta^(12)");
  Function a = zero(G), b = zero(G);
  for (const char* x : {"e", "(123)", "(132)"}) a(el(G, x)) = 1.0;
  for (const char* x : {"(12)", "(13)", "(23)"}) b(el(G, x)) = 1.0;
  Form rx = R_X(X, t12);
  o.expect(forms_equal(rx, a * t12 + b * t23), "R_X theta^(12)");
  o.expect(!forms_equal(rx, pulled), "R_X equals the pullback");

  auto Z = build_lattice("Z(3)xZ(3)", "(0,1),(1,0)");
  const GroupTable& P = Z->group();
  std::vector<Elem> sz(9);
  for (Elem g = 0; g < 9; ++g) {
    const std::string& l = P.label(g);
    sz[g] = P.parse(l == "(2,0)" || l == "(1,1)" || l == "(0,2)" ? "(1,0)" : "(0,1)");
  }
  auto rep = is_differentiable_map(*Z, flow(make_discrete(Z, sz)));
  o.expect(!rep.differentiable, "Z3xZ3 flow differentiable");
  bool witness = false;
  for (const auto& arrow : rep.violations) witness |= P.label(arrow.from) == "(1,0)" && P.label(arrow.to) == "(2,0)";
  o.expect(witness, "missing witness (1,0)->(2,0)");
  return o;
}

const std::vector<std::pair<std::string, std::string>> kSuiteLattices = {
    {"Z(4)", "1,2"}, {"S(3)", "(12),(13),(23)"}, {"Z(6)", "1,2,3"}};

Outcome criterion7() {
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  const double tol = 1e-9;
  const int trials = 100;
  for (auto& [spec, s] : kSuiteLattices) {
    auto L = build_lattice(spec, s);
    Rng rng(7);
    std::string where = spec + "{" + s + "}";
    suite(o, suite_d_squared(L, rng, trials, tol), where);
    suite(o, suite_delta_squared(L, rng, trials, tol), where);
    suite(o, suite_delta_of_delta_e(L, tol), where);
    suite(o, suite_theta_squared(L, tol), where);
    suite(o, suite_double_contraction(L, rng, trials, tol), where);
    suite(o, suite_lie_cartan(L, rng, trials, tol), where);
    suite(o, suite_invertibility_conditions(L, rng, trials), where);
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.expect(secs < 60, "took " + std::to_string(secs) + " s");
  std::ostringstream t;
  t << "(" << secs << " s)";
  if (o.ok) o.note = t.str();
  return o;
}

Outcome criterion8() {
  Outcome o;
  for (auto spec : {std::pair{"Z(4)", "1,2"}, std::pair{"S(3)", "(12),(13),(23)"}}) {
    auto L = build_lattice(spec.first, spec.second);
    for (int m : {1, 2}) {
      Rng rng(8);
      std::string where = std::string(spec.first) + " m=" + std::to_string(m);
      suite(o, suite_gauge_invariance(L, rng, 20, m, 1e-8), where);
      suite(o, suite_flat_gauge(L, rng, 20, m, 1e-10), where);
    }
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  const std::vector<std::pair<std::string, std::string>> lattices = {
      {"Z(4)", "1,2"}, {"S(3)", "(12),(13),(23)"}, {"Z(6)", "1,2,3"}, {"A(4)", "(123),(243),(134),(142)"},
      {"Z(5)", "1"},   {"Z(3)", "1,2"},            {"S(4)", "(12),(13),(14),(23),(24),(34)"}};
  for (auto& [spec, s] : lattices) {
    auto L = build_lattice(spec, s);
    LinearConnection C = LinearConnection::canonical(L);
    o.expect(is_torsion_free(C), spec + " canonical connection has torsion");
    for (const Triangle& t : enumerate_polygons(*L).triangles) {
      int h0 = L->pos(t.h0), h1 = L->pos(t.h1), h2 = L->pos(t.h2);
      VectorField got = transport_vf(C, h1, VectorField::ell(L, h2));
      if (got.distance(VectorField::ell(L, h0) - VectorField::ell(L, h1)) > 1e-12) {
        o.expect(false, spec + " triangle transport");
        break;
      }
    }
    Rng rng(9);
    suite(o, suite_linear_bianchi(L, rng, 20, 1e-9), spec);
  }
  return o;
}

Outcome criterion10() {
  Outcome o;
  {
    auto L = build_lattice("S(3)", "(12),(13),(23)");
    const GroupTable& G = L->group();
    auto D = build_coset_diagram(L, {0, el(G, "(12)")});
    o.expect(D.size() == 3, "S3/H coset count");
    auto K = [&](const char* g) { return D.coset_containing(el(G, g)); };
    const char* rows[] = {"e", "(13)", "(23)"};
    const char* table[3][3] = {{"e", "(13)", "(23)"}, {"(23)", "e", "(13)"}, {"(13)", "(23)", "e"}};
    for (int r = 0; r < 3; ++r)
      for (int p = 0; p < 3; ++p) o.expect(D.action[K(rows[r])][p] == K(table[r][p]), "S3/H action table");
    int loops = 0;
    for (const auto& r : reduction_relations(D)) loops += r.kind == ReductionRelation::Kind::loop;
    o.expect(loops == 3, "S3/H loop relations");
  }
  {
    auto L = build_lattice("Z(6)", "1,2,3");
    auto D = build_coset_diagram(L, {0, 2, 4});
    o.expect(D.size() == 2, "Z6/H coset count");
    for (int k = 0; k < D.size(); ++k) {
      o.expect(D.multiplicity(k, k) == 1 && D.is_loop(k, L->pos(2)), "Z6/H loop");
      o.expect(D.multiplicity(k, 1 - k) == 2, "Z6/H double arrow");
    }
  }
  {
    auto L = build_lattice("S(4)", "(12),(13),(14),(23),(24),(34)");
    const GroupTable& G = L->group();
    auto D = build_coset_diagram(L, parse_elements(G, "e,(123),(132)"));
    o.expect(D.size() == 8, "S4/H coset count");
    auto K = [&](const std::string& g) { return D.coset_containing(G.parse(g)); };
    const std::vector<std::pair<std::string, std::vector<std::string>>> table = {
        {"e", {"(12)", "(12)", "(14)", "(12)", "(24)", "(34)"}},
        {"(12)", {"e", "e", "(14)(23)", "e", "(13)(24)", "(12)(34)"}},
        {"(14)", {"(13)(24)", "(12)(34)", "e", "(14)(23)", "(14)(23)", "(14)(23)"}},
        {"(24)", {"(14)(23)", "(13)(24)", "(13)(24)", "(12)(34)", "e", "(13)(24)"}},
        {"(34)", {"(12)(34)", "(14)(23)", "(12)(34)", "(13)(24)", "(12)(34)", "e"}},
        {"(12)(34)", {"(34)", "(14)", "(34)", "(24)", "(34)", "(12)"}},
        {"(13)(24)", {"(14)", "(24)", "(24)", "(34)", "(12)", "(24)"}},
        {"(14)(23)", {"(24)", "(34)", "(12)", "(14)", "(14)", "(14)"}}};
    for (const auto& [row, entries] : table)
      for (int p = 0; p < 6; ++p)
        if (D.action[K(row)][p] != K(entries[p])) o.expect(false, "S4/H entry H" + row + " * " + L->label(L->s(p)));
  }
  {
    LatticeOptions opts;
    opts.grade_cap = 6;
    auto L = build_lattice(build_group("Z(2)"), {1}, opts);
    Form t = theta(L, 0), p = t;
    for (int k = 1; k <= 5; ++k) {
      Form q = mul(p, t);
      if (k % 2) o.expect(forms_equal(d(p), 2.0 * q), "Z2 d theta^" + std::to_string(k));
      p = q;
    }
  }
  return o;
}

Outcome criterion11() {
  Outcome o;
  for (auto spec : {std::pair{"S(3)", "(12),(13),(23)"}, std::pair{"Z(6)", "1,2,3"}}) {
    auto L = build_lattice(spec.first, spec.second);
    Rng rng(11);
    suite(o, suite_integral_curves(L, rng, 10, 12), spec.first);
  }
  auto L = build_lattice("S(3)", "(12),(13),(23)");
  const GroupTable& G = L->group();
  std::vector<Elem> s(6);
  for (Elem g = 0; g < 6; ++g) {
    const std::string& l = G.label(g);
    s[g] = G.parse(l == "e" || l == "(123)" || l == "(132)" ? "(12)" : "(13)");
  }
  auto orbit = integral_curve(make_discrete(L, s), 0, 12);
  int period = 0;
  for (int t = 1; t <= 12 && !period; ++t)
    if (orbit[t] == 0) period = t;
  o.expect(period == 6, "orbit period " + std::to_string(period));
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"S3 2-form structure", criterion1},
      {"A4 relations, cycles and wedge refinement", criterion2},
      {"S4 transposition lattice", criterion3},
      {"A5 lattice is not bicovariant", criterion4},
      {"closed non-exact theta on cyclic lattices", criterion5},
      {"S3 flow pullback and R_X, Z3xZ3 non-differentiable flow", criterion6},
      {"property suites, 100 trials on three lattices", criterion7},
      {"gauge invariance and flat fields", criterion8},
      {"canonical connection and Bianchi identities", criterion9},
      {"coset golden tables", criterion10},
      {"integral curves and the S3 orbit", criterion11}};
  int failed = 0;
  for (size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    failed += !o.ok;
    std::printf("%s criterion %zu: %s%s%s\n", o.ok ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                o.note.empty() ? "" : " ", o.note.c_str());
  }
  return failed ? 1 : 0;
}
