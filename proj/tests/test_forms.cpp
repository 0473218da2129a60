#include <doctest.h>

#include <set>

#include "cayley/checks.hpp"

using namespace cayley;

namespace {

const std::vector<std::pair<std::string, std::string>> kLattices = {
    {"Z(4)", "1,2"}, {"S(3)", "(12),(13),(23)"}, {"Z(6)", "1,2,3"}, {"A(4)", "(123),(243),(134),(142)"}, {"Z(5)", "1"}};

Form word(const LatticePtr& L, std::initializer_list<const char*> letters) {
  std::vector<int> w;
  for (const char* l : letters) w.push_back(L->pos(L->group().parse(l)));
  return monomial(L, w);
}

}  // namespace

TEST_CASE("monomial multiplication rule") {
  auto L = build_lattice("Z(4)", "1,2");
  const GroupTable& G = L->group();
  Form a = indicator(G, 0) * theta(L, 0);  // e^0 theta^1
  Form b = indicator(G, 1) * theta(L, 1);  // e^1 theta^2
  Form c = indicator(G, 2) * theta(L, 1);
  Form ab = mul(a, b);
  CHECK(ab.grade() == 2);
  Form expect = indicator(G, 0) * monomial(L, {0, 1});
  CHECK((ab - expect).max_abs() == 0);
  CHECK(mul(a, c).max_abs() == 0);
  CHECK((function_form(L, one(G)) * a - a).max_abs() == 0);
}

TEST_CASE("theta commutes past functions by a right shift") {
  auto L = build_lattice("S(3)", "(12),(13),(23)");
  Rng rng(1);
  Function f = random_function(L->group(), rng);
  for (int p = 0; p < L->n(); ++p) {
    Form lhs = theta(L, p) * f;
    Form rhs = rpull(L->group(), L->s(p), f) * theta(L, p);
    CHECK((lhs - rhs).max_abs() < 1e-15);
  }
}

TEST_CASE("d on functions") {
  for (auto& [spec, s] : kLattices) {
    auto L = build_lattice(spec, s);
    const GroupTable& G = L->group();
    for (Elem g = 0; g < G.order(); ++g) {
      Form de = d(function_form(L, indicator(G, g)));
      for (int p = 0; p < L->n(); ++p)
        CHECK((de.coefficient(p) - (indicator(G, G.mul(g, G.inv(L->s(p)))) - indicator(G, g))).norm() == 0);
    }
    Rng rng(2);
    Function f = random_function(G, rng);
    Form df = d(function_form(L, f));
    Form comm = graded_commutator(theta(L), function_form(L, f));
    CHECK((df - comm).max_abs() < 1e-14);
    for (int p = 0; p < L->n(); ++p) CHECK((df.coefficient(p) - ell(G, L->s(p), f)).norm() < 1e-14);
    CHECK(d(function_form(L, one(G))).max_abs() < 1e-15);
  }
}

TEST_CASE("d theta^1 on Z3 with S = {1,2}") {
  auto L = build_lattice("Z(3)", "1,2");
  Form expect = 2.0 * monomial(L, {0, 0}) - monomial(L, {1, 1}) + monomial(L, {0, 1}) + monomial(L, {1, 0});
  CHECK(forms_equal(d(theta(L, 0)), expect));
  CHECK((d(theta(L, 0)) - expect).max_abs() < 1e-14);
  Form expect2 = 2.0 * monomial(L, {1, 1}) - monomial(L, {0, 0}) + monomial(L, {0, 1}) + monomial(L, {1, 0});
  CHECK(forms_equal(d(theta(L, 1)), expect2));
}

TEST_CASE("S3 2-form relations") {
  auto L = build_lattice("S(3)", "(12),(13),(23)");
  Form r1 = word(L, {"(12)", "(13)"}) + word(L, {"(13)", "(23)"}) + word(L, {"(23)", "(12)"});
  Form r2 = word(L, {"(12)", "(23)"}) + word(L, {"(23)", "(13)"}) + word(L, {"(13)", "(12)"});
  CHECK(is_zero_mod_relations(r1));
  CHECK(is_zero_mod_relations(r2));
  CHECK_FALSE(is_zero_mod_relations(word(L, {"(12)", "(13)"})));
  CHECK_FALSE(is_zero_mod_relations(word(L, {"(12)", "(12)"})));
  CHECK_FALSE(is_zero_mod_relations(r1 - 2.0 * word(L, {"(12)", "(13)"})));
  // the seven listed words are independent modulo relations
  std::vector<Form> seven{word(L, {"(12)", "(12)"}), word(L, {"(13)", "(13)"}), word(L, {"(23)", "(23)"}),
                          word(L, {"(13)", "(23)"}), word(L, {"(23)", "(12)"}), word(L, {"(12)", "(23)"}),
                          word(L, {"(23)", "(13)"})};
  Eigen::MatrixXcd M(9, 7);
  for (int k = 0; k < 7; ++k) M.col(k) = normal_form(seven[k]).table().col(0);
  CHECK(Eigen::FullPivLU<Eigen::MatrixXcd>(M).rank() == 7);
}

TEST_CASE("independent 2-form count is |S|^2 - |S2|") {
  for (auto& [spec, s] : kLattices) {
    auto L = build_lattice(spec, s);
    const RelationSpace& rs = L->relations(2);
    CHECK(rs.dim == L->n() * L->n());
    CHECK(rs.rank == static_cast<int>(L->S2().size()));
  }
}

TEST_CASE("normal form is a deterministic projection") {
  auto L = build_lattice("S(3)", "(12),(13),(23)");
  Rng rng(3);
  for (int g = 2; g <= 3; ++g) {
    Form w = random_form(L, g, rng);
    Form n = normal_form(w);
    CHECK(forms_equal(w, n));
    CHECK((normal_form(n) - n).max_abs() < 1e-13);
    CHECK((normal_form(w) - n).max_abs() == 0);
  }
}

TEST_CASE("theta identities") {
  for (auto& [spec, s] : kLattices) {
    auto L = build_lattice(spec, s);
    Form th = theta(L);
    CHECK(forms_equal(mul(th, th) - Delta(th), delta_e(L)));
    CHECK(forms_equal(d(th), mul(th, th) + delta_e(L)));
    CHECK(is_zero_mod_relations(Delta(delta_e(L))));
    CHECK(Delta(function_form(L, one(L->group()))).max_abs() == 0);
  }
}

TEST_CASE("Delta of theta^h sums over factorizations") {
  auto L = build_lattice("Z(6)", "1,2,3");
  // 2 = 1+1, 3 = 1+2 = 2+1
  Form d2 = Delta(theta(L, 1));
  CHECK((d2 - monomial(L, {0, 0})).max_abs() == 0);
  Form d3 = Delta(theta(L, 2));
  CHECK((d3 - monomial(L, {0, 1}) - monomial(L, {1, 0})).max_abs() == 0);
  CHECK(Delta(theta(L, 0)).max_abs() == 0);
}

TEST_CASE("invariant suites on the example lattices") {
  for (auto& [spec, s] : kLattices) {
    auto L = build_lattice(spec, s);
    Rng rng(4);
    CAPTURE(spec);
    for (auto r : {suite_d_squared(L, rng, 15, 1e-9), suite_delta_squared(L, rng, 15, 1e-9),
                   suite_leibniz(L, rng, 15, 1e-9), suite_delta_of_delta_e(L, 1e-9), suite_theta_squared(L, 1e-9)}) {
      CAPTURE(r.name);
      CHECK(r.passed);
      CHECK(r.trials > 0);
    }
  }
}

TEST_CASE("forms_equal detects a perturbation") {
  auto L = build_lattice("S(3)", "(12),(13),(23)");
  Rng rng(5);
  Form w = random_form(L, 2, rng);
  Form p = w;
  p.at(2, 0) += 1e-3;  // theta^(12) theta^(12) is not in any relation
  CHECK_FALSE(forms_equal(w, p));
  CHECK(forms_equal(w, w + 1e-12 * (word(L, {"(12)", "(13)"}) + word(L, {"(13)", "(23)"}))));
}

TEST_CASE("quadrangle components ignore relation shifts") {
  auto L = build_lattice("S(3)", "(12),(13),(23)");
  Rng rng(6);
  Form psi = random_form(L, 2, rng);
  Form rel = word(L, {"(12)", "(13)"}) + word(L, {"(13)", "(23)"}) + word(L, {"(23)", "(12)"});
  Function shift = random_function(L->group(), rng);
  TwoFormParts a = decompose_2form(psi), b = decompose_2form(psi + shift * rel);
  REQUIRE(a.quadrangle.size() == b.quadrangle.size());
  for (size_t k = 0; k < a.quadrangle.size(); ++k) CHECK((a.quadrangle[k].value - b.quadrangle[k].value).norm() < 1e-12);
  for (const auto& e : decompose_2form(rel).quadrangle) CHECK(e.value.norm() < 1e-14);
  CHECK(a.biangle.size() == 3);
  CHECK(a.triangle.empty());
}

TEST_CASE("braiding and wedge") {
  auto L = build_lattice("S(3)", "(12),(13),(23)");
  Form t = word(L, {"(12)", "(13)"});
  CHECK((sigma(t) - word(L, {"(23)", "(12)"})).max_abs() == 0);
  Rng rng(7);
  Form x = random_form(L, 2, rng);
  CHECK((sigma(sigma_inv(x)) - x).max_abs() < 1e-14);
  CHECK((sigma_inv(sigma(x)) - x).max_abs() < 1e-14);
  for (int p = 0; p < L->n(); ++p) CHECK(wedge(theta(L, p), theta(L, p)).max_abs() == 0);
  for (Elem g : L->S2())
    for (const auto& c : enumerate_cycles(*L, g)) {
      Form sum(L, 2), wsum(L, 2);
      for (size_t k = 0; k < c.size(); ++k) {
        int a = L->pos(c[k]), b = L->pos(c[(k + 1) % c.size()]);
        sum += monomial(L, {a, b});
        wsum += wedge(theta(L, a), theta(L, b));
      }
      CHECK((sigma(sum) - sum).max_abs() == 0);
      CHECK(wsum.max_abs() < 1e-15);
    }
}

TEST_CASE("A4 wedge refines four relations into eight") {
  auto L = build_lattice("A(4)", "(123),(243),(134),(142)");
  std::vector<Eigen::VectorXcd> cycles;
  for (Elem g : L->S2())
    for (const auto& c : enumerate_cycles(*L, g)) {
      Form sum(L, 2), wsum(L, 2);
      for (size_t k = 0; k < c.size(); ++k) {
        int a = L->pos(c[k]), b = L->pos(c[(k + 1) % c.size()]);
        sum += monomial(L, {a, b});
        wsum += wedge(theta(L, a), theta(L, b));
      }
      CHECK(wsum.max_abs() < 1e-15);
      cycles.push_back(sum.table().col(0));
    }
  REQUIRE(cycles.size() == 8);
  Eigen::MatrixXcd M(16, 8);
  for (int k = 0; k < 8; ++k) M.col(k) = cycles[k];
  CHECK(Eigen::FullPivLU<Eigen::MatrixXcd>(M).rank() == 8);
  CHECK(L->relations(2).rank == 4);
  Form w142 = wedge(word(L, {"(142)"}), word(L, {"(142)"}));
  CHECK(w142.max_abs() == 0);
}

TEST_CASE("exactness") {
  for (int m = 3; m <= 5; ++m) {
    auto L = build_lattice("Z(" + std::to_string(m) + ")", "1");
    CHECK(is_zero_mod_relations(d(theta(L, 0))));
    CHECK_FALSE(solve_exact(theta(L, 0)).has_value());
    CHECK(h1_dimension(L) >= 1);
  }
  CHECK(h1_dimension(build_lattice("Z(4)", "1,2")) == 0);
  auto L = build_lattice("S(3)", "(12),(13),(23)");
  Rng rng(8);
  Function f = random_function(L->group(), rng);
  auto sol = solve_exact(d(function_form(L, f)));
  REQUIRE(sol);
  Function diff = *sol - f;
  for (Elem g = 0; g < 6; ++g) CHECK(std::abs(diff(g) - diff(0)) < 1e-10);
  CHECK(std::abs((*sol)(0)) < 1e-12);
}

TEST_CASE("pullback of forms by differentiable bijections") {
  for (auto& [spec, s] : kLattices) {
    auto L = build_lattice(spec, s);
    const GroupTable& G = L->group();
    Rng rng(9);
    std::vector<SiteMap> maps;
    for (Elem g = 0; g < G.order(); ++g) maps.push_back(SiteMap::left_translation(G, g));
    for (Elem g = 0; g < G.order(); ++g)
      if (is_right_differentiable(*L, g)) maps.push_back(SiteMap::right_translation(G, g));
    for (size_t k = 0; k < maps.size(); k += 2) {
      const SiteMap& phi = maps[k];
      REQUIRE(is_differentiable_map(*L, phi).differentiable);
      CHECK(forms_equal(pullback_form(phi, theta(L)), theta(L)));
      Form w = random_form(L, uniform_int(rng, 0, 2), rng);
      CHECK(forms_equal(pullback_form(phi, d(w)), d(pullback_form(phi, w))));
      CHECK(forms_equal(pullback_form(phi, Delta(w)), Delta(pullback_form(phi, w))));
    }
  }
}

TEST_CASE("right pullback on forms agrees with the map pullback") {
  auto L = build_lattice("S(3)", "(12),(13),(23)");
  const GroupTable& G = L->group();
  Rng rng(10);
  Form w = random_form(L, 2, rng);
  for (Elem g = 0; g < G.order(); ++g)
    CHECK(forms_equal(right_pullback_form(g, w), pullback_form(SiteMap::right_translation(G, g), w)));
}

TEST_CASE("word numbering") {
  CHECK(word_index({1, 0, 2}, 3) == 1 * 9 + 0 * 3 + 2);
  CHECK(word_letters(11, 3, 3) == std::vector<int>{1, 0, 2});
}
