#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "cayley/checks.hpp"
#include "cayley/lincon.hpp"

using namespace cayley;

namespace {

const std::vector<std::pair<std::string, std::string>> kLattices = {
    {"Z(4)", "1,2"}, {"S(3)", "(12),(13),(23)"}, {"Z(6)", "1,2,3"}, {"A(4)", "(123),(243),(134),(142)"}, {"Z(5)", "1"}};

LinearConnection random_connection(const LatticePtr& L, Rng& rng) {
  const int n = L->n();
  std::vector<Function> V;
  for (int k = 0; k < n * n * n; ++k) V.push_back(random_function(L->group(), rng));
  return LinearConnection(L, std::move(V));
}

// V_{h'}(g) a permutation matrix: V^h_{h',h''} = [h = perm[h'][g](h'')].
LinearConnection permutation_connection(const LatticePtr& L, Rng& rng, bool constant) {
  const int n = L->n();
  LinearConnection C = LinearConnection::zero(L);
  std::vector<int> p(n);
  for (int hp = 0; hp < n; ++hp)
    for (Elem g = 0; g < L->order(); ++g) {
      if (!constant || g == 0) {
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
      }
      for (int h2 = 0; h2 < n; ++h2) C.V(p[h2], hp, h2)(g) = 1.0;
    }
  return C;
}

double gap(const Function& a, const Function& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("the zero connection") {
  auto L = build_lattice("S(3)", "(12),(13),(23)");
  LinearConnection C = LinearConnection::zero(L);
  for (int h = 0; h < L->n(); ++h) {
    FormTensor t = nabla_theta(C, h);
    for (int k = 0; k < L->n(); ++k) CHECK((t[k] - (k == h ? theta(L) : Form(L, 1))).max_abs() == 0);
    for (int hp = 0; hp < L->n(); ++hp) CHECK(transport_vf(C, h, VectorField::ell(L, hp)).distance(VectorField::zero(L)) == 0);
    CHECK_FALSE(is_zero_mod_relations(torsion(C, h)));
    // R(theta^h) = -Delta^e (x) theta^h
    FormTensor R = curvature(C, h);
    for (int k = 0; k < L->n(); ++k) CHECK(forms_equal(R[k], k == h ? -delta_e(L) : Form(L, 2)));
  }
  CHECK_FALSE(is_torsion_free(C));
}

TEST_CASE("the canonical connection is torsion free") {
  for (auto& [spec, s] : kLattices) {
    auto L = build_lattice(spec, s);
    CAPTURE(spec);
    LinearConnection C = LinearConnection::canonical(L);
    CHECK(is_torsion_free(C));
    for (int h = 0; h < L->n(); ++h) {
      CHECK(is_zero_mod_relations(torsion(C, h)));
      CHECK(forms_equal(torsion(C, h), torsion_from_definition(C, h)));
    }
    Rng rng(1);
    CHECK(suite_canonical_torsion(L, 1e-9).passed);
    // V-tilde_{ell_h1} ell_h2 = ell_h0 - ell_h1 on every triangle h1 h2 = h0
    for (const Triangle& t : enumerate_polygons(*L).triangles) {
      int h0 = L->pos(t.h0), h1 = L->pos(t.h1), h2 = L->pos(t.h2);
      VectorField got = transport_vf(C, h1, VectorField::ell(L, h2));
      CHECK(got.distance(VectorField::ell(L, h0) - VectorField::ell(L, h1)) < 1e-14);
    }
  }
}

TEST_CASE("canonical transport is singular except on thin lattices") {
  CHECK(singular_transport(LinearConnection::canonical(build_lattice("S(3)", "(12),(13),(23)"))).has_value());
  CHECK(singular_transport(LinearConnection::canonical(build_lattice("Z(4)", "1,2"))).has_value());
  CHECK_FALSE(singular_transport(LinearConnection::canonical(build_lattice("Z(5)", "1"))).has_value());
  CHECK_THROWS(inverse_transport(LinearConnection::canonical(build_lattice("S(3)", "(12),(13),(23)"))));
}

TEST_CASE("torsion and curvature agree with their closed forms") {
  for (auto& [spec, s] : kLattices) {
    auto L = build_lattice(spec, s);
    Rng rng(2);
    LinearConnection C = random_connection(L, rng);
    for (int h = 0; h < L->n(); ++h) {
      CHECK(forms_equal(torsion(C, h), torsion_from_definition(C, h)));
      FormTensor a = curvature(C, h), b = curvature_expanded(C, h);
      for (int k = 0; k < L->n(); ++k) CHECK(forms_equal(a[k], b[k]));
    }
  }
}

TEST_CASE("Bianchi identities for random connections") {
  for (auto& [spec, s] : kLattices) {
    auto L = build_lattice(spec, s);
    Rng rng(3);
    CAPTURE(spec);
    auto r = suite_linear_bianchi(L, rng, 20, 1e-9);
    CHECK(r.passed);
    CHECK(r.trials == 20);
  }
}

TEST_CASE("a constant permutation connection on an abelian group") {
  auto L = build_lattice("Z(6)", "1,2,3");
  Rng rng(4);
  LinearConnection C = permutation_connection(L, rng, true);
  CHECK(is_discrete(C));
  for (int h = 0; h < L->n(); ++h)
    for (int hp = 0; hp < L->n(); ++hp) CHECK(is_zero_mod_relations(second_bianchi_residual(C, h, hp)));
}

TEST_CASE("inverse transport") {
  for (auto& [spec, s] : kLattices) {
    auto L = build_lattice(spec, s);
    Rng rng(5);
    LinearConnection C = random_connection(L, rng);
    REQUIRE_FALSE(singular_transport(C).has_value());
    auto U = inverse_transport(C);
    for (int h = 0; h < L->n(); ++h)
      for (Elem g = 0; g < L->order(); ++g)
        CHECK((U[h][g] * C.matrix(h, g) - Eigen::MatrixXcd::Identity(L->n(), L->n())).norm() < 1e-9);
    const GroupTable& G = L->group();
    for (int h = 0; h < L->n(); ++h) {
      VectorField Y = random_vector_field(L, rng);
      Form a = random_form(L, 1, rng);
      // <V-tilde Y, a> = R*_h <Y, V a>
      CHECK(gap(pairing(transport_vf(C, h, Y), a), rpull(G, L->s(h), pairing(Y, transport_1form(C, h, a)))) < 1e-10);
      CHECK(transport_vf_inverse(C, h, transport_vf(C, h, Y)).distance(Y) < 1e-9);
      // bar-ell <Y, a> = <nabla Y, a> + <Y, nabla a> - <nabla Y, nabla a>
      Function lhs = bar_ell(G, L->s(h), pairing(Y, a));
      Function rhs = pairing(nabla_on_vf(C, h, Y), a) + pairing(Y, nabla_on_1form(C, h, a)) -
                     pairing(nabla_on_vf(C, h, Y), nabla_on_1form(C, h, a));
      CHECK(gap(lhs, rhs) < 1e-9);
    }
    if (auto B = basic_basis(L))
      for (const auto& X : *B) {
        auto inv = invertibility(X);
        VectorField Y = random_vector_field(L, rng);
        Form a = random_form(L, 1, rng);
        Function lhs = pairing(transport_vf_inverse_along(C, X.field(), Y), transport_1form_along(C, X.field(), a));
        CHECK(gap(lhs, apply_inverse_flow_pullback(X, inv.r, pairing(Y, a))) < 1e-9);
      }
  }
}

TEST_CASE("identity transport") {
  auto L = build_lattice("S(3)", "(12),(13),(23)");
  const int n = L->n();
  LinearConnection C = LinearConnection::zero(L);
  for (int hp = 0; hp < n; ++hp)
    for (int h = 0; h < n; ++h) C.V(h, hp, h) = one(L->group());
  auto U = inverse_transport(C);
  for (int h = 0; h < n; ++h)
    for (Elem g = 0; g < 6; ++g) CHECK((U[h][g] - Eigen::MatrixXcd::Identity(n, n)).norm() == 0);
  Rng rng(6);
  VectorField Y = random_vector_field(L, rng);
  for (int h = 0; h < n; ++h) {
    VectorField got = nabla_on_vf(C, h, Y);
    Elem hi = L->inv(L->s(h));
    for (int k = 0; k < n; ++k) CHECK(gap(got.comp[k], Y.comp[k] - rpull(L->group(), hi, Y.comp[k])) < 1e-14);
  }
}

TEST_CASE("permutation connections are discrete with transposed inverses") {
  auto L = build_lattice("S(3)", "(12),(13),(23)");
  Rng rng(7);
  LinearConnection C = permutation_connection(L, rng, false);
  CHECK(is_discrete(C));
  auto U = inverse_transport(C);
  for (int h = 0; h < 3; ++h)
    for (Elem g = 0; g < 6; ++g) CHECK((U[h][g] - C.matrix(h, g).transpose()).norm() < 1e-14);
  CHECK_FALSE(is_discrete(random_connection(L, rng)));
}

TEST_CASE("V-hat needs a symmetric S") {
  auto Z4 = build_lattice("Z(4)", "1,2");
  Rng rng(8);
  LinearConnection C = random_connection(Z4, rng);
  CHECK_THROWS(transport_vf_hat(C, 0, VectorField::ell(Z4, 0)));
  auto S3 = build_lattice("S(3)", "(12),(13),(23)");
  LinearConnection D = random_connection(S3, rng);
  VectorField Y = random_vector_field(S3, rng);
  for (int h = 0; h < 3; ++h) CHECK(transport_vf_hat(D, h, Y).distance(transport_vf(D, h, Y)) < 1e-14);
}

TEST_CASE("V matrices and forms") {
  auto L = build_lattice("S(3)", "(12),(13),(23)");
  Rng rng(9);
  LinearConnection C = random_connection(L, rng);
  for (int hp = 0; hp < 3; ++hp)
    for (Elem g = 0; g < 6; ++g) {
      auto M = C.matrix(hp, g);
      for (int h = 0; h < 3; ++h)
        for (int h2 = 0; h2 < 3; ++h2) CHECK(M(h, h2) == C.V(h, hp, h2)(g));
    }
  for (int h = 0; h < 3; ++h)
    for (int hp = 0; hp < 3; ++hp) {
      Form v = C.V_form(h, hp);
      for (int k = 0; k < 3; ++k) CHECK(gap(v.coefficient(k), C.V(h, k, hp)) == 0);
    }
  CHECK_THROWS(LinearConnection(L, std::vector<Function>(5, one(L->group()))));
}
