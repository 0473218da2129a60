#include "cayley/checks.hpp"

#include <algorithm>
#include <set>

#include "cayley/gauge.hpp"
#include "cayley/lincon.hpp"

namespace cayley {

namespace {

// Residual of a - b modulo relations, relative to the size of the operands.
double rel(const Form& a, const Form& b) {
  double scale = std::max({1.0, a.max_abs(), b.max_abs()});
  return relation_residual(a, b) / scale;
}

void record(SuiteResult& r, double residual, double tol) {
  ++r.trials;
  r.worst = std::max(r.worst, residual);
  if (!(residual <= tol)) r.passed = false;
}

void record(SuiteResult& r, bool ok) {
  ++r.trials;
  if (!ok) r.passed = false;
}

SuiteResult named(std::string name) {
  SuiteResult r;
  r.name = std::move(name);
  return r;
}

int random_grade(Rng& rng, int lo, int hi) { return uniform_int(rng, lo, hi); }

}  // namespace

std::vector<DiscreteVF> differentiable_basic_fields(const LatticePtr& L, int seeds) {
  std::vector<DiscreteVF> out;
  std::set<std::vector<Elem>> seen;
  auto consider = [&](const DiscreteVF& X) {
    if (seen.count(X.s) || !is_basic(X)) return;
    if (!is_differentiable_map(*L, flow(X)).differentiable) return;
    seen.insert(X.s);
    out.push_back(X);
  };
  for (Elem h : L->S()) consider(constant_field(L, h));
  for (int s = 0; s < seeds; ++s)
    if (auto B = basic_basis(L, static_cast<unsigned long long>(s)))
      for (const auto& X : *B) consider(X);
  return out;
}

SuiteResult suite_d_squared(const LatticePtr& L, Rng& rng, int trials, double tol) {
  SuiteResult r = named("d_squared");
  for (int t = 0; t < trials; ++t) {
    Form w = random_form(L, random_grade(rng, 0, std::min(2, L->grade_cap() - 2)), rng);
    Form dd = d(d(w));
    record(r, rel(dd, Form(L, dd.grade())) / std::max(1.0, w.max_abs()), tol);
  }
  return r;
}

SuiteResult suite_delta_squared(const LatticePtr& L, Rng& rng, int trials, double tol) {
  SuiteResult r = named("delta_squared");
  Form De = delta_e(L);
  for (int t = 0; t < trials; ++t) {
    Form w = random_form(L, random_grade(rng, 0, std::min(2, L->grade_cap() - 2)), rng);
    record(r, rel(Delta(Delta(w)), -graded_commutator(De, w)), tol);
  }
  return r;
}

SuiteResult suite_delta_of_delta_e(const LatticePtr& L, double tol) {
  SuiteResult r = named("delta_of_delta_e");
  Form x = Delta(delta_e(L));
  record(r, rel(x, Form(L, 3)), tol);
  return r;
}

SuiteResult suite_theta_squared(const LatticePtr& L, double tol) {
  SuiteResult r = named("theta_squared");
  Form th = theta(L);
  record(r, rel(mul(th, th) - Delta(th), delta_e(L)), tol);
  return r;
}

SuiteResult suite_leibniz(const LatticePtr& L, Rng& rng, int trials, double tol) {
  SuiteResult r = named("leibniz");
  for (int t = 0; t < trials; ++t) {
    Form a = random_form(L, random_grade(rng, 0, 1), rng);
    Form b = random_form(L, random_grade(rng, 0, 1), rng);
    double sign = a.grade() % 2 ? -1.0 : 1.0;
    record(r, rel(d(mul(a, b)), mul(d(a), b) + sign * mul(a, d(b))), tol);
  }
  return r;
}

SuiteResult suite_double_contraction(const LatticePtr& L, Rng& rng, int trials, double tol) {
  SuiteResult r = named("double_contraction");
  auto fields = differentiable_basic_fields(L);
  if (fields.empty()) {
    r.detail = "no basic field with differentiable flow";
    return r;
  }
  for (int t = 0; t < trials; ++t) {
    const DiscreteVF& X = fields[static_cast<size_t>(uniform_int(rng, 0, static_cast<int>(fields.size()) - 1))];
    Form w = random_form(L, random_grade(rng, 2, std::min(3, L->grade_cap())), rng);
    Form cc = contract(X, contract(X, w));
    record(r, rel(cc, Form(L, cc.grade())), tol);
  }
  return r;
}

SuiteResult suite_lie_cartan(const LatticePtr& L, Rng& rng, int trials, double tol) {
  SuiteResult r = named("lie_cartan");
  auto fields = differentiable_basic_fields(L);
  if (fields.empty()) {
    r.detail = "no basic field with differentiable flow";
    return r;
  }
  for (int t = 0; t < trials; ++t) {
    const DiscreteVF& X = fields[static_cast<size_t>(uniform_int(rng, 0, static_cast<int>(fields.size()) - 1))];
    Form w = random_form(L, random_grade(rng, 1, std::min(2, L->grade_cap() - 1)), rng);
    Form lhs = lie_derivative(X, w);
    Form rhs = contract(X, d(w)) + d(contract(X, w));
    record(r, rel(lhs, rhs), tol);
  }
  return r;
}

SuiteResult suite_invertibility_conditions(const LatticePtr& L, Rng& rng, int trials) {
  SuiteResult r = named("invertibility_conditions");
  auto fields = differentiable_basic_fields(L, 4);
  for (int t = 0; t < trials; ++t) {
    // mix uniformly random fields with basic ones so both outcomes occur
    DiscreteVF X = (t % 2 == 0 || fields.empty())
                       ? random_discrete(L, rng)
                       : fields[static_cast<size_t>(uniform_int(rng, 0, static_cast<int>(fields.size()) - 1))];
    auto inv = invertibility(X);
    record(r, inv.automorphism == inv.arrow_condition && inv.arrow_condition == inv.sum_condition);
  }
  return r;
}

SuiteResult suite_integral_curves(const LatticePtr& L, Rng& rng, int trials, int steps) {
  SuiteResult r = named("integral_curves");
  const GroupTable& G = L->group();
  for (int t = 0; t < trials; ++t) {
    DiscreteVF X = random_discrete(L, rng);
    Elem g0 = uniform_int(rng, 0, G.order() - 1);
    auto path = integral_curve(X, g0, steps);
    bool ok = true;
    for (Elem k = 0; k < G.order() && ok; ++k) {
      Function f = indicator(G, k);
      for (int s = 0; s <= steps; ++s) {
        Function pushed = f;
        for (int u = 0; u < s; ++u) pushed = apply_flow_pullback(X, pushed);
        if (f(path[s]) != pushed(g0)) {
          ok = false;
          break;
        }
      }
    }
    record(r, ok);
  }
  return r;
}

SuiteResult suite_gauge_invariance(const LatticePtr& L, Rng& rng, int trials, int m, double tol) {
  SuiteResult r = named("gauge_invariance");
  const GroupTable& G = L->group();
  for (int t = 0; t < trials; ++t) {
    std::vector<MatrixFunction> links;
    for (int p = 0; p < L->n(); ++p) links.push_back(random_unitary_field(G, m, rng));
    GaugeField W = make_gauge_field(L, m, std::move(links));
    MatterField psi{m, t % 2 ? Side::right : Side::left, {}};
    for (Elem g = 0; g < G.order(); ++g) {
      Eigen::VectorXcd v(m);
      for (int i = 0; i < m; ++i) v(i) = complex_gaussian(rng);
      psi.psi.push_back(v);
    }
    MatrixFunction gamma = random_unitary_field(G, m, rng);
    GaugeField W2 = gauge_transform(W, gamma);
    double ym = std::abs(yang_mills_action(W2) - yang_mills_action(W));
    double mat = std::abs(matter_action(transform_matter(psi, gamma), W2) - matter_action(psi, W));
    record(r, std::max(ym, mat), tol);
  }
  return r;
}

SuiteResult suite_flat_gauge(const LatticePtr& L, Rng& rng, int trials, int m, double tol) {
  SuiteResult r = named("flat_gauge");
  record(r, std::abs(yang_mills_action(GaugeField::trivial(L, m))), tol);
  for (int t = 0; t < trials; ++t)
    record(r, std::abs(yang_mills_action(pure_gauge(L, random_unitary_field(L->group(), m, rng)))), tol);
  return r;
}

SuiteResult suite_field_strength(const LatticePtr& L, Rng& rng, int trials, int m, double tol) {
  SuiteResult r = named("field_strength");
  const GroupTable& G = L->group();
  for (int t = 0; t < trials; ++t) {
    std::vector<MatrixFunction> links;
    for (int p = 0; p < L->n(); ++p) links.push_back(random_matrix_field(G, m, rng));
    GaugeField W = make_gauge_field(L, m, std::move(links));
    FieldStrength fs = field_strength(W);
    MatrixForm A = W.potential();
    MatrixForm dA = MatrixForm::zero(L, 2, m);
    for (size_t k = 0; k < A.e.size(); ++k) dA.e[k] = d(A.e[k]);
    MatrixForm curv = dA + A * A;
    MatrixForm bianchi = graded_commutator(W.form(), fs.F) - Delta(fs.F);
    double worst = 0;
    for (size_t k = 0; k < fs.F.e.size(); ++k) {
      worst = std::max(worst, rel(fs.F.e[k], curv.e[k]));
      worst = std::max(worst, rel(bianchi.e[k], Form(L, 3)));
    }
    record(r, worst, tol);
  }
  return r;
}

SuiteResult suite_linear_bianchi(const LatticePtr& L, Rng& rng, int trials, double tol) {
  SuiteResult r = named("linear_bianchi");
  const int n = L->n();
  for (int t = 0; t < trials; ++t) {
    std::vector<Function> V;
    for (int k = 0; k < n * n * n; ++k) V.push_back(random_function(L->group(), rng));
    LinearConnection C(L, std::move(V));
    double worst = 0;
    for (int h = 0; h < n; ++h) {
      worst = std::max(worst, rel(first_bianchi_residual(C, h), Form(L, 3)));
      for (int hp = 0; hp < n; ++hp) worst = std::max(worst, rel(second_bianchi_residual(C, h, hp), Form(L, 3)));
    }
    record(r, worst, tol);
  }
  return r;
}

SuiteResult suite_canonical_torsion(const LatticePtr& L, double tol) {
  SuiteResult r = named("canonical_torsion_free");
  LinearConnection C = LinearConnection::canonical(L);
  TorsionReport rep = torsion_report(C);
  record(r, std::max({rep.biangle, rep.triangle, rep.quadrangle}), tol);
  double worst = 0;
  for (int h = 0; h < L->n(); ++h) worst = std::max(worst, rel(torsion(C, h), Form(L, 2)));
  record(r, worst, tol);
  return r;
}

std::vector<SuiteResult> run_invariant_suites(const LatticePtr& L, const CheckOptions& o) {
  Rng rng(o.seed);
  std::vector<SuiteResult> out;
  out.push_back(suite_d_squared(L, rng, o.trials, o.tol));
  out.push_back(suite_delta_squared(L, rng, o.trials, o.tol));
  out.push_back(suite_delta_of_delta_e(L, o.tol));
  out.push_back(suite_theta_squared(L, o.tol));
  out.push_back(suite_leibniz(L, rng, o.trials, o.tol));
  out.push_back(suite_double_contraction(L, rng, o.trials, o.tol));
  out.push_back(suite_lie_cartan(L, rng, o.trials, o.tol));
  out.push_back(suite_invertibility_conditions(L, rng, o.trials));
  out.push_back(suite_integral_curves(L, rng, o.trials, 12));
  out.push_back(suite_gauge_invariance(L, rng, o.trials, o.m, 1e-8));
  out.push_back(suite_flat_gauge(L, rng, o.trials, o.m, 1e-10));
  out.push_back(suite_field_strength(L, rng, o.trials, o.m, o.tol));
  out.push_back(suite_linear_bianchi(L, rng, o.trials, o.tol));
  out.push_back(suite_canonical_torsion(L, o.tol));
  return out;
}

}  // namespace cayley
