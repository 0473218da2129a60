#include "cayley/vector_field.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

namespace cayley {

VectorField VectorField::zero(const LatticePtr& L) {
  return {L, std::vector<Function>(static_cast<size_t>(L->n()), cayley::zero(L->group()))};
}

VectorField VectorField::ell(const LatticePtr& L, int pos) {
  VectorField X = zero(L);
  X.comp[pos] = one(L->group());
  return X;
}

Function VectorField::apply(const Function& f) const {
  Function r = cayley::zero(L->group());
  for (int i = 0; i < L->n(); ++i) r += comp[i].cwiseProduct(cayley::ell(L->group(), L->s(i), f));
  return r;
}

VectorField VectorField::operator+(const VectorField& o) const {
  VectorField r = *this;
  for (size_t i = 0; i < comp.size(); ++i) r.comp[i] += o.comp[i];
  return r;
}

VectorField VectorField::operator-(const VectorField& o) const {
  VectorField r = *this;
  for (size_t i = 0; i < comp.size(); ++i) r.comp[i] -= o.comp[i];
  return r;
}

double VectorField::distance(const VectorField& o) const {
  double m = 0;
  for (size_t i = 0; i < comp.size(); ++i) m = std::max(m, (comp[i] - o.comp[i]).cwiseAbs().maxCoeff());
  return m;
}

VectorField DiscreteVF::field() const {
  VectorField X = VectorField::zero(L);
  for (Elem g = 0; g < L->order(); ++g)
    if (s[g] != 0) X.comp[L->pos(s[g])](g) = 1.0;
  return X;
}

DiscreteVF make_discrete(const LatticePtr& L, std::vector<Elem> s) {
  if (static_cast<int>(s.size()) != L->order()) throw std::invalid_argument("s must be defined on every site");
  for (Elem v : s)
    if (v < 0 || v >= L->order() || !L->in_Se(v))
      throw std::invalid_argument("s takes a value outside S_e");
  return {L, std::move(s)};
}

DiscreteVF constant_field(const LatticePtr& L, Elem h) {
  return make_discrete(L, std::vector<Elem>(static_cast<size_t>(L->order()), h));
}

DiscreteVF validate_discrete(const VectorField& X, double tol) {
  const auto& L = X.L;
  std::vector<Elem> s(static_cast<size_t>(L->order()), 0);
  for (Elem g = 0; g < L->order(); ++g) {
    int ones = 0;
    for (int i = 0; i < L->n(); ++i) {
      cplx v = X.comp[i](g);
      if (std::abs(v - 1.0) <= tol) {
        ++ones;
        s[g] = L->s(i);
      } else if (std::abs(v) > tol) {
        throw std::invalid_argument("component " + L->label(L->s(i)) + " is not an indicator at site " +
                                    L->label(g));
      }
    }
    if (ones > 1) throw std::invalid_argument("two nonzero components at site " + L->label(g));
  }
  return {L, std::move(s)};
}

SiteMap flow(const DiscreteVF& X) {
  SiteMap phi{std::vector<Elem>(X.s.size())};
  for (Elem g = 0; g < X.L->order(); ++g) phi.map[g] = X.L->mul(g, X.s[g]);
  return phi;
}

Function apply_flow_pullback(const DiscreteVF& X, const Function& f) {
  const GroupTable& G = X.L->group();
  Function r = zero(G);
  // sum over h in S_e of X^h R*_h f, with X^e the indicator of rest sites
  for (Elem g = 0; g < G.order(); ++g) r(g) = rpull(G, X.s[g], f)(g);
  return r;
}

Invertibility invertibility(const DiscreteVF& X) {
  const GroupLattice& L = *X.L;
  const int N = L.order();
  Invertibility out;
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(N, N);
  for (Elem g = 0; g < N; ++g) M(g, L.mul(g, X.s[g])) = 1.0;
  out.automorphism = Eigen::FullPivLU<Eigen::MatrixXd>(M).rank() == N;

  out.arrow_condition = true;
  out.sum_condition = true;
  out.r.assign(static_cast<size_t>(N), 0);
  for (Elem g = 0; g < N; ++g) {
    int incoming = 0;
    Elem from_h = 0;
    for (Elem h : L.S())
      if (X.s[L.mul(g, L.inv(h))] == h) {
        ++incoming;
        from_h = h;
      }
    bool rests = X.s[g] == 0;
    if (rests ? incoming != 0 : incoming != 1) out.arrow_condition = false;
    int total = incoming + (rests ? 1 : 0);
    if (total != 1) {
      out.sum_condition = false;
      if (!out.witness) out.witness = g;
    }
    out.r[g] = rests ? 0 : from_h;
  }
  out.invertible = out.sum_condition;
  if (!out.invertible) out.r.clear();
  return out;
}

Function apply_inverse_flow_pullback(const DiscreteVF& X, const std::vector<Elem>& r, const Function& f) {
  const GroupTable& G = X.L->group();
  Function out(G.order());
  for (Elem g = 0; g < G.order(); ++g) out(g) = f(G.mul(g, G.inv(r[g])));
  return out;
}

bool is_basic(const DiscreteVF& X) {
  for (Elem v : X.s)
    if (v == 0) return false;
  return invertibility(X).invertible;
}

std::optional<std::vector<DiscreteVF>> basic_basis(const LatticePtr& Lp, unsigned long long seed) {
  const GroupLattice& L = *Lp;
  const int N = L.order(), n = L.n();
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::mt19937_64 rng(seed);
  // choice[g] = permutation: X_i takes the value s_{perm[i]} at g
  std::vector<std::vector<int>> order(static_cast<size_t>(N));
  for (Elem g = 0; g < N; ++g) {
    std::vector<int> idx(perms.size());
    std::iota(idx.begin(), idx.end(), 0);
    if (seed != 0 && g != 0) std::shuffle(idx.begin(), idx.end(), rng);
    if (g == 0) idx = {0};  // identity permutation at e fixes s_{X_h}(e) = h
    order[g] = std::move(idx);
  }
  std::vector<std::vector<bool>> hit(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(N), false));
  std::vector<int> choice(static_cast<size_t>(N), -1);
  long long budget = 2'000'000;
  std::function<bool(Elem)> place = [&](Elem g) -> bool {
    if (g == N) return true;
    for (int pi : order[g]) {
      if (--budget < 0) return false;
      const auto& perm = perms[pi];
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) ok = !hit[i][L.mul(g, L.s(perm[i]))];
      if (!ok) continue;
      for (int i = 0; i < n; ++i) hit[i][L.mul(g, L.s(perm[i]))] = true;
      choice[g] = pi;
      if (place(g + 1)) return true;
      for (int i = 0; i < n; ++i) hit[i][L.mul(g, L.s(perm[i]))] = false;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  std::vector<DiscreteVF> basis;
  for (int i = 0; i < n; ++i) {
    std::vector<Elem> s(static_cast<size_t>(N));
    for (Elem g = 0; g < N; ++g) s[g] = L.s(perms[choice[g]][i]);
    basis.push_back({Lp, std::move(s)});
  }
  return basis;
}

bool is_basic_basis(const std::vector<DiscreteVF>& basis) {
  if (basis.empty()) return false;
  const GroupLattice& L = *basis.front().L;
  if (static_cast<int>(basis.size()) != L.n()) return false;
  for (int i = 0; i < L.n(); ++i) {
    if (!is_basic(basis[i]) || basis[i].s[0] != L.s(i)) return false;
  }
  for (Elem g = 0; g < L.order(); ++g) {
    std::vector<bool> seen(static_cast<size_t>(L.n()), false);
    for (const auto& X : basis) {
      int p = L.pos(X.s[g]);
      if (p < 0 || seen[p]) return false;
      seen[p] = true;
    }
  }
  return true;
}

std::vector<Form> dual_basis(const std::vector<DiscreteVF>& basis) {
  const LatticePtr& Lp = basis.front().L;
  const int n = Lp->n();
  std::vector<Form> alpha(static_cast<size_t>(n), Form(Lp, 1));
  for (Elem g = 0; g < Lp->order(); ++g) {
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);  // A(h', i) = X_i^{h'}(g)
    for (int i = 0; i < n; ++i) A(Lp->pos(basis[i].s[g]), i) = 1.0;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
    if (!lu.isInvertible()) throw std::logic_error("change of basis is singular at " + Lp->label(g));
    Eigen::MatrixXd B = lu.inverse();  // B(i, h') = alpha^i_{h'}(g)
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) alpha[i].at(g, k) = B(i, k);
  }
  return alpha;
}

Function pairing(const VectorField& Y, const Form& alpha) {
  if (alpha.grade() != 1) throw std::invalid_argument("pairing needs a 1-form");
  Function r = zero(Y.L->group());
  for (int i = 0; i < Y.L->n(); ++i) r += Y.comp[i].cwiseProduct(alpha.coefficient(i));
  return r;
}

namespace {

void require_bicovariant(const GroupLattice& L) {
  if (!is_bicovariant(L)) throw std::invalid_argument("operation needs a bicovariant lattice");
}

std::vector<Elem> require_invertible(const DiscreteVF& X) {
  auto inv = invertibility(X);
  if (!inv.invertible)
    throw std::invalid_argument("flow is not invertible (site " + X.L->label(*inv.witness) + ")");
  return inv.r;
}

Function indicator_of(const GroupTable& G, const std::vector<Elem>& values, Elem h) {
  Function f = zero(G);
  for (Elem g = 0; g < G.order(); ++g)
    if (values[g] == h) f(g) = 1.0;
  return f;
}

}  // namespace

Form R_X(const DiscreteVF& X, const Form& w) {
  const GroupLattice& L = *X.L;
  require_bicovariant(L);
  Form out(X.L, w.grade());
  out += indicator_of(L.group(), X.s, 0) * w;
  for (Elem h : L.S()) out += indicator_of(L.group(), X.s, h) * right_pullback_form(h, w);
  return out;
}

Form R_X_inv(const DiscreteVF& X, const Form& w) {
  const GroupLattice& L = *X.L;
  require_bicovariant(L);
  std::vector<Elem> r = require_invertible(X);
  Form out(X.L, w.grade());
  out += indicator_of(L.group(), r, 0) * w;
  for (Elem h : L.S()) out += indicator_of(L.group(), r, h) * right_pullback_form(L.inv(h), w);
  return out;
}

VectorField R_X_star(const DiscreteVF& X, const VectorField& Y) {
  const GroupLattice& L = *X.L;
  require_bicovariant(L);
  std::vector<Elem> r = require_invertible(X);
  const GroupTable& G = L.group();
  VectorField out = VectorField::zero(X.L);
  std::vector<Elem> Se{0};
  Se.insert(Se.end(), L.S().begin(), L.S().end());
  for (int k = 0; k < L.n(); ++k) {
    Elem hp = L.s(k);
    for (Elem h : Se) {
      Function Yc = Y.comp[L.pos(conjugate(G, h, hp))];
      out.comp[k] += indicator_of(G, r, h).cwiseProduct(rpull(G, G.inv(h), Yc));
    }
  }
  return out;
}

DiscreteVF R_X_star(const DiscreteVF& X, const DiscreteVF& Y) {
  const GroupLattice& L = *X.L;
  require_bicovariant(L);
  std::vector<Elem> r = require_invertible(X);
  std::vector<Elem> s(static_cast<size_t>(L.order()));
  for (Elem g = 0; g < L.order(); ++g) {
    Elem rg = r[g];
    s[g] = conjugate(L.group(), L.inv(rg), Y.s[L.mul(g, L.inv(rg))]);
  }
  return make_discrete(X.L, std::move(s));
}

PolygonRelation polygon_relation(const DiscreteVF& X, const DiscreteVF& Y) {
  const GroupLattice& L = *X.L;
  require_bicovariant(L);
  if (!is_basic(X) || !is_basic(Y)) throw std::invalid_argument("polygon relations need basic fields");
  PolygonRelation out;
  out.product.resize(static_cast<size_t>(L.order()));
  bool all_e = true, all_S = true, all_out = true;
  for (Elem g = 0; g < L.order(); ++g) {
    Elem p = L.mul(Y.s[g], X.s[g]);
    out.product[g] = p;
    all_e &= p == 0;
    all_S &= L.in_S(p);
    all_out &= !L.in_Se(p);
  }
  if (all_e) {
    out.kind = Polygon::biangle;
  } else if (all_S) {
    out.kind = Polygon::triangle;
    out.third = make_discrete(X.L, out.product);
  } else if (all_out) {
    out.kind = Polygon::quadrangle;
  }
  return out;
}

bool is_quadrangle(const DiscreteVF& X, const DiscreteVF& Y, const DiscreteVF& Z, const DiscreteVF& W) {
  const GroupLattice& L = *X.L;
  for (const auto* F : {&X, &Y, &Z, &W})
    if (!is_basic(*F)) throw std::invalid_argument("polygon relations need basic fields");
  for (Elem g = 0; g < L.order(); ++g) {
    Elem a = L.mul(Y.s[g], X.s[g]), b = L.mul(W.s[g], Z.s[g]);
    if (a != b || L.in_Se(a)) return false;
  }
  return true;
}

bool polygon_operator_identity(const DiscreteVF& X, const DiscreteVF& Y) {
  const GroupLattice& L = *X.L;
  const GroupTable& G = L.group();
  DiscreteVF Z = R_X_star(X, Y);
  for (Elem k = 0; k < L.order(); ++k) {
    Function f = indicator(G, k);
    Function lhs = apply_flow_pullback(X, apply_flow_pullback(Z, f));
    Function rhs(G.order());
    for (Elem g = 0; g < G.order(); ++g) rhs(g) = f(G.mul(g, G.mul(Y.s[g], X.s[g])));
    if ((lhs - rhs).cwiseAbs().maxCoeff() > 0) return false;
  }
  return true;
}

VectorField push_forward(const SiteMap& phi, const VectorField& Y) {
  const LatticePtr& L = Y.L;
  SiteMap inv = phi.inverse();
  VectorField out = VectorField::zero(L);
  for (int k = 0; k < L->n(); ++k) {
    Function p = pairing(Y, pullback_form(phi, theta(L, k)));
    out.comp[k] = compose(p, inv.map);
  }
  return out;
}

Function lie_derivative(const DiscreteVF& X, const Function& f) { return X.field().apply(f); }

Form lie_derivative(const DiscreteVF& X, const Form& w) { return pullback_form(flow(X), w) - w; }

VectorField lie_derivative(const DiscreteVF& X, const VectorField& Y) {
  SiteMap phi = flow(X);
  if (!phi.is_bijective()) throw std::invalid_argument("Lie derivative of a vector field needs an invertible flow");
  return Y - push_forward(phi, Y);
}

Form contract(const DiscreteVF& X, const Form& w) {
  const LatticePtr& Lp = X.L;
  const int n = Lp->n(), r = w.grade();
  if (r == 0) throw std::invalid_argument("contraction of a function is zero; pass a form of grade >= 1");
  SiteMap phi = flow(X);
  auto rep = is_differentiable_map(*Lp, phi);
  if (!rep.differentiable) throw std::invalid_argument("contraction needs a differentiable flow");
  VectorField XF = X.field();
  std::map<std::vector<int>, Form> pulled, cache;
  auto pull = [&](const std::vector<int>& letters) -> const Form& {
    auto it = pulled.find(letters);
    if (it == pulled.end()) it = pulled.emplace(letters, pullback_form(phi, monomial(Lp, letters))).first;
    return it->second;
  };
  // X contracted into theta^{w_1}...theta^{w_k}:
  //   X^{w_1} phi^*(theta^{w_2}...) - theta^{w_1} (X contracted into theta^{w_2}...)
  std::function<const Form&(const std::vector<int>&)> mono = [&](const std::vector<int>& letters) -> const Form& {
    auto it = cache.find(letters);
    if (it != cache.end()) return it->second;
    std::vector<int> rest(letters.begin() + 1, letters.end());
    Form val(Lp, static_cast<int>(rest.size()));
    if (rest.empty()) {
      val = function_form(Lp, XF.comp[letters[0]]);
    } else {
      val = XF.comp[letters[0]] * pull(rest) - theta(Lp, letters[0]) * mono(rest);
    }
    return cache.emplace(letters, std::move(val)).first->second;
  };
  Form out(Lp, r - 1);
  for (long long word = 0; word < w.words(); ++word) {
    Function c = w.coefficient(word);
    if (c.isZero(0)) continue;
    out += c * mono(word_letters(word, r, n));
  }
  return out;
}

std::vector<Elem> integral_curve(const DiscreteVF& X, Elem g0, int steps) {
  if (steps < 0) throw std::invalid_argument("negative step count");
  std::vector<Elem> path{g0};
  for (int t = 0; t < steps; ++t) path.push_back(X.L->mul(path.back(), X.s[path.back()]));
  return path;
}

FlowTheorem flow_theorem(const DiscreteVF& X) {
  const GroupLattice& L = *X.L;
  const GroupTable& G = L.group();
  const int N = L.order();
  FlowTheorem out;
  SiteMap phi = flow(X);
  out.differentiable = is_differentiable_map(L, phi).differentiable;

  out.s_compatible = true;
  for (Elem g = 0; g < N && out.s_compatible; ++g)
    for (Elem h : L.S()) {
      Elem g2 = G.mul(g, h);
      Elem v = G.mul(G.mul(G.inv(X.s[g]), G.mul(G.inv(g), g2)), X.s[g2]);
      if (!L.in_Se(v)) {
        out.s_compatible = false;
        break;
      }
    }

  out.intertwines = true;
  for (Elem h : L.S()) {
    std::vector<Elem> sz(static_cast<size_t>(N), 0);
    std::vector<bool> fixed(static_cast<size_t>(N), false);
    bool ok = true;
    for (Elem g = 0; g < N && ok; ++g) {
      Elem at = phi(g);
      Elem v = G.mul(G.inv(at), phi(G.mul(g, h)));
      if (!L.in_Se(v)) {
        ok = false;
        out.detail = "phi_X(" + L.label(g) + ")^{-1} phi_X(" + L.label(G.mul(g, h)) + ") leaves S_e";
      } else if (fixed[at] && sz[at] != v) {
        ok = false;
        out.detail = "no consistent Z for Y = ell_" + L.label(h) + " at " + L.label(at);
      } else {
        sz[at] = v;
        fixed[at] = true;
      }
    }
    if (!ok) {
      out.intertwines = false;
      break;
    }
    // phi_Y^* phi_X^* = phi_X^* phi_Z^* on every indicator
    for (Elem k = 0; k < N && ok; ++k)
      for (Elem g = 0; g < N; ++g) {
        bool lhs = phi(G.mul(g, h)) == k;
        bool rhs = G.mul(phi(g), sz[phi(g)]) == k;
        if (lhs != rhs) {
          ok = false;
          break;
        }
      }
    if (!ok) {
      out.intertwines = false;
      out.detail = "operator identity fails for Y = ell_" + L.label(h);
      break;
    }
  }
  return out;
}

}  // namespace cayley
