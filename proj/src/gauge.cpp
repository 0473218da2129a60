#include "cayley/gauge.hpp"

#include <stdexcept>

namespace cayley {

namespace {

void same_shape(const MatrixForm& a, const MatrixForm& b) {
  if (a.m != b.m || a.grade != b.grade) throw std::invalid_argument("matrix forms differ in size or grade");
}

Eigen::MatrixXcd identity(int m) { return Eigen::MatrixXcd::Identity(m, m); }

// f(g) * phi(x) with phi given at every site, x = g * prod(word)
MatrixFunction shifted(const GroupTable& G, const MatrixFunction& f, Elem h) { return rpull(G, h, f); }

}  // namespace

MatrixForm MatrixForm::zero(const LatticePtr& L, int grade, int m) {
  return {L, grade, m, std::vector<Form>(static_cast<size_t>(m * m), Form(L, grade))};
}

MatrixForm MatrixForm::scalar(const Form& w, int m) {
  MatrixForm r = zero(w.lattice_ptr(), w.grade(), m);
  for (int i = 0; i < m; ++i) r(i, i) = w;
  return r;
}

Eigen::MatrixXcd MatrixForm::at(Elem site, long long word) const {
  Eigen::MatrixXcd M(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) M(i, j) = (*this)(i, j).at(site, word);
  return M;
}

double MatrixForm::max_abs() const {
  double r = 0;
  for (const auto& f : e) r = std::max(r, f.max_abs());
  return r;
}

MatrixForm operator+(const MatrixForm& a, const MatrixForm& b) {
  same_shape(a, b);
  MatrixForm r = a;
  for (size_t k = 0; k < r.e.size(); ++k) r.e[k] += b.e[k];
  return r;
}

MatrixForm operator-(const MatrixForm& a, const MatrixForm& b) {
  same_shape(a, b);
  MatrixForm r = a;
  for (size_t k = 0; k < r.e.size(); ++k) r.e[k] -= b.e[k];
  return r;
}

MatrixForm operator*(const MatrixForm& a, const MatrixForm& b) {
  if (a.m != b.m) throw std::invalid_argument("matrix forms differ in size");
  MatrixForm r = MatrixForm::zero(a.L, a.grade + b.grade, a.m);
  for (int i = 0; i < a.m; ++i)
    for (int j = 0; j < a.m; ++j)
      for (int k = 0; k < a.m; ++k) r(i, j) += mul(a(i, k), b(k, j));
  return r;
}

MatrixForm operator*(const MatrixFunction& f, const MatrixForm& a) {
  MatrixForm r = MatrixForm::zero(a.L, a.grade, a.m);
  const int N = a.L->order();
  for (int i = 0; i < a.m; ++i)
    for (int k = 0; k < a.m; ++k) {
      Function fik(N);
      for (Elem g = 0; g < N; ++g) fik(g) = f[g](i, k);
      for (int j = 0; j < a.m; ++j) r(i, j) += fik * a(k, j);
    }
  return r;
}

MatrixForm operator*(const MatrixForm& a, const MatrixFunction& f) {
  MatrixForm r = MatrixForm::zero(a.L, a.grade, a.m);
  const int N = a.L->order();
  for (int k = 0; k < a.m; ++k)
    for (int j = 0; j < a.m; ++j) {
      Function fkj(N);
      for (Elem g = 0; g < N; ++g) fkj(g) = f[g](k, j);
      for (int i = 0; i < a.m; ++i) r(i, j) += a(i, k) * fkj;
    }
  return r;
}

MatrixForm Delta(const MatrixForm& a) {
  MatrixForm r = MatrixForm::zero(a.L, a.grade + 1, a.m);
  for (size_t k = 0; k < a.e.size(); ++k) r.e[k] = Delta(a.e[k]);
  return r;
}

MatrixForm graded_commutator(const MatrixForm& a, const MatrixForm& b) {
  MatrixForm ab = a * b, ba = b * a;
  if ((a.grade * b.grade) % 2 == 0) return ab - ba;
  return ab + ba;
}

bool forms_equal(const MatrixForm& a, const MatrixForm& b, double tol) {
  same_shape(a, b);
  for (size_t k = 0; k < a.e.size(); ++k)
    if (!forms_equal(a.e[k], b.e[k], tol)) return false;
  return true;
}

GaugeField GaugeField::trivial(const LatticePtr& L, int m) {
  return {L, m, std::vector<MatrixFunction>(static_cast<size_t>(L->n()), identity_matrix(L->group(), m)), true};
}

MatrixForm GaugeField::form() const {
  MatrixForm r = MatrixForm::zero(L, 1, m);
  const int N = L->order();
  for (int p = 0; p < L->n(); ++p)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        Function c(N);
        for (Elem g = 0; g < N; ++g) c(g) = W[p][g](i, j);
        r(i, j).set_coefficient(p, c);
      }
  return r;
}

MatrixForm GaugeField::potential() const { return form() - MatrixForm::scalar(theta(L), m); }

double GaugeField::unitarity_defect() const {
  double r = 0;
  for (const auto& Wh : W)
    for (const auto& M : Wh) r = std::max(r, (M.adjoint() * M - identity(m)).norm());
  return r;
}

GaugeField make_gauge_field(const LatticePtr& L, int m, std::vector<MatrixFunction> W, double tol) {
  if (m < 1) throw std::invalid_argument("fiber dimension must be positive");
  if (static_cast<int>(W.size()) != L->n()) throw std::invalid_argument("need one W_h per element of S");
  for (const auto& Wh : W) {
    if (static_cast<int>(Wh.size()) != L->order()) throw std::invalid_argument("W_h must be given at every site");
    for (const auto& M : Wh)
      if (M.rows() != m || M.cols() != m) throw std::invalid_argument("W_h(g) must be m x m");
  }
  GaugeField f{L, m, std::move(W), false};
  f.unitary = f.unitarity_defect() < tol;
  return f;
}

void validate_gauge_transform(const GroupTable& G, const MatrixFunction& gamma, double max_condition) {
  if (static_cast<int>(gamma.size()) != G.order()) throw std::invalid_argument("gamma must be given at every site");
  for (Elem g = 0; g < G.order(); ++g) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(gamma[g]);
    const auto& s = svd.singularValues();
    double smin = s(s.size() - 1);
    if (smin == 0 || s(0) / smin > max_condition)
      throw std::invalid_argument("gauge transformation is singular at " + G.label(g));
  }
}

GaugeField gauge_transform(const GaugeField& W, const MatrixFunction& gamma) {
  const GroupLattice& L = *W.L;
  validate_gauge_transform(L.group(), gamma);
  MatrixFunction ginv = inverse(gamma);
  GaugeField r = W;
  for (int p = 0; p < L.n(); ++p) r.W[p] = gamma * W.W[p] * shifted(L.group(), ginv, L.s(p));
  r.unitary = r.unitarity_defect() < 1e-9;
  return r;
}

GaugeField pure_gauge(const LatticePtr& L, const MatrixFunction& gamma) {
  return gauge_transform(GaugeField::trivial(L, static_cast<int>(gamma.front().rows())), gamma);
}

MatterField transform_matter(const MatterField& psi, const MatrixFunction& gamma) {
  MatterField r = psi;
  for (size_t g = 0; g < psi.psi.size(); ++g) {
    if (psi.side == Side::left)
      r.psi[g] = gamma[g] * psi.psi[g];
    else
      r.psi[g] = (psi.psi[g].transpose() * gamma[g].inverse()).transpose();
  }
  return r;
}

std::vector<std::vector<Eigen::VectorXcd>> covariant_differences(const MatterField& psi, const GaugeField& W) {
  const GroupLattice& L = *W.L;
  std::vector<std::vector<Eigen::VectorXcd>> out(static_cast<size_t>(L.n()));
  for (int p = 0; p < L.n(); ++p) {
    Elem h = L.s(p);
    for (Elem g = 0; g < L.order(); ++g) {
      const Eigen::VectorXcd& next = psi.psi[L.mul(g, h)];
      if (psi.side == Side::left)
        out[p].push_back(W.W[p][g] * next - psi.psi[g]);
      else
        out[p].push_back((next.transpose() * W.W[p][g].inverse()).transpose() - psi.psi[g]);
    }
  }
  return out;
}

std::vector<Form> covariant_derivative(const MatterField& psi, const GaugeField& W) {
  auto diff = covariant_differences(psi, W);
  std::vector<Form> out(static_cast<size_t>(psi.m), Form(W.L, 1));
  for (int p = 0; p < W.L->n(); ++p)
    for (Elem g = 0; g < W.L->order(); ++g)
      for (int i = 0; i < psi.m; ++i) out[i].at(g, p) = diff[p][g](i);
  return out;
}

std::vector<Form> covariant_exterior(const std::vector<Form>& psi, const GaugeField& W, Side side) {
  const int m = W.m;
  if (static_cast<int>(psi.size()) != m) throw std::invalid_argument("field has the wrong number of components");
  const int r = psi.front().grade();
  const double sign = r % 2 ? -1.0 : 1.0;
  MatrixForm Wf = W.form();
  Form th = theta(W.L);
  std::vector<Form> out;
  for (int i = 0; i < m; ++i) {
    Form acc(W.L, r + 1);
    if (side == Side::left) {
      for (int j = 0; j < m; ++j) acc += mul(Wf(i, j), psi[j]);
      acc -= sign * mul(psi[i], th);
    } else {
      acc += mul(th, psi[i]);
      for (int j = 0; j < m; ++j) acc -= sign * mul(psi[j], Wf(j, i));
    }
    acc -= Delta(psi[i]);
    out.push_back(std::move(acc));
  }
  return out;
}

Function matter_lagrangian(const MatterField& psi, const GaugeField& W) {
  auto diff = covariant_differences(psi, W);
  Function L = zero(W.L->group());
  for (const auto& per_h : diff)
    for (Elem g = 0; g < W.L->order(); ++g) L(g) += 0.5 * per_h[g].squaredNorm();
  return L;
}

double matter_action(const MatterField& psi, const GaugeField& W) {
  return matter_lagrangian(psi, W).sum().real();
}

InnerProductParts inner_product_parts(const Form& a, const Form& b) {
  if (a.grade() != b.grade()) throw std::invalid_argument("inner product needs equal grades");
  if (a.grade() > 2) throw std::invalid_argument("inner product is only defined up to grade 2");
  const GroupLattice& L = a.lattice();
  const int N = L.order();
  InnerProductParts out{zero(L.group()), zero(L.group()), {}};
  if (a.grade() < 2) {
    auto ta = a.table(), tb = b.table();
    for (Elem g = 0; g < N; ++g) out.biangle(g) = ta.col(g).dot(tb.col(g));
    return out;
  }
  const auto& prod = L.word_products(2);
  for (long long w = 0; w < a.words(); ++w) {
    Elem p = prod[w];
    if (p == 0)
      out.biangle += a.coefficient(w).conjugate().cwiseProduct(b.coefficient(w));
    else if (L.in_S(p))
      out.triangle += a.coefficient(w).conjugate().cwiseProduct(b.coefficient(w));
  }
  for (Elem g : L.S2()) {
    const auto& pairs = L.pairs_of(g);
    const double size = static_cast<double>(pairs.size());
    Function sa = zero(L.group()), sb = zero(L.group()), dot = zero(L.group());
    for (auto [i, j] : pairs) {
      long long w = word_index({i, j}, L.n());
      Function ca = a.coefficient(w), cb = b.coefficient(w);
      sa += ca;
      sb += cb;
      dot += ca.conjugate().cwiseProduct(cb);
    }
    out.quadrangle[g] = size * dot - sa.conjugate().cwiseProduct(sb);
  }
  return out;
}

Function form_inner_product(const Form& a, const Form& b) {
  auto parts = inner_product_parts(a, b);
  Function r = parts.biangle + parts.triangle;
  for (auto& [g, f] : parts.quadrangle) r += f / static_cast<double>(a.lattice().multiplicity(g));
  return r;
}

FieldStrength field_strength(const GaugeField& W) {
  const LatticePtr& Lp = W.L;
  const GroupLattice& L = *Lp;
  FieldStrength out;
  MatrixForm Wf = W.form();
  out.F = Wf * Wf - Delta(Wf) - MatrixForm::scalar(delta_e(Lp), W.m);
  for (int i = 0; i < L.n(); ++i)
    for (int j = 0; j < L.n(); ++j) {
      Elem p = L.mul(L.s(i), L.s(j));
      MatrixFunction v = W.W[i] * shifted(L.group(), W.W[j], L.s(i));
      if (p == 0)
        out.biangle.push_back({i, j, p, v - identity_matrix(L.group(), W.m)});
      else if (L.in_S(p))
        out.triangle.push_back({i, j, p, v - W.W[L.pos(p)]});
      else
        out.quadrangle.push_back({i, j, p, v});
    }
  return out;
}

MatrixFunction quadrangle_difference(const FieldStrength& F, int a, int b) {
  const auto& A = F.quadrangle.at(static_cast<size_t>(a));
  const auto& B = F.quadrangle.at(static_cast<size_t>(b));
  if (A.product != B.product) throw std::invalid_argument("pairs belong to different quadrangle classes");
  return A.value - B.value;
}

YangMills yang_mills(const GaugeField& W) {
  const GroupLattice& L = *W.L;
  FieldStrength fs = field_strength(W);
  YangMills out;
  out.lagrangian.assign(static_cast<size_t>(L.order()), 0.0);
  const double norm = 1.0 / (2.0 * W.m);
  for (const Form& f : fs.F.e) {
    auto parts = inner_product_parts(f, f);
    for (Elem g = 0; g < L.order(); ++g) {
      double b = norm * parts.biangle(g).real();
      double t = norm * parts.triangle(g).real();
      out.biangle += b;
      out.triangle += t;
      out.lagrangian[g] += b + t;
    }
    for (auto& [cls, val] : parts.quadrangle) {
      double weight = norm / static_cast<double>(L.pairs_of(cls).size());
      for (Elem g = 0; g < L.order(); ++g) {
        double q = weight * val(g).real();
        out.quadrangle += q;
        out.per_class[cls] += q;
        out.lagrangian[g] += q;
      }
    }
  }
  out.total = out.biangle + out.triangle + out.quadrangle;
  return out;
}

double yang_mills_action(const GaugeField& W) { return yang_mills(W).total; }

ModuleTransport transport_from_links(const LatticePtr& L, const std::vector<MatrixFunction>& T) {
  if (static_cast<int>(T.size()) != L->n()) throw std::invalid_argument("need one link field per element of S");
  const int N = L->order();
  const int m = static_cast<int>(T.front().front().rows());
  ModuleTransport out{L, m, {}};
  for (int p = 0; p < L->n(); ++p) {
    Eigen::MatrixXcd V = Eigen::MatrixXcd::Zero(N * m, N * m);
    Elem hinv = L->inv(L->s(p));
    for (Elem g = 0; g < N; ++g) V.block(g * m, L->mul(g, hinv) * m, m, m) = T[p][g];
    out.V.push_back(std::move(V));
  }
  return out;
}

std::optional<TransportViolation> transport_violation(const ModuleTransport& T, double tol) {
  const GroupLattice& L = *T.L;
  const int m = T.m;
  for (int p = 0; p < L.n(); ++p)
    for (Elem from = 0; from < L.order(); ++from)
      for (Elem to = 0; to < L.order(); ++to) {
        if (to == L.mul(from, L.s(p))) continue;
        if (T.V[p].block(to * m, from * m, m, m).cwiseAbs().maxCoeff() > tol) return TransportViolation{p, from, to};
      }
  return std::nullopt;
}

Eigen::VectorXcd stack(const ModuleElement& E) {
  const int m = static_cast<int>(E.size());
  const Eigen::Index N = E.front().size();
  Eigen::VectorXcd v(N * m);
  for (Eigen::Index g = 0; g < N; ++g)
    for (int i = 0; i < m; ++i) v(g * m + i) = E[i](g);
  return v;
}

ModuleElement unstack(const Eigen::VectorXcd& v, int m) {
  const Eigen::Index N = v.size() / m;
  ModuleElement E(static_cast<size_t>(m), Function(N));
  for (Eigen::Index g = 0; g < N; ++g)
    for (int i = 0; i < m; ++i) E[i](g) = v(g * m + i);
  return E;
}

ModuleConnection::ModuleConnection(ModuleTransport T) : T_(std::move(T)) {
  if (auto bad = transport_violation(T_))
    throw std::invalid_argument("V_{ell_" + T_.L->label(T_.L->s(bad->pos)) + "} maps site " + T_.L->label(bad->from) +
                                " to " + T_.L->label(bad->to) + ", not forward");
  const GroupTable& G = T_.L->group();
  for (int j = 0; j < T_.m; ++j) {
    ModuleElement e(static_cast<size_t>(T_.m), zero(G));
    e[j] = one(G);
    gamma_.push_back(nabla(e));
  }
}

ModuleForm ModuleConnection::nabla(const ModuleElement& E) const {
  const GroupLattice& L = *T_.L;
  ModuleForm out(static_cast<size_t>(T_.m), Form(T_.L, 1));
  Eigen::VectorXcd v = stack(E);
  for (int p = 0; p < L.n(); ++p) {
    ModuleElement moved = unstack(T_.V[p] * v, T_.m);
    for (int j = 0; j < T_.m; ++j) out[j].set_coefficient(p, rpull(L.group(), L.s(p), E[j] - moved[j]));
  }
  return out;
}

ModuleForm ModuleConnection::nabla(const ModuleForm& psi) const {
  const int r = psi.front().grade();
  const double sign = r % 2 ? -1.0 : 1.0;
  ModuleForm out;
  for (int k = 0; k < T_.m; ++k) {
    Form acc = d(psi[k]);
    for (int j = 0; j < T_.m; ++j) acc += sign * mul(psi[j], gamma_[j][k]);
    out.push_back(std::move(acc));
  }
  return out;
}

ModuleForm ModuleConnection::curvature(const ModuleElement& E) const {
  ModuleForm r = nabla(nabla(E));
  for (auto& f : r) f *= -1.0;
  return r;
}

ModuleForm ModuleConnection::curvature(const ModuleForm& psi) const {
  ModuleForm r = nabla(nabla(psi));
  for (auto& f : r) f *= -1.0;
  return r;
}

Eigen::MatrixXcd ModuleConnection::transport_along(const VectorField& X) const {
  const GroupLattice& L = *T_.L;
  const int N = L.order(), m = T_.m;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(N * m, N * m);
  for (int p = 0; p < L.n(); ++p) {
    Function c = rpull(L.group(), L.inv(L.s(p)), X.comp[p]);
    Eigen::VectorXcd diag(N * m);
    for (Elem g = 0; g < N; ++g) diag.segment(g * m, m).setConstant(c(g));
    out += diag.asDiagonal() * T_.V[p];
  }
  return out;
}

ModuleElement ModuleConnection::apply(const Eigen::MatrixXcd& op, const ModuleElement& E) const {
  return unstack(op * stack(E), T_.m);
}

ModuleConnection connection_from_transport(const ModuleTransport& T) { return ModuleConnection(T); }

}  // namespace cayley
