#include "cayley/lincon.hpp"

#include <stdexcept>

namespace cayley {

LinearConnection::LinearConnection(LatticePtr L, std::vector<Function> V) : L_(std::move(L)), V_(std::move(V)) {
  const size_t n = static_cast<size_t>(L_->n());
  if (V_.size() != n * n * n) throw std::invalid_argument("a linear connection needs |S|^3 coefficient functions");
  for (const auto& f : V_)
    if (f.size() != L_->order()) throw std::invalid_argument("coefficient function has the wrong length");
}

size_t LinearConnection::index(int h, int h1, int h2) const {
  const size_t n = static_cast<size_t>(L_->n());
  return (static_cast<size_t>(h) * n + static_cast<size_t>(h1)) * n + static_cast<size_t>(h2);
}

LinearConnection LinearConnection::zero(const LatticePtr& L) {
  const size_t n = static_cast<size_t>(L->n());
  return {L, std::vector<Function>(n * n * n, cayley::zero(L->group()))};
}

LinearConnection LinearConnection::canonical(const LatticePtr& L) {
  LinearConnection C = zero(L);
  const Function o = one(L->group());
  for (int h1 = 0; h1 < L->n(); ++h1)
    for (int h2 = 0; h2 < L->n(); ++h2) {
      Elem p = L->mul(L->s(h1), L->s(h2));
      if (L->in_S(p)) C.V(L->pos(p), h1, h2) += o;
      C.V(h1, h1, h2) -= o;
    }
  return C;
}

Eigen::MatrixXcd LinearConnection::matrix(int hp, Elem g) const {
  const int n = L_->n();
  Eigen::MatrixXcd M(n, n);
  for (int h = 0; h < n; ++h)
    for (int h2 = 0; h2 < n; ++h2) M(h, h2) = V(h, hp, h2)(g);
  return M;
}

Form LinearConnection::V_form(int h, int hp) const {
  Form r(L_, 1);
  for (int h2 = 0; h2 < L_->n(); ++h2) r.set_coefficient(h2, V(h, h2, hp));
  return r;
}

Form transport_1form(const LinearConnection& C, int hp, const Form& alpha) {
  const GroupLattice& L = *C.lattice_ptr();
  if (alpha.grade() != 1) throw std::invalid_argument("transport acts on 1-forms");
  const Elem back = L.inv(L.s(hp));
  Form out(C.lattice_ptr(), 1);
  for (int k = 0; k < L.n(); ++k) {
    Function a = rpull(L.group(), back, alpha.coefficient(k));
    for (int h2 = 0; h2 < L.n(); ++h2) {
      Function c = out.coefficient(h2) + a.cwiseProduct(rpull(L.group(), back, C.V(k, hp, h2)));
      out.set_coefficient(h2, c);
    }
  }
  return out;
}

VectorField transport_vf(const LinearConnection& C, int h, const VectorField& Y) {
  const GroupLattice& L = *C.lattice_ptr();
  VectorField out = VectorField::zero(C.lattice_ptr());
  for (int hp = 0; hp < L.n(); ++hp) {
    Function y = rpull(L.group(), L.s(h), Y.comp[hp]);
    for (int h2 = 0; h2 < L.n(); ++h2) out.comp[h2] += y.cwiseProduct(C.V(h2, h, hp));
  }
  return out;
}

VectorField transport_vf_hat(const LinearConnection& C, int h, const VectorField& Y) {
  const GroupLattice& L = *C.lattice_ptr();
  Elem hi = L.inv(L.s(h));
  if (!L.in_S(hi)) throw std::invalid_argument("V-hat needs a symmetric lattice; " + L.label(hi) + " is not in S");
  return transport_vf(C, L.pos(hi), Y);
}

FormTensor nabla_theta(const LinearConnection& C, int h) {
  const LatticePtr& L = C.lattice_ptr();
  FormTensor t(static_cast<size_t>(L->n()), Form(L, 1));
  t[h] += theta(L);
  for (int hp = 0; hp < L->n(); ++hp) t[hp] -= C.V_form(h, hp);
  return t;
}

FormTensor nabla(const LinearConnection& C, const FormTensor& t) {
  const LatticePtr& L = C.lattice_ptr();
  const int n = L->n();
  const int r = t.front().grade();
  const double sign = r % 2 ? -1.0 : 1.0;
  FormTensor out;
  for (int j = 0; j < n; ++j) out.push_back(d(t[j]));
  for (int k = 0; k < n; ++k) {
    if (t[k].max_abs() == 0) continue;
    FormTensor nk = nabla_theta(C, k);
    for (int j = 0; j < n; ++j) out[j] += sign * mul(t[k], nk[j]);
  }
  return out;
}

Form project(const FormTensor& t) {
  const LatticePtr& L = t.front().lattice_ptr();
  Form r(L, t.front().grade() + 1);
  for (int k = 0; k < L->n(); ++k) r += mul(t[k], theta(L, k));
  return r;
}

Form torsion(const LinearConnection& C, int h) {
  const GroupLattice& L = *C.lattice_ptr();
  const Function o = one(L.group());
  Form r(C.lattice_ptr(), 2);
  for (int h1 = 0; h1 < L.n(); ++h1)
    for (int h2 = 0; h2 < L.n(); ++h2) {
      Function c = C.V(h, h1, h2);
      if (h1 == h) c += o;
      if (L.mul(L.s(h1), L.s(h2)) == L.s(h)) c -= o;
      r.set_coefficient(word_index({h1, h2}, L.n()), c);
    }
  return r;
}

Form torsion_from_definition(const LinearConnection& C, int h) {
  return d(theta(C.lattice_ptr(), h)) - project(nabla_theta(C, h));
}

TorsionReport torsion_report(const LinearConnection& C) {
  const GroupLattice& L = *C.lattice_ptr();
  TorsionReport rep;
  const auto& prod = L.word_products(2);
  for (int h = 0; h < L.n(); ++h) {
    Form T = torsion(C, h);
    for (long long w = 0; w < T.words(); ++w) {
      double a = T.coefficient(w).cwiseAbs().maxCoeff();
      if (prod[w] == 0)
        rep.biangle = std::max(rep.biangle, a);
      else if (L.in_S(prod[w]))
        rep.triangle = std::max(rep.triangle, a);
    }
    for (Elem g : L.S2()) {
      const auto& pairs = L.pairs_of(g);
      Function first = T.coefficient(word_index({pairs[0].first, pairs[0].second}, L.n()));
      for (size_t k = 1; k < pairs.size(); ++k) {
        Function c = T.coefficient(word_index({pairs[k].first, pairs[k].second}, L.n()));
        rep.quadrangle = std::max(rep.quadrangle, (first - c).cwiseAbs().maxCoeff());
      }
    }
  }
  return rep;
}

bool is_torsion_free(const LinearConnection& C, double tol) { return torsion_report(C).torsion_free(tol); }

FormTensor curvature(const LinearConnection& C, int h) {
  FormTensor t = nabla(C, nabla_theta(C, h));
  for (auto& f : t) f *= -1.0;
  return t;
}

FormTensor curvature_expanded(const LinearConnection& C, int h) {
  const LatticePtr& L = C.lattice_ptr();
  const int n = L->n();
  FormTensor t(static_cast<size_t>(n), Form(L, 2));
  t[h] -= delta_e(L);
  Form th = theta(L, h);
  for (int hp = 0; hp < n; ++hp) {
    Form v1 = transport_1form(C, hp, th);
    Form dl = Delta(theta(L, hp));
    for (int k = 0; k < n; ++k) t[k] -= dl * v1.coefficient(k);
    for (int h2 = 0; h2 < n; ++h2) {
      Form v2 = transport_1form(C, h2, v1);
      Form mono = monomial(L, {hp, h2});
      for (int k = 0; k < n; ++k) t[k] += mono * v2.coefficient(k);
    }
  }
  return t;
}

Form first_bianchi_residual(const LinearConnection& C, int h) {
  const LatticePtr& L = C.lattice_ptr();
  Form T = torsion(C, h);
  Form r = mul(T, theta(L)) + Delta(T);
  for (int hp = 0; hp < L->n(); ++hp) r -= mul(C.V_form(h, hp), torsion(C, hp));
  return r + project(curvature(C, h));
}

Form second_bianchi_residual(const LinearConnection& C, int h, int hp) {
  const LatticePtr& L = C.lattice_ptr();
  const int n = L->n();
  std::vector<FormTensor> R;
  for (int k = 0; k < n; ++k) R.push_back(curvature(C, k));
  Form r = Delta(R[h][hp]);
  for (int h2 = 0; h2 < n; ++h2) {
    r -= mul(C.V_form(h, h2), R[h2][hp]);
    r += mul(R[h][h2], C.V_form(h2, hp));
  }
  return r;
}

std::optional<SingularTransport> singular_transport(const LinearConnection& C, double tol) {
  const GroupLattice& L = *C.lattice_ptr();
  for (int p = 0; p < L.n(); ++p)
    for (Elem g = 0; g < L.order(); ++g) {
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(C.matrix(p, g));
      const auto& s = svd.singularValues();
      if (s(s.size() - 1) <= tol * std::max(1.0, s(0))) return SingularTransport{p, g};
    }
  return std::nullopt;
}

std::vector<std::vector<Eigen::MatrixXcd>> inverse_transport(const LinearConnection& C) {
  const GroupLattice& L = *C.lattice_ptr();
  if (auto bad = singular_transport(C))
    throw std::invalid_argument("V_" + L.label(L.s(bad->pos)) + " is singular at " + L.label(bad->site));
  std::vector<std::vector<Eigen::MatrixXcd>> U(static_cast<size_t>(L.n()));
  for (int p = 0; p < L.n(); ++p)
    for (Elem g = 0; g < L.order(); ++g) U[p].push_back(C.matrix(p, g).inverse());
  return U;
}

namespace {

VectorField apply_inverse(const LinearConnection& C, const std::vector<Eigen::MatrixXcd>& Uh, int h,
                          const VectorField& Y) {
  const GroupLattice& L = *C.lattice_ptr();
  const Elem back = L.inv(L.s(h));
  VectorField out = VectorField::zero(C.lattice_ptr());
  for (int hp = 0; hp < L.n(); ++hp) {
    Function y = rpull(L.group(), back, Y.comp[hp]);
    for (int h2 = 0; h2 < L.n(); ++h2) {
      Function u(L.order());
      for (Elem g = 0; g < L.order(); ++g) u(g) = Uh[g](h2, hp);
      out.comp[h2] += y.cwiseProduct(rpull(L.group(), back, u));
    }
  }
  return out;
}

}  // namespace

VectorField transport_vf_inverse(const LinearConnection& C, int h, const VectorField& Y) {
  return apply_inverse(C, inverse_transport(C)[h], h, Y);
}

VectorField nabla_on_vf(const LinearConnection& C, int h, const VectorField& Y) {
  return Y - transport_vf_inverse(C, h, Y);
}

Form nabla_on_1form(const LinearConnection& C, int h, const Form& alpha) {
  return alpha - transport_1form(C, h, alpha);
}

Form transport_1form_along(const LinearConnection& C, const VectorField& X, const Form& alpha) {
  const GroupLattice& L = *C.lattice_ptr();
  Form out(C.lattice_ptr(), 1);
  for (int h = 0; h < L.n(); ++h)
    out += rpull(L.group(), L.inv(L.s(h)), X.comp[h]) * transport_1form(C, h, alpha);
  return out;
}

VectorField transport_vf_inverse_along(const LinearConnection& C, const VectorField& X, const VectorField& Y) {
  const GroupLattice& L = *C.lattice_ptr();
  auto U = inverse_transport(C);
  VectorField out = VectorField::zero(C.lattice_ptr());
  for (int h = 0; h < L.n(); ++h) {
    Function c = rpull(L.group(), L.inv(L.s(h)), X.comp[h]);
    VectorField part = apply_inverse(C, U[h], h, Y);
    for (int k = 0; k < L.n(); ++k) out.comp[k] += c.cwiseProduct(part.comp[k]);
  }
  return out;
}

bool is_discrete(const LinearConnection& C, double tol) {
  const GroupLattice& L = *C.lattice_ptr();
  for (int p = 0; p < L.n(); ++p)
    for (Elem g = 0; g < L.order(); ++g) {
      Eigen::MatrixXcd M = C.matrix(p, g);
      for (int i = 0; i < L.n(); ++i) {
        int ones_row = 0, ones_col = 0;
        for (int j = 0; j < L.n(); ++j) {
          for (cplx v : {M(i, j), M(j, i)})
            if (std::abs(v) > tol && std::abs(v - 1.0) > tol) return false;
          if (std::abs(M(i, j) - 1.0) <= tol) ++ones_row;
          if (std::abs(M(j, i) - 1.0) <= tol) ++ones_col;
        }
        if (ones_row != 1 || ones_col != 1) return false;
      }
    }
  return true;
}

}  // namespace cayley
