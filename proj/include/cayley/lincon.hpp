#pragma once

#include <optional>
#include <vector>

#include "cayley/vector_field.hpp"

namespace cayley {

/// An element sum_k w_k (x) theta^k of Omega^r (x) Omega^1, indexed by the S-position k.
using FormTensor = std::vector<Form>;

/// Linear connection given by the functions V^h_{h',h''} (all indices S-positions).
/// nabla theta^h = theta (x) theta^h - sum_{h'} V^h_{h'} (x) theta^{h'}
class LinearConnection {
 public:
  LinearConnection(LatticePtr L, std::vector<Function> V);

  static LinearConnection zero(const LatticePtr& L);
  /// V^h_{h1,h2} = [h1 h2 = h] - [h1 = h]
  static LinearConnection canonical(const LatticePtr& L);

  const LatticePtr& lattice_ptr() const { return L_; }
  const Function& V(int h, int h1, int h2) const { return V_[index(h, h1, h2)]; }
  Function& V(int h, int h1, int h2) { return V_[index(h, h1, h2)]; }
  /// The matrix V_{h'}(g) with entry (h, h'') = V^h_{h',h''}(g).
  Eigen::MatrixXcd matrix(int hp, Elem g) const;
  /// V^h_{h'} = sum_{h''} V^h_{h'',h'} theta^{h''}
  Form V_form(int h, int hp) const;

 private:
  size_t index(int h, int h1, int h2) const;
  LatticePtr L_;
  std::vector<Function> V_;
};

/// V_{ell_{h'}} on a 1-form: sum_k (R*_{h'^-1} a_k) sum_{h''} (R*_{h'^-1} V^k_{h',h''}) theta^{h''}
Form transport_1form(const LinearConnection& C, int hp, const Form& alpha);
/// The dual transport on vector fields: sum_{h'} (R*_h Y^{h'}) sum_{h''} V^{h''}_{h,h'} ell_{h''}
VectorField transport_vf(const LinearConnection& C, int h, const VectorField& Y);
/// V-hat_{ell_h} = V-tilde_{ell_{h^{-1}}}; only for S = S^{-1}.
VectorField transport_vf_hat(const LinearConnection& C, int h, const VectorField& Y);

FormTensor nabla_theta(const LinearConnection& C, int h);
/// nabla(w (x) alpha) = dw (x) alpha + (-1)^r w nabla(alpha), extended linearly.
FormTensor nabla(const LinearConnection& C, const FormTensor& t);
/// pi: Omega^r (x) Omega^1 -> Omega^{r+1}
Form project(const FormTensor& t);

/// Theta^h = sum (delta^h_{h1} - delta^h_{h1 h2} + V^h_{h1,h2}) theta^{h1} theta^{h2}
Form torsion(const LinearConnection& C, int h);
/// d theta^h - pi nabla theta^h, the defining expression.
Form torsion_from_definition(const LinearConnection& C, int h);

struct TorsionReport {
  double biangle = 0;    // largest |coefficient| on biangle words
  double triangle = 0;   // largest |coefficient| on triangle words
  double quadrangle = 0; // largest |Q^h_(g) a; b| over pairs in one class
  bool torsion_free(double tol) const { return biangle <= tol && triangle <= tol && quadrangle <= tol; }
};

TorsionReport torsion_report(const LinearConnection& C);
bool is_torsion_free(const LinearConnection& C, double tol = 1e-9);

/// R(theta^h) = -nabla^2 theta^h
FormTensor curvature(const LinearConnection& C, int h);
/// The closed expansion -Delta^e (x) theta^h - sum Delta(theta^h') (x) V_{h'}(theta^h)
///   + sum theta^{h'} theta^{h''} (x) V_{h''} V_{h'} (theta^h).
FormTensor curvature_expanded(const LinearConnection& C, int h);

/// Theta^h theta + Delta(Theta^h) - sum V^h_{h'} Theta^{h'} + pi R(theta^h); zero mod relations.
Form first_bianchi_residual(const LinearConnection& C, int h);
/// Delta(R^h_{h'}) - sum (V^h_{h''} R^{h''}_{h'} - R^h_{h''} V^{h''}_{h'}); zero mod relations.
Form second_bianchi_residual(const LinearConnection& C, int h, int hp);

struct SingularTransport {
  int pos;
  Elem site;
};

/// U_h = V_h^{-1} per site, indexed [S-position][site].
std::vector<std::vector<Eigen::MatrixXcd>> inverse_transport(const LinearConnection& C);
std::optional<SingularTransport> singular_transport(const LinearConnection& C, double tol = 1e-12);

/// U_{ell_h} Y = sum_{h'} (R*_{h^-1} Y^{h'}) sum_{h''} (R*_{h^-1} U_h^{h''}_{h'}) ell_{h''}
VectorField transport_vf_inverse(const LinearConnection& C, int h, const VectorField& Y);
/// nabla_{ell_h} Y = Y - U_{ell_h} Y
VectorField nabla_on_vf(const LinearConnection& C, int h, const VectorField& Y);
/// nabla_{ell_h} alpha = alpha - V_{ell_h} alpha
Form nabla_on_1form(const LinearConnection& C, int h, const Form& alpha);

/// V_X and U_X along a vector field: sum_h (R*_{h^-1} X^h) times the ell_h operator.
Form transport_1form_along(const LinearConnection& C, const VectorField& X, const Form& alpha);
VectorField transport_vf_inverse_along(const LinearConnection& C, const VectorField& X, const VectorField& Y);

/// Every V_h(g) is a permutation matrix.
bool is_discrete(const LinearConnection& C, double tol = 1e-12);

}  // namespace cayley
