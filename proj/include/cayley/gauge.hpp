#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cayley/vector_field.hpp"

namespace cayley {

/// An m x m matrix of scalar forms of one grade, stored row-major.
struct MatrixForm {
  LatticePtr L;
  int grade = 0;
  int m = 1;
  std::vector<Form> e;

  static MatrixForm zero(const LatticePtr& L, int grade, int m);
  /// w times the identity matrix
  static MatrixForm scalar(const Form& w, int m);
  Form& operator()(int i, int j) { return e[static_cast<size_t>(i * m + j)]; }
  const Form& operator()(int i, int j) const { return e[static_cast<size_t>(i * m + j)]; }
  /// Coefficient matrix of one word at one site.
  Eigen::MatrixXcd at(Elem site, long long word) const;
  double max_abs() const;
};

MatrixForm operator+(const MatrixForm& a, const MatrixForm& b);
MatrixForm operator-(const MatrixForm& a, const MatrixForm& b);
MatrixForm operator*(const MatrixForm& a, const MatrixForm& b);
MatrixForm operator*(const MatrixFunction& f, const MatrixForm& a);
/// Right multiplication; f is moved to the left through the words.
MatrixForm operator*(const MatrixForm& a, const MatrixFunction& f);
MatrixForm Delta(const MatrixForm& a);
MatrixForm graded_commutator(const MatrixForm& a, const MatrixForm& b);
bool forms_equal(const MatrixForm& a, const MatrixForm& b, double tol = -1);

/// W = sum_h W_h theta^h with m x m matrix functions W_h, one per S-position.
struct GaugeField {
  LatticePtr L;
  int m = 1;
  std::vector<MatrixFunction> W;
  bool unitary = false;

  /// W_h = I, i.e. W = theta and A = 0.
  static GaugeField trivial(const LatticePtr& L, int m);
  MatrixForm form() const;
  /// A = W - theta
  MatrixForm potential() const;
  /// Largest |W_h(g)^dagger W_h(g) - I|.
  double unitarity_defect() const;
};

/// Validated gauge field; sets the unitary flag from the data.
GaugeField make_gauge_field(const LatticePtr& L, int m, std::vector<MatrixFunction> W, double tol = 1e-9);

/// Throws when gamma is singular (or badly conditioned) at some site.
void validate_gauge_transform(const GroupTable& G, const MatrixFunction& gamma, double max_condition = 1e12);

/// W'_h = gamma W_h R*_h gamma^{-1}
GaugeField gauge_transform(const GaugeField& W, const MatrixFunction& gamma);
/// The gauge transform of W = theta: W_h = gamma R*_h gamma^{-1}.
GaugeField pure_gauge(const LatticePtr& L, const MatrixFunction& gamma);

/// A column field psi' = gamma psi (Side::left) or a row field phi' = phi gamma^{-1} (Side::right).
struct MatterField {
  int m = 1;
  Side side = Side::left;
  std::vector<Eigen::VectorXcd> psi;  // one vector per site; a row field is stored transposed
};

MatterField transform_matter(const MatterField& psi, const MatrixFunction& gamma);

/// nabla_{ell_h} psi = W_h R*_h psi - psi, or (R*_h phi) W_h^{-1} - phi for a row field.
/// Indexed [S-position][site].
std::vector<std::vector<Eigen::VectorXcd>> covariant_differences(const MatterField& psi, const GaugeField& W);
/// D psi = sum_h nabla_{ell_h} psi theta^h, as m scalar 1-forms.
std::vector<Form> covariant_derivative(const MatterField& psi, const GaugeField& W);
/// D on an m-tuple of r-forms: W psi - (-1)^r psi theta - Delta(psi) for a column field,
/// theta phi - (-1)^r phi W - Delta(phi) for a row field.
std::vector<Form> covariant_exterior(const std::vector<Form>& psi, const GaugeField& W, Side side = Side::left);

/// L_psi(g) = 1/2 sum_h |nabla_{ell_h} psi(g)|^2
Function matter_lagrangian(const MatterField& psi, const GaugeField& W);
double matter_action(const MatterField& psi, const GaugeField& W);

/// Inner product of scalar forms of equal grade <= 2, as a function of the site.
/// Biangle and triangle words are orthonormal; a quadrangle class g contributes
/// (1/|g|)(|g| sum conj(a) b - conj(sum a) sum b), which ignores relation shifts.
Function form_inner_product(const Form& a, const Form& b);

struct InnerProductParts {
  Function biangle, triangle;
  std::map<Elem, Function> quadrangle;  // per class, without the 1/|g| weight
};
InnerProductParts inner_product_parts(const Form& a, const Form& b);

struct FieldStrength {
  struct Entry {
    int i, j;        // S-positions of h, h'
    Elem product;    // h h'
    MatrixFunction value;
  };
  MatrixForm F;  // W^2 - Delta(W) - Delta^e
  std::vector<Entry> biangle, triangle, quadrangle;
};

/// F with parts W_h R*_h W_h' - I, W_h R*_h W_h' - W_{h0}, and W_h R*_h W_h' on quadrangles.
FieldStrength field_strength(const GaugeField& W);
/// The gauge-invariant quadrangle part F_{(g) a;b} = F(a) - F(b) for two pairs of one class.
MatrixFunction quadrangle_difference(const FieldStrength& F, int a, int b);

struct YangMills {
  double total = 0, biangle = 0, triangle = 0, quadrangle = 0;
  std::map<Elem, double> per_class;  // quadrangle contribution per g in S_(2)
  std::vector<double> lagrangian;    // per site
};

/// Sum over sites of (1/2m) tr((p_e F, p_e F) + sum (p_h F, p_h F) + sum (1/|g|)(p_g F, p_g F)).
YangMills yang_mills(const GaugeField& W);
double yang_mills_action(const GaugeField& W);

/// Parallel transport operators V_{ell_h} on E = A^m, as (|G| m)-square matrices on
/// vectors stacked site-major (index site*m + i).
struct ModuleTransport {
  LatticePtr L;
  int m = 1;
  std::vector<Eigen::MatrixXcd> V;
};

/// V_{ell_h} E (g) = T_h(g) E(g h^{-1})
ModuleTransport transport_from_links(const LatticePtr& L, const std::vector<MatrixFunction>& T);

struct TransportViolation {
  int pos;     // S-position
  Elem from;   // a component at this site...
  Elem to;     // ...lands here instead of at from*h
};
/// First block breaking V(e^g E) = e^{gh} V(E), if any.
std::optional<TransportViolation> transport_violation(const ModuleTransport& T, double tol = 1e-12);

/// m functions; an element of Omega^r (x) E is m r-forms.
using ModuleElement = std::vector<Function>;
using ModuleForm = std::vector<Form>;

Eigen::VectorXcd stack(const ModuleElement& E);
ModuleElement unstack(const Eigen::VectorXcd& v, int m);

/// nabla E = theta (x) E - V(E)
class ModuleConnection {
 public:
  explicit ModuleConnection(ModuleTransport T);

  const ModuleTransport& transport() const { return T_; }
  ModuleForm nabla(const ModuleElement& E) const;
  /// nabla(w (x) E) = dw (x) E + (-1)^r w nabla E
  ModuleForm nabla(const ModuleForm& psi) const;
  /// R = -nabla^2
  ModuleForm curvature(const ModuleElement& E) const;
  ModuleForm curvature(const ModuleForm& psi) const;
  /// V_X = sum_h (R*_{h^{-1}} X^h) V_{ell_h}
  Eigen::MatrixXcd transport_along(const VectorField& X) const;
  ModuleElement apply(const Eigen::MatrixXcd& op, const ModuleElement& E) const;
  /// nabla e_j for the constant basis
  const std::vector<ModuleForm>& gamma() const { return gamma_; }

 private:
  ModuleTransport T_;
  std::vector<ModuleForm> gamma_;
};

ModuleConnection connection_from_transport(const ModuleTransport& T);

}  // namespace cayley
