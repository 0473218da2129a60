#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cayley/form.hpp"

namespace cayley {

/// X = sum_h X^h . ell_h with one coefficient function per S-position.
struct VectorField {
  LatticePtr L;
  std::vector<Function> comp;

  static VectorField zero(const LatticePtr& L);
  static VectorField ell(const LatticePtr& L, int pos);
  /// Xf = sum_h X^h ell_h f
  Function apply(const Function& f) const;
  VectorField operator+(const VectorField& o) const;
  VectorField operator-(const VectorField& o) const;
  double distance(const VectorField& o) const;
};

/// A field given by s: G -> S_e, i.e. X^h(g) = [s(g) = h].
struct DiscreteVF {
  LatticePtr L;
  std::vector<Elem> s;

  VectorField field() const;
  bool operator==(const DiscreteVF& o) const { return s == o.s; }
};

DiscreteVF make_discrete(const LatticePtr& L, std::vector<Elem> s);
DiscreteVF constant_field(const LatticePtr& L, Elem h);
/// Throws unless every component is 0/1 with at most one 1 per site.
DiscreteVF validate_discrete(const VectorField& X, double tol = 1e-12);

/// phi_X(g) = g s(g)
SiteMap flow(const DiscreteVF& X);
/// (I+X) f = sum over h in S_e of X^h R*_h f
Function apply_flow_pullback(const DiscreteVF& X, const Function& f);

struct Invertibility {
  bool invertible = false;
  bool automorphism = false;   // I+X is bijective on functions
  bool arrow_condition = false;  // one incoming arrow where one leaves, none otherwise
  bool sum_condition = false;    // sum_{h in S_e} X^h(g h^{-1}) = 1 everywhere
  std::optional<Elem> witness;   // a site breaking the sum condition
  std::vector<Elem> r;           // r_X when invertible
};

Invertibility invertibility(const DiscreteVF& X);

/// (I + X-check) f = sum_h [r_X = h] R*_{h^{-1}} f, the inverse of I+X.
Function apply_inverse_flow_pullback(const DiscreteVF& X, const std::vector<Elem>& r, const Function& f);

bool is_basic(const DiscreteVF& X);

/// Basic fields X_h with s_{X_h}(e) = h whose values at each site run through S.
/// A nonzero seed shuffles the search order; seed 0 tries the identity first.
std::optional<std::vector<DiscreteVF>> basic_basis(const LatticePtr& L, unsigned long long seed = 0);
bool is_basic_basis(const std::vector<DiscreteVF>& basis);

/// alpha^h with <X_h, alpha^{h'}> = delta.
std::vector<Form> dual_basis(const std::vector<DiscreteVF>& basis);

/// <Y, alpha> = sum_h Y^h alpha_h for a 1-form alpha = sum alpha_h theta^h.
Function pairing(const VectorField& Y, const Form& alpha);

/// R_X = sum_{h in S_e} X^h R*_h on forms (bicovariant lattices).
Form R_X(const DiscreteVF& X, const Form& w);
Form R_X_inv(const DiscreteVF& X, const Form& w);
/// R_{X*}Y through the closed expression in the components of Y.
VectorField R_X_star(const DiscreteVF& X, const VectorField& Y);
DiscreteVF R_X_star(const DiscreteVF& X, const DiscreteVF& Y);

enum class Polygon { none, biangle, triangle, quadrangle };

struct PolygonRelation {
  Polygon kind = Polygon::none;
  std::optional<DiscreteVF> third;  // Z for a triangle
  std::vector<Elem> product;        // s_Y(g) s_X(g)
};

/// Classifies the pointwise product s_Y s_X.
PolygonRelation polygon_relation(const DiscreteVF& X, const DiscreteVF& Y);
/// True when s_Y s_X = s_W s_Z lies outside S_e at every site.
bool is_quadrangle(const DiscreteVF& X, const DiscreteVF& Y, const DiscreteVF& Z, const DiscreteVF& W);

/// Checks R_X R_{R_{X*}Y} = R*_{s_Y s_X} on all indicator functions.
bool polygon_operator_identity(const DiscreteVF& X, const DiscreteVF& Y);

/// (phi_* Y) = (phi^{-1})^* Y phi^* for a bijective differentiable phi.
VectorField push_forward(const SiteMap& phi, const VectorField& Y);

Function lie_derivative(const DiscreteVF& X, const Function& f);
Form lie_derivative(const DiscreteVF& X, const Form& w);
VectorField lie_derivative(const DiscreteVF& X, const VectorField& Y);

/// X contracted into w; needs a differentiable flow.
Form contract(const DiscreteVF& X, const Form& w);

std::vector<Elem> integral_curve(const DiscreteVF& X, Elem g0, int steps);

struct FlowTheorem {
  bool differentiable = false;  // (1)
  bool s_compatible = false;    // (2)
  bool intertwines = false;     // (3), checked for Y in {ell_h}
  std::string detail;
};

/// The three conditions on discrete X for a differentiable flow. For (3), s_Z
/// is set to e at sites without an incoming X-arrow.
FlowTheorem flow_theorem(const DiscreteVF& X);

}  // namespace cayley
