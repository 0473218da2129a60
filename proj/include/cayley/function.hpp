#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "cayley/group.hpp"

namespace cayley {

using cplx = std::complex<double>;

/// A complex function on G, indexed by element.
using Function = Eigen::VectorXcd;

/// An m x m matrix at every site.
using MatrixFunction = std::vector<Eigen::MatrixXcd>;

enum class Side { left, right };

Function indicator(const GroupTable& G, Elem g);
Function one(const GroupTable& G);
Function zero(const GroupTable& G);

/// (R*_g f)(x) = f(xg), (L*_g f)(x) = f(gx).
Function pullback(const GroupTable& G, Side side, Elem g, const Function& f);
MatrixFunction pullback(const GroupTable& G, Side side, Elem g, const MatrixFunction& f);

inline Function rpull(const GroupTable& G, Elem g, const Function& f) {
  return pullback(G, Side::right, g, f);
}
inline MatrixFunction rpull(const GroupTable& G, Elem g, const MatrixFunction& f) {
  return pullback(G, Side::right, g, f);
}

/// ell_h f = R*_h f - f
Function ell(const GroupTable& G, Elem h, const Function& f);
/// backward difference f - R*_{h^{-1}} f
Function bar_ell(const GroupTable& G, Elem h, const Function& f);

/// f o phi for a site table phi
Function compose(const Function& f, const std::vector<Elem>& phi);

MatrixFunction constant_matrix(const GroupTable& G, const Eigen::MatrixXcd& M);
MatrixFunction identity_matrix(const GroupTable& G, int m);
MatrixFunction operator*(const MatrixFunction& a, const MatrixFunction& b);
MatrixFunction operator+(const MatrixFunction& a, const MatrixFunction& b);
MatrixFunction operator-(const MatrixFunction& a, const MatrixFunction& b);
MatrixFunction adjoint(const MatrixFunction& a);
MatrixFunction inverse(const MatrixFunction& a);

}  // namespace cayley
