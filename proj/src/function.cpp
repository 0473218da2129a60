#include "cayley/function.hpp"

#include <stdexcept>

namespace cayley {

Function indicator(const GroupTable& G, Elem g) {
  Function f = Function::Zero(G.order());
  f(g) = 1.0;
  return f;
}

Function one(const GroupTable& G) { return Function::Ones(G.order()); }
Function zero(const GroupTable& G) { return Function::Zero(G.order()); }

Function pullback(const GroupTable& G, Side side, Elem g, const Function& f) {
  Function r(G.order());
  for (Elem x = 0; x < G.order(); ++x) r(x) = f(side == Side::right ? G.mul(x, g) : G.mul(g, x));
  return r;
}

MatrixFunction pullback(const GroupTable& G, Side side, Elem g, const MatrixFunction& f) {
  MatrixFunction r(f.size());
  for (Elem x = 0; x < G.order(); ++x) r[x] = f[side == Side::right ? G.mul(x, g) : G.mul(g, x)];
  return r;
}

Function ell(const GroupTable& G, Elem h, const Function& f) { return rpull(G, h, f) - f; }

Function bar_ell(const GroupTable& G, Elem h, const Function& f) { return f - rpull(G, G.inv(h), f); }

Function compose(const Function& f, const std::vector<Elem>& phi) {
  Function r(static_cast<Eigen::Index>(phi.size()));
  for (size_t x = 0; x < phi.size(); ++x) r(static_cast<Eigen::Index>(x)) = f(phi[x]);
  return r;
}

MatrixFunction constant_matrix(const GroupTable& G, const Eigen::MatrixXcd& M) {
  return MatrixFunction(static_cast<size_t>(G.order()), M);
}

MatrixFunction identity_matrix(const GroupTable& G, int m) {
  return constant_matrix(G, Eigen::MatrixXcd::Identity(m, m));
}

MatrixFunction operator*(const MatrixFunction& a, const MatrixFunction& b) {
  MatrixFunction r(a.size());
  for (size_t x = 0; x < a.size(); ++x) r[x] = a[x] * b[x];
  return r;
}

MatrixFunction operator+(const MatrixFunction& a, const MatrixFunction& b) {
  MatrixFunction r(a.size());
  for (size_t x = 0; x < a.size(); ++x) r[x] = a[x] + b[x];
  return r;
}

MatrixFunction operator-(const MatrixFunction& a, const MatrixFunction& b) {
  MatrixFunction r(a.size());
  for (size_t x = 0; x < a.size(); ++x) r[x] = a[x] - b[x];
  return r;
}

MatrixFunction adjoint(const MatrixFunction& a) {
  MatrixFunction r(a.size());
  for (size_t x = 0; x < a.size(); ++x) r[x] = a[x].adjoint();
  return r;
}

MatrixFunction inverse(const MatrixFunction& a) {
  MatrixFunction r(a.size());
  for (size_t x = 0; x < a.size(); ++x) {
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(a[x]);
    if (!lu.isInvertible()) throw std::invalid_argument("singular matrix at site " + std::to_string(x));
    r[x] = lu.inverse();
  }
  return r;
}

}  // namespace cayley
