#include "cayley/random.hpp"

namespace cayley {

cplx complex_gaussian(Rng& rng) {
  std::normal_distribution<double> nd(0.0, 1.0);
  double re = nd(rng);
  double im = nd(rng);
  return {re, im};
}

Function random_function(const GroupTable& G, Rng& rng) {
  Function f(G.order());
  for (Elem g = 0; g < G.order(); ++g) f(g) = complex_gaussian(rng);
  return f;
}

Eigen::MatrixXcd random_matrix(int m, Rng& rng) {
  Eigen::MatrixXcd A(m, m);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i) A(i, j) = complex_gaussian(rng);
  return A;
}

Eigen::MatrixXcd random_unitary(int m, Rng& rng) {
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(random_matrix(m, rng));
  Eigen::MatrixXcd Q = qr.householderQ();
  Eigen::MatrixXcd R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < m; ++j) {
    cplx d = R(j, j);
    double a = std::abs(d);
    if (a > 0) Q.col(j) *= d / a;
  }
  return Q;
}

MatrixFunction random_unitary_field(const GroupTable& G, int m, Rng& rng) {
  MatrixFunction f;
  for (Elem g = 0; g < G.order(); ++g) f.push_back(random_unitary(m, rng));
  return f;
}

MatrixFunction random_matrix_field(const GroupTable& G, int m, Rng& rng) {
  MatrixFunction f;
  for (Elem g = 0; g < G.order(); ++g) f.push_back(random_matrix(m, rng));
  return f;
}

Form random_form(const LatticePtr& L, int grade, Rng& rng) {
  Form w(L, grade);
  for (Eigen::Index k = 0; k < w.data().size(); ++k) w.data()(k) = complex_gaussian(rng);
  return w;
}

VectorField random_vector_field(const LatticePtr& L, Rng& rng) {
  VectorField X = VectorField::zero(L);
  for (auto& c : X.comp) c = random_function(L->group(), rng);
  return X;
}

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

DiscreteVF random_discrete(const LatticePtr& L, Rng& rng) {
  std::vector<Elem> s(static_cast<size_t>(L->order()));
  for (auto& v : s) {
    int k = uniform_int(rng, -1, L->n() - 1);
    v = k < 0 ? 0 : L->s(k);
  }
  return make_discrete(L, std::move(s));
}

}  // namespace cayley
