#pragma once

#include <random>

#include "cayley/vector_field.hpp"

namespace cayley {

/// All randomness goes through this engine so that a seed fixes every output.
using Rng = std::mt19937_64;

cplx complex_gaussian(Rng& rng);
Function random_function(const GroupTable& G, Rng& rng);
Eigen::MatrixXcd random_matrix(int m, Rng& rng);
/// Haar-like unitary: QR of a complex Gaussian matrix with the phases of R divided out.
Eigen::MatrixXcd random_unitary(int m, Rng& rng);
MatrixFunction random_unitary_field(const GroupTable& G, int m, Rng& rng);
MatrixFunction random_matrix_field(const GroupTable& G, int m, Rng& rng);
Form random_form(const LatticePtr& L, int grade, Rng& rng);
VectorField random_vector_field(const LatticePtr& L, Rng& rng);
/// s(g) uniform on S_e.
DiscreteVF random_discrete(const LatticePtr& L, Rng& rng);
int uniform_int(Rng& rng, int lo, int hi);

}  // namespace cayley
