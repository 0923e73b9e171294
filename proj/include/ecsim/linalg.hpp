#pragma once

#include <vector>

#include "ecsim/types.hpp"

namespace ecsim::linalg {

bool is_hermitian(const ComplexMatrix& m, double tol);

// exp(g) for anti-Hermitian g, through the eigendecomposition of the Hermitian i*g.
ComplexMatrix expm_antihermitian(const ComplexMatrix& g);

// exp(-i h t) for Hermitian h.
ComplexMatrix unitary_propagator(const ComplexMatrix& h, double t);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c);

double operator_norm(const ComplexMatrix& m);

// Connected components of the nonzero pattern of a square matrix, each sorted ascending.
std::vector<std::vector<int>> connected_blocks(const ComplexMatrix& m, double zero_tol = 0.0);

}  // namespace ecsim::linalg
