#include "ecsim/linalg.hpp"

#include <algorithm>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

namespace ecsim::linalg {

bool is_hermitian(const ComplexMatrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

ComplexMatrix expm_antihermitian(const ComplexMatrix& g) {
    // g = -i k with k = i g Hermitian, so exp(g) = V exp(-i w) V^dag.
    ComplexMatrix k = kI * g;
    k = 0.5 * (k + k.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(k);
    ComplexVector phases = (-kI * es.eigenvalues().cast<Complex>()).array().exp();
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

ComplexMatrix unitary_propagator(const ComplexMatrix& h, double t) {
    return expm_antihermitian(-kI * t * h);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    return Eigen::kroneckerProduct(a, b).eval();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c) {
    return kron(kron(a, b), c);
}

double operator_norm(const ComplexMatrix& m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    return svd.singularValues()(0);
}

std::vector<std::vector<int>> connected_blocks(const ComplexMatrix& m, double zero_tol) {
    const int n = static_cast<int>(m.rows());
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            if (i != j && std::abs(m(i, j)) > zero_tol) {
                int ri = find(i), rj = find(j);
                if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
            }
        }
    }
    std::vector<int> label(n, -1);
    std::vector<std::vector<int>> blocks;
    for (int i = 0; i < n; ++i) {
        int r = find(i);
        if (label[r] < 0) {
            label[r] = static_cast<int>(blocks.size());
            blocks.emplace_back();
        }
        blocks[label[r]].push_back(i);
    }
    return blocks;
}

}  // namespace ecsim::linalg
