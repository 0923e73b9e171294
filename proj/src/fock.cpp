#include "ecsim/fock.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "ecsim/errors.hpp"
#include "ecsim/linalg.hpp"

namespace ecsim {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_dim(int dim, int min_dim) {
    if (dim < min_dim) {
        fail(ErrorCode::DimTooSmall,
             "dimension " + std::to_string(dim) + " below minimum " + std::to_string(min_dim));
    }
}

void require_tail(double tail, double leak_tol, int dim) {
    if (!(tail < leak_tol)) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "tail mass %.3g beyond dim %d reaches leak_tol %.3g", tail, dim, leak_tol);
        fail(ErrorCode::DimTooSmall, buf);
    }
}

// log |c_n|^2 for a coherent state with |alpha|^2 = nbar.
double coherent_log_weight(double nbar, int n) {
    if (nbar == 0.0) return n == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
    return -nbar + n * std::log(nbar) - std::lgamma(n + 1.0);
}

// log |c_{2k}|^2 for squeezed vacuum with squeeze magnitude r.
double squeezed_log_weight(double r, int k) {
    if (r == 0.0) return k == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
    double t = std::tanh(r);
    return -std::log(std::cosh(r)) + 2.0 * k * std::log(t) + std::lgamma(2.0 * k + 1.0) -
           k * std::log(4.0) - 2.0 * std::lgamma(k + 1.0);
}

}  // namespace

FockVector::FockVector(ComplexVector amps, TruncationReport report)
    : amps_(std::move(amps)), report_(std::move(report)) {
    if (amps_.size() < 1) fail(ErrorCode::DimTooSmall, "FockVector needs dim >= 1");
    report_.dim = dim();
}

FockVector FockVector::number_state(int n, int dim) {
    require_dim(dim, n + 1);
    ComplexVector v = ComplexVector::Zero(dim);
    v(n) = 1.0;
    return FockVector(std::move(v), {{}, dim, 0.0});
}

double FockVector::mean_photon_number() const {
    double s = 0.0;
    for (int n = 1; n < dim(); ++n) s += n * std::norm(amps_(n));
    return s / amps_.squaredNorm();
}

Complex FockVector::mean_annihilation() const {
    Complex s = 0.0;
    for (int n = 1; n < dim(); ++n) s += std::conj(amps_(n - 1)) * std::sqrt(double(n)) * amps_(n);
    return s / amps_.squaredNorm();
}

int recommended_dim(double amplitude_magnitude) {
    double a = std::abs(amplitude_magnitude);
    return static_cast<int>(std::ceil(a * a + 5.0 * a + 10.0));
}

int coherent_dim(double amplitude_magnitude, double leak_tol) {
    int dim = recommended_dim(amplitude_magnitude);
    while (coherent_tail_mass(std::abs(amplitude_magnitude), dim) >= leak_tol) ++dim;
    return dim;
}

double coherent_tail_mass(Complex alpha, int dim) {
    double nbar = std::norm(alpha);
    if (nbar == 0.0) return 0.0;
    // Sum forward from dim until terms past the peak stop contributing.
    double tail = 0.0;
    for (int n = dim;; ++n) {
        double w = std::exp(coherent_log_weight(nbar, n));
        tail += w;
        if (n > nbar && w <= tail * 1e-17) break;
        if (n > dim + 100000) break;
    }
    return tail;
}

FockVector coherent_state(Complex alpha, int dim, double leak_tol) {
    if (!finite(alpha)) fail(ErrorCode::NonFinite, "coherent amplitude is not finite");
    require_dim(dim, 1);
    const double nbar = std::norm(alpha);
    const double tail = coherent_tail_mass(alpha, dim);
    require_tail(tail, leak_tol, dim);

    ComplexVector amps(dim);
    const double phase = std::arg(alpha);
    for (int n = 0; n < dim; ++n) {
        double mag = std::exp(0.5 * coherent_log_weight(nbar, n));
        amps(n) = std::polar(mag, n * phase);
    }
    amps.normalize();
    return FockVector(std::move(amps), {{alpha}, dim, tail});
}

double squeezed_tail_mass(Complex z, int dim) {
    double r = std::abs(z);
    if (r == 0.0) return 0.0;
    double tail = 0.0;
    for (int k = (dim + 1) / 2;; ++k) {
        double w = std::exp(squeezed_log_weight(r, k));
        tail += w;
        if (w <= tail * 1e-17 || k > dim + 200000) break;
    }
    return tail;
}

FockVector squeezed_vacuum(Complex z, int dim, double leak_tol) {
    if (!finite(z)) fail(ErrorCode::NonFinite, "squeeze parameter is not finite");
    if (std::abs(z) > kMaxSqueeze) {
        fail(ErrorCode::ParameterOutOfRange, "|z| exceeds the squeeze cap " + std::to_string(kMaxSqueeze));
    }
    require_dim(dim, 2);
    const double r = std::abs(z);
    const double tail = squeezed_tail_mass(z, dim);
    require_tail(tail, leak_tol, dim);

    // c_{2k} = (-e^{i phi} tanh r)^k sqrt((2k)!) / (2^k k!) / sqrt(cosh r)
    ComplexVector amps = ComplexVector::Zero(dim);
    const double phi = std::arg(z);
    for (int k = 0; 2 * k < dim; ++k) {
        double mag = std::exp(0.5 * squeezed_log_weight(r, k));
        amps(2 * k) = std::polar(mag, k * (phi + kPi));
    }
    amps.normalize();
    return FockVector(std::move(amps), {{z}, dim, tail});
}

ComplexMatrix ladder_matrix(int dim) {
    require_dim(dim, 2);
    ComplexMatrix a = ComplexMatrix::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(double(n));
    return a;
}

ComplexMatrix number_matrix(int dim) {
    require_dim(dim, 1);
    ComplexMatrix n = ComplexMatrix::Zero(dim, dim);
    for (int k = 0; k < dim; ++k) n(k, k) = double(k);
    return n;
}

ComplexMatrix displacement_matrix(Complex alpha, int dim, double leak_tol) {
    if (!finite(alpha)) fail(ErrorCode::NonFinite, "displacement amplitude is not finite");
    require_dim(dim, 2);
    require_tail(coherent_tail_mass(alpha, dim), leak_tol, dim);
    ComplexMatrix a = ladder_matrix(dim);
    ComplexMatrix gen = alpha * a.adjoint() - std::conj(alpha) * a;
    return linalg::expm_antihermitian(gen);
}

ComplexMatrix squeeze_matrix(Complex z, int dim, double leak_tol) {
    if (!finite(z)) fail(ErrorCode::NonFinite, "squeeze parameter is not finite");
    if (std::abs(z) > kMaxSqueeze) {
        fail(ErrorCode::ParameterOutOfRange, "|z| exceeds the squeeze cap " + std::to_string(kMaxSqueeze));
    }
    require_dim(dim, 2);
    require_tail(squeezed_tail_mass(z, dim), leak_tol, dim);
    ComplexMatrix a = ladder_matrix(dim);
    ComplexMatrix a2 = a * a;
    ComplexMatrix gen = 0.5 * (std::conj(z) * a2 - z * a2.adjoint());
    return linalg::expm_antihermitian(gen);
}

int gate_trust_buffer(double amplitude_magnitude) {
    return recommended_dim(amplitude_magnitude);
}

Complex coherent_overlap(Complex alpha, Complex beta) {
    return std::exp(-0.5 * std::norm(alpha) - 0.5 * std::norm(beta) + std::conj(beta) * alpha);
}

Complex inner(const FockVector& psi, const FockVector& phi) {
    if (psi.dim() != phi.dim()) fail(ErrorCode::DimensionMismatch, "FockVector dims differ");
    return psi.amps().dot(phi.amps());
}

}  // namespace ecsim
