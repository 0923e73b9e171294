#include "ecsim/modemap.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ecsim/errors.hpp"
#include "ecsim/fock.hpp"
#include "ecsim/linalg.hpp"

namespace ecsim {

const char* to_string(ModeBasis basis) {
    return basis == ModeBasis::physical ? "physical" : "quasi";
}

ModeRotation rotation_params(double g1, double g2) {
    if (!std::isfinite(g1) || !std::isfinite(g2)) fail(ErrorCode::NonFinite, "couplings must be finite");
    const double g = std::hypot(g1, g2);
    if (g == 0.0) fail(ErrorCode::BothCouplingsZero, "g1 and g2 are both zero");
    return ModeRotation{std::atan2(g2, g1), g, g1, g2};
}

AmplitudePair rotate_amplitudes(const ModeRotation& rot, const AmplitudePair& pair, Direction direction) {
    const double c = std::cos(rot.theta), s = std::sin(rot.theta);
    if (direction == Direction::forward) {
        if (pair.basis != ModeBasis::physical) {
            fail(ErrorCode::BasisMismatch, "forward rotation expects physical amplitudes");
        }
        return {c * pair.first + s * pair.second, -s * pair.first + c * pair.second, ModeBasis::quasi};
    }
    if (pair.basis != ModeBasis::quasi) {
        fail(ErrorCode::BasisMismatch, "inverse rotation expects quasi amplitudes");
    }
    return {c * pair.first - s * pair.second, s * pair.first + c * pair.second, ModeBasis::physical};
}

AmplitudePair quasi_phase_amplitudes(const ModeRotation& rot, Complex phase_on_first,
                                     const AmplitudePair& pair) {
    if (std::abs(std::abs(phase_on_first) - 1.0) > 1e-12) {
        fail(ErrorCode::NonUnitPhase, "phase factor must have unit modulus");
    }
    AmplitudePair q = rotate_amplitudes(rot, pair, Direction::forward);
    q.first *= phase_on_first;
    return rotate_amplitudes(rot, q, Direction::inverse);
}

BeamSplitter::BeamSplitter(double theta, int dim1, int dim2) : theta_(theta), dim1_(dim1), dim2_(dim2) {
    if (dim1 < 2 || dim2 < 2) fail(ErrorCode::DimTooSmall, "beam splitter needs dims >= 2");
    for (int total = 0; total <= dim1 + dim2 - 2; ++total) {
        Block block;
        const int n_lo = std::max(0, total - dim2 + 1);
        const int n_hi = std::min(dim1 - 1, total);
        for (int n = n_lo; n <= n_hi; ++n) block.field_index.push_back(n * dim2 + (total - n));
        const int size = n_hi - n_lo + 1;
        // theta (a^dag b - a b^dag) restricted to the fixed-total block; local index k <-> n = n_lo + k.
        ComplexMatrix gen = ComplexMatrix::Zero(size, size);
        for (int k = 0; k + 1 < size; ++k) {
            const int n = n_lo + k, m = total - n;
            const double amp = std::sqrt(double(n + 1) * double(m));  // <n+1, m-1| a^dag b |n, m>
            gen(k + 1, k) = theta * amp;
            gen(k, k + 1) = -theta * amp;
        }
        block.u = size == 1 ? ComplexMatrix::Identity(1, 1) : linalg::expm_antihermitian(gen);
        blocks_.push_back(std::move(block));
    }
}

int BeamSplitter::trusted_photon_number() const { return std::min(dim1_, dim2_) - 1; }

ComplexVector BeamSplitter::apply(const ComplexVector& v, int inner, bool adjoint) const {
    if (v.size() != static_cast<Eigen::Index>(dim1_) * dim2_ * inner) {
        fail(ErrorCode::DimensionMismatch, "vector size does not match beam-splitter grid");
    }
    ComplexVector out(v.size());
    for (const Block& block : blocks_) {
        const int size = static_cast<int>(block.field_index.size());
        for (int s = 0; s < inner; ++s) {
            ComplexVector local(size);
            for (int k = 0; k < size; ++k) local(k) = v(block.field_index[k] * inner + s);
            ComplexVector mapped = adjoint ? (block.u.adjoint() * local).eval() : (block.u * local).eval();
            for (int k = 0; k < size; ++k) out(block.field_index[k] * inner + s) = mapped(k);
        }
    }
    return out;
}

ComplexMatrix BeamSplitter::dense() const {
    const int n = dim1_ * dim2_;
    ComplexMatrix r = ComplexMatrix::Zero(n, n);
    for (const Block& block : blocks_) {
        for (std::size_t i = 0; i < block.field_index.size(); ++i)
            for (std::size_t j = 0; j < block.field_index.size(); ++j)
                r(block.field_index[i], block.field_index[j]) = block.u(i, j);
    }
    return r;
}

ComplexMatrix mode_rotation_unitary(const ModeRotation& rot, int dim1, int dim2) {
    return BeamSplitter(rot.theta, dim1, dim2).dense();
}

SqueezeComposition squeeze_composition(const ModeRotation& rot, Complex z1, Complex z2) {
    const double c = std::cos(rot.theta), s = std::sin(rot.theta);
    if (z1 == z2) return {0.0, z1, z1};
    return {std::sin(2.0 * rot.theta) * (z2 - z1) / 2.0, z1 * c * c + z2 * s * s, z1 * s * s + z2 * c * c};
}

namespace {

// exp(G) V for G = (c1* a^2 - c1 a^dag^2)/2 + (c2* b^2 - c2 b^dag^2)/2 + c3* a b - c3 a^dag b^dag,
// with V(n, m) the amplitude on |n>|m>. Taylor series on substeps of norm <= 2.
ComplexMatrix apply_two_mode_quadratic(const ComplexMatrix& v, Complex c1, Complex c2, Complex c3) {
    const int dim = static_cast<int>(v.rows());
    std::vector<double> sq(dim + 2);
    for (int n = 0; n < dim + 2; ++n) sq[n] = std::sqrt(double(n));
    auto gen = [&](const ComplexMatrix& x) -> ComplexMatrix {
        ComplexMatrix y = ComplexMatrix::Zero(dim, dim);
        for (int n = 0; n < dim; ++n)
            for (int m = 0; m < dim; ++m) {
                Complex acc = 0.0;
                if (n + 2 < dim) acc += 0.5 * std::conj(c1) * sq[n + 1] * sq[n + 2] * x(n + 2, m);
                if (n >= 2) acc -= 0.5 * c1 * sq[n] * sq[n - 1] * x(n - 2, m);
                if (m + 2 < dim) acc += 0.5 * std::conj(c2) * sq[m + 1] * sq[m + 2] * x(n, m + 2);
                if (m >= 2) acc -= 0.5 * c2 * sq[m] * sq[m - 1] * x(n, m - 2);
                if (n + 1 < dim && m + 1 < dim) acc += std::conj(c3) * sq[n + 1] * sq[m + 1] * x(n + 1, m + 1);
                if (n >= 1 && m >= 1) acc -= c3 * sq[n] * sq[m] * x(n - 1, m - 1);
                y(n, m) = acc;
            }
        return y;
    };
    const double bound = (std::abs(c1) + std::abs(c2) + 2.0 * std::abs(c3)) * dim;
    const int steps = std::max(1, static_cast<int>(std::ceil(bound / 2.0)));
    ComplexMatrix x = v;
    for (int s = 0; s < steps; ++s) {
        ComplexMatrix term = x, sum = x;
        for (int k = 1; k < 60; ++k) {
            term = gen(term) / (double(steps) * k);
            sum += term;
            if (term.norm() < 1e-18 * sum.norm()) break;
        }
        x = std::move(sum);
    }
    return x;
}

ComplexVector flatten(const ComplexMatrix& m) {
    ComplexVector v(m.size());
    for (int n = 0; n < m.rows(); ++n)
        for (int k = 0; k < m.cols(); ++k) v(n * m.cols() + k) = m(n, k);
    return v;
}

ComplexMatrix unflatten(const ComplexVector& v, int dim) {
    ComplexMatrix m(dim, dim);
    for (int n = 0; n < dim; ++n)
        for (int k = 0; k < dim; ++k) m(n, k) = v(n * dim + k);
    return m;
}

}  // namespace

double squeeze_identity_residual(const ModeRotation& rot, Complex z1, Complex z2, int dim, int n_check,
                                 SqueezeForm form) {
    if (n_check < 0 || n_check >= dim) fail(ErrorCode::DimTooSmall, "n_check must lie below dim");
    const SqueezeComposition sc = squeeze_composition(rot, z1, z2);
    const ComplexMatrix s1 = squeeze_matrix(z1, dim);
    const ComplexMatrix s2 = squeeze_matrix(z2, dim);
    ComplexMatrix sq, sq2;
    if (form == SqueezeForm::product) {
        sq = squeeze_matrix(sc.q, dim);
        sq2 = sq;
    }
    const BeamSplitter r(rot.theta, dim, dim);
    const int trusted = r.trusted_photon_number();
    double worst = 0.0;
    for (int n = 0; n <= n_check; ++n)
        for (int m = 0; n + m <= n_check; ++m) {
            // S_1 (x) S_2 on |n>|m> is the outer product of two columns.
            const ComplexMatrix lhs = s1.col(n) * s2.col(m).transpose();
            ComplexMatrix e = ComplexMatrix::Zero(dim, dim);
            e(n, m) = 1.0;
            ComplexMatrix x = unflatten(r.apply(flatten(e)), dim);
            if (form == SqueezeForm::product) {
                x = sq * x * sq2.transpose();
                x = apply_two_mode_quadratic(x, 0.0, 0.0, sc.p);
            } else {
                x = apply_two_mode_quadratic(x, sc.q, sc.q_mode_two, sc.p);
            }
            const ComplexMatrix rhs = unflatten(r.apply(flatten(x), 1, true), dim);
            // only the complete photon-number blocks of R are the untruncated operator
            double acc = 0.0;
            for (int i = 0; i < dim; ++i)
                for (int k = 0; i + k <= trusted; ++k) acc += std::norm(lhs(i, k) - rhs(i, k));
            worst = std::max(worst, std::sqrt(acc));
        }
    return worst;
}

DecoupleParams decouple_params(double g1, double g2, double delta1, double delta2) {
    if (delta1 == 0.0 || delta2 == 0.0) fail(ErrorCode::ZeroDetuning, "detunings must be nonzero");
    const double m11 = g1 * g1 / delta1;
    const double m22 = g2 * g2 / delta2;
    const double m12 = g1 * g2 * (delta1 + delta2) / (2.0 * delta1 * delta2);
    const double num = g1 * g2 * delta2 + g1 * g2 * delta1;
    const double den = g1 * g1 * delta2 - g2 * g2 * delta1;
    const double eta = (num == 0.0 && den == 0.0) ? 0.0 : 0.5 * std::atan2(num, den);
    const double c2 = std::cos(2.0 * eta), s2 = std::sin(2.0 * eta);
    DecoupleParams p;
    p.eta = eta;
    p.lambda_mode = 0.5 * (m11 * (1.0 + c2) + m22 * (1.0 - c2)) + m12 * s2;
    p.zeta_mode = 0.5 * (m11 * (1.0 - c2) + m22 * (1.0 + c2)) - m12 * s2;
    return p;
}

}  // namespace ecsim
