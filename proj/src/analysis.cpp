#include "ecsim/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "ecsim/errors.hpp"

namespace ecsim {

namespace {

std::vector<int> strides(const std::vector<int>& dims) {
    std::vector<int> s(dims.size(), 1);
    for (int i = static_cast<int>(dims.size()) - 2; i >= 0; --i) s[i] = s[i + 1] * dims[i + 1];
    return s;
}

int product(const std::vector<int>& dims) {
    return std::accumulate(dims.begin(), dims.end(), 1, std::multiplies<int>());
}

struct Split {
    std::vector<int> keep_pos;
    std::vector<int> trace_pos;
};

Split split_subsystems(const std::vector<Subsystem>& have, const std::vector<Subsystem>& keep) {
    if (keep.empty()) fail(ErrorCode::BadSubsystem, "keep set is empty");
    Split s;
    for (std::size_t i = 0; i < keep.size(); ++i) {
        auto it = std::find(have.begin(), have.end(), keep[i]);
        if (it == have.end()) fail(ErrorCode::BadSubsystem, std::string("subsystem not present: ") + to_string(keep[i]));
        if (std::find(keep.begin(), keep.begin() + i, keep[i]) != keep.begin() + i) {
            fail(ErrorCode::BadSubsystem, "subsystem listed twice");
        }
        s.keep_pos.push_back(static_cast<int>(it - have.begin()));
    }
    for (int i = 0; i < static_cast<int>(have.size()); ++i)
        if (std::find(s.keep_pos.begin(), s.keep_pos.end(), i) == s.keep_pos.end()) s.trace_pos.push_back(i);
    return s;
}

// Full-space index from per-subsystem digits.
struct IndexMap {
    std::vector<int> full_stride;
    std::vector<int> dims;

    // Offsets into the full index for every multi-index over `positions`.
    std::vector<int> offsets(const std::vector<int>& positions) const {
        std::vector<int> out{0};
        for (int p : positions) {
            std::vector<int> next;
            next.reserve(out.size() * dims[p]);
            for (int base : out)
                for (int k = 0; k < dims[p]; ++k) next.push_back(base + k * full_stride[p]);
            out = std::move(next);
        }
        return out;
    }
};

void system_layout(const SystemState& state, std::vector<Subsystem>& subs, std::vector<int>& dims) {
    subs = {Subsystem::mode1, Subsystem::mode2};
    dims = {state.dim1(), state.dim2()};
    if (state.has_atom()) {
        subs.push_back(Subsystem::atom);
        dims.push_back(2);
    }
}

Eigen::VectorXd spectrum(const DensityMatrix& rho) {
    ComplexMatrix h = 0.5 * (rho.rho + rho.rho.adjoint());
    return Eigen::SelfAdjointEigenSolver<ComplexMatrix>(h, Eigen::EigenvaluesOnly).eigenvalues();
}

// Coherent-state bra coefficients conj(c_n(alpha)) for n < dim, no truncation check.
ComplexVector coherent_coefficients(Complex alpha, int dim) {
    ComplexVector c(dim);
    c(0) = std::exp(-0.5 * std::norm(alpha));
    for (int n = 1; n < dim; ++n) c(n) = c(n - 1) * alpha / std::sqrt(double(n));
    return c;
}

void check_grid(const AxisSpec& re, const AxisSpec& im, double mean_n) {
    if (re.count < 2 || im.count < 2 || !(re.max > re.min) || !(im.max > im.min)) {
        fail(ErrorCode::GridTooSmall, "grid needs at least 2 points per axis and positive extent");
    }
    const double reach = std::min({std::abs(re.min), std::abs(re.max), std::abs(im.min), std::abs(im.max)});
    if (reach < 1.5 * std::sqrt(mean_n)) fail(ErrorCode::GridTooSmall, "grid does not cover 1.5 sqrt(<n>)");
}

}  // namespace

const char* to_string(Subsystem s) {
    switch (s) {
    case Subsystem::mode1: return "mode1";
    case Subsystem::mode2: return "mode2";
    case Subsystem::atom: return "atom";
    }
    return "?";
}

std::string DensityMatrix::label() const {
    std::string out;
    for (Subsystem s : subsystems) {
        if (!out.empty()) out += "+";
        out += to_string(s);
    }
    return out;
}

DensityMatrix density_matrix(const SystemState& state) {
    DensityMatrix d;
    system_layout(state, d.subsystems, d.dims);
    d.rho = state.amps() * state.amps().adjoint();
    return d;
}

DensityMatrix density_matrix(const FockVector& psi, Subsystem as) {
    ComplexVector v = psi.amps() / psi.norm();
    return {v * v.adjoint(), {as}, {psi.dim()}};
}

DensityMatrix partial_trace(const SystemState& state, std::initializer_list<Subsystem> keep) {
    return partial_trace(state, std::vector<Subsystem>(keep));
}

DensityMatrix partial_trace(const SystemState& state, const std::vector<Subsystem>& keep) {
    std::vector<Subsystem> subs;
    std::vector<int> dims;
    system_layout(state, subs, dims);
    const Split split = split_subsystems(subs, keep);
    const IndexMap map{strides(dims), dims};
    const std::vector<int> kept = map.offsets(split.keep_pos);
    const std::vector<int> traced = map.offsets(split.trace_pos);

    // rho_K = M M^dag with M(k, t) = psi(k + t).
    ComplexMatrix m(kept.size(), traced.size());
    for (std::size_t i = 0; i < kept.size(); ++i)
        for (std::size_t j = 0; j < traced.size(); ++j) m(i, j) = state.amps()(kept[i] + traced[j]);
    DensityMatrix out;
    out.rho = m * m.adjoint();
    out.subsystems = keep;
    for (int p : split.keep_pos) out.dims.push_back(dims[p]);
    return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<Subsystem>& keep) {
    if (rho.rho.rows() != product(rho.dims)) fail(ErrorCode::DimensionMismatch, "density matrix layout mismatch");
    const Split split = split_subsystems(rho.subsystems, keep);
    const IndexMap map{strides(rho.dims), rho.dims};
    const std::vector<int> kept = map.offsets(split.keep_pos);
    const std::vector<int> traced = map.offsets(split.trace_pos);
    DensityMatrix out;
    out.rho = ComplexMatrix::Zero(kept.size(), kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i)
        for (std::size_t j = 0; j < kept.size(); ++j) {
            Complex s = 0.0;
            for (int t : traced) s += rho.rho(kept[i] + t, kept[j] + t);
            out.rho(i, j) = s;
        }
    out.subsystems = keep;
    for (int p : split.keep_pos) out.dims.push_back(rho.dims[p]);
    return out;
}

double entropy(const DensityMatrix& rho) {
    double s = 0.0;
    for (double p : spectrum(rho)) {
        if (p > 1e-14) s -= p * std::log(p);
    }
    return s;
}

double purity(const DensityMatrix& rho) {
    // tr(rho^2) = sum |rho_ij|^2 for Hermitian rho
    return rho.rho.cwiseAbs2().sum();
}

double fidelity(const FockVector& a, const FockVector& b) {
    return std::norm(inner(a, b)) / (a.amps().squaredNorm() * b.amps().squaredNorm());
}

double fidelity(const SystemState& a, const SystemState& b) { return std::norm(inner(a, b)); }

double fidelity(const DensityMatrix& rho, const FockVector& psi) {
    if (rho.rho.rows() != psi.dim()) fail(ErrorCode::DimensionMismatch, "density matrix and vector dims differ");
    const ComplexVector v = psi.amps() / psi.norm();
    return std::real(v.dot(rho.rho * v));
}

double field_fidelity(const SystemState& with_atom, const SystemState& field_target) {
    if (!with_atom.has_atom() || field_target.has_atom()) {
        fail(ErrorCode::DimensionMismatch, "expects a state with atom and a field-only target");
    }
    if (with_atom.dim1() != field_target.dim1() || with_atom.dim2() != field_target.dim2()) {
        fail(ErrorCode::DimensionMismatch, "field dims differ");
    }
    if (with_atom.basis() != field_target.basis()) fail(ErrorCode::BasisMismatch, "states in different bases");
    Complex c[2] = {0.0, 0.0};
    const ComplexVector& psi = with_atom.amps();
    const ComplexVector& f = field_target.amps();
    for (Eigen::Index k = 0; k < f.size(); ++k) {
        const Complex fc = std::conj(f(k));
        c[0] += fc * psi(2 * k);
        c[1] += fc * psi(2 * k + 1);
    }
    return std::norm(c[0]) + std::norm(c[1]);
}

double atomic_inversion(const SystemState& state) {
    if (!state.has_atom()) fail(ErrorCode::DimensionMismatch, "state has no atom");
    const ComplexVector& psi = state.amps();
    double e = 0.0, g = 0.0;
    for (Eigen::Index k = 0; k < psi.size(); k += 2) {
        g += std::norm(psi(k));
        e += std::norm(psi(k + 1));
    }
    return (e - g) / (e + g);
}

double PhaseSpaceGrid::integral() const { return values.sum() * re.step() * im.step(); }

std::vector<Complex> PhaseSpaceGrid::local_maxima(double min_fraction) const {
    std::vector<Complex> peaks;
    const double floor = min_fraction * values.maxCoeff();
    for (int r = 1; r + 1 < values.rows(); ++r)
        for (int c = 1; c + 1 < values.cols(); ++c) {
            const double v = values(r, c);
            if (v <= floor) continue;
            bool top = true;
            for (int dr = -1; dr <= 1 && top; ++dr)
                for (int dc = -1; dc <= 1; ++dc)
                    if ((dr || dc) && values(r + dr, c + dc) >= v) {
                        top = false;
                        break;
                    }
            if (top) peaks.emplace_back(re.at(c), im.at(r));
        }
    return peaks;
}

std::pair<AxisSpec, AxisSpec> default_grid(double mu_magnitude, int count) {
    const double half = 1.5 * (std::abs(mu_magnitude) + 2.0);
    return {AxisSpec{-half, half, count}, AxisSpec{-half, half, count}};
}

PhaseSpaceGrid husimi_q(const DensityMatrix& rho, const AxisSpec& re, const AxisSpec& im) {
    if (rho.subsystems.size() != 1 || rho.subsystems[0] == Subsystem::atom) {
        fail(ErrorCode::BadSubsystem, "Husimi Q needs a single-mode density matrix");
    }
    const int dim = static_cast<int>(rho.rho.rows());
    double mean_n = 0.0;
    for (int n = 0; n < dim; ++n) mean_n += n * rho.rho(n, n).real();
    check_grid(re, im, mean_n);
    PhaseSpaceGrid grid{re, im, RealMatrix(im.count, re.count)};
    for (int r = 0; r < im.count; ++r)
        for (int c = 0; c < re.count; ++c) {
            const ComplexVector v = coherent_coefficients(Complex(re.at(c), im.at(r)), dim);
            grid.values(r, c) = std::real(v.dot(rho.rho * v)) / kPi;
        }
    return grid;
}

PhaseSpaceGrid husimi_q(const FockVector& psi, const AxisSpec& re, const AxisSpec& im) {
    const ComplexVector v = psi.amps() / psi.norm();
    check_grid(re, im, psi.mean_photon_number());
    PhaseSpaceGrid grid{re, im, RealMatrix(im.count, re.count)};
    for (int r = 0; r < im.count; ++r)
        for (int c = 0; c < re.count; ++c) {
            const ComplexVector a = coherent_coefficients(Complex(re.at(c), im.at(r)), psi.dim());
            grid.values(r, c) = std::norm(a.dot(v)) / kPi;
        }
    return grid;
}

}  // namespace ecsim
