#include <doctest.h>

#include <array>
#include <cmath>

#include "ecsim/errors.hpp"
#include "ecsim/fock.hpp"
#include "ecsim/modemap.hpp"
#include "ecsim/state.hpp"
#include "oracle.hpp"

using namespace ecsim;

namespace {

bool throws_code(ErrorCode code, auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code() == code;
    }
    return false;
}

// Field-only operators on the n * dim2 + m grid.
ComplexMatrix field_a(int d1, int d2) { return oracle::kron(oracle::annihilation(d1), oracle::eye(d2)); }
ComplexMatrix field_b(int d1, int d2) { return oracle::kron(oracle::eye(d1), oracle::annihilation(d2)); }

}  // namespace

TEST_CASE("rotation parameters") {
    const ModeRotation eq = rotation_params(1.0, 1.0);
    CHECK(eq.theta == doctest::Approx(oracle::pi / 4));
    CHECK(rotation_params(2.0, 0.0).theta == 0.0);
    const ModeRotation r = rotation_params(3.0, 4.0);
    CHECK(r.g == doctest::Approx(5.0));
    CHECK(std::cos(r.theta) == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(rotation_params(0.0, 2.0).theta == doctest::Approx(oracle::pi / 2));
    CHECK(throws_code(ErrorCode::BothCouplingsZero, [] { rotation_params(0.0, 0.0); }));
}

TEST_CASE("amplitude rotation") {
    const ModeRotation eq = rotation_params(1.0, 1.0);
    const Complex alpha(0.7, -0.2);
    AmplitudePair q = rotate_amplitudes(eq, {alpha, alpha, ModeBasis::physical}, Direction::forward);
    CHECK(std::abs(q.first - std::sqrt(2.0) * alpha) < 1e-15);
    CHECK(std::abs(q.second) < 1e-15);
    CHECK(q.basis == ModeBasis::quasi);

    const double nbar = 12.5;
    const Complex a(0.0, -std::sqrt(nbar));
    q = rotate_amplitudes(eq, {a, a, ModeBasis::physical}, Direction::forward);
    CHECK(std::abs(q.first - Complex(0.0, -std::sqrt(2 * nbar))) < 1e-14);

    const ModeRotation r = rotation_params(0.3, 1.7);
    const AmplitudePair p{Complex(1, 2), Complex(-0.5, 0.1), ModeBasis::physical};
    const AmplitudePair f = rotate_amplitudes(r, p, Direction::forward);
    const AmplitudePair back = rotate_amplitudes(r, f, Direction::inverse);
    CHECK(std::abs(back.first - p.first) < 1e-14);
    CHECK(std::abs(back.second - p.second) < 1e-14);
    CHECK(std::norm(f.first) + std::norm(f.second) == doctest::Approx(std::norm(p.first) + std::norm(p.second)).epsilon(1e-15));

    const AmplitudePair id = rotate_amplitudes(rotation_params(1.0, 0.0), p, Direction::forward);
    CHECK(id.first == p.first);
    CHECK(id.second == p.second);

    CHECK(throws_code(ErrorCode::BasisMismatch, [&] { rotate_amplitudes(r, f, Direction::forward); }));
    CHECK(throws_code(ErrorCode::BasisMismatch, [&] { rotate_amplitudes(r, p, Direction::inverse); }));
}

TEST_CASE("beam splitter generator sign, dim 4") {
    const double theta = 0.37;
    const int d = 4;
    const ComplexMatrix a = field_a(d, d), b = field_b(d, d);
    const ComplexMatrix ref = oracle::expm(theta * (a.adjoint() * b - a * b.adjoint()));
    const ComplexMatrix r = BeamSplitter(theta, d, d).dense();
    CHECK((r - ref).norm() < 1e-13);
    // one photon in mode 1 goes to cos|1,0> - sin|0,1>, a superposition fixed by the sign choice
    ComplexVector e = ComplexVector::Zero(d * d);
    e(1 * d + 0) = 1.0;
    const ComplexVector out = r * e;
    CHECK(std::abs(out(1 * d + 0) - std::cos(theta)) < 1e-14);
    CHECK(std::abs(out(0 * d + 1) + std::sin(theta)) < 1e-14);
}

TEST_CASE("beam splitter conjugates a into the quasi mode") {
    for (double theta : {0.0, oracle::pi / 6, oracle::pi / 4, 1.2}) {
        const int d1 = 9, d2 = 7;
        const BeamSplitter bs(theta, d1, d2);
        const ComplexMatrix r = bs.dense();
        const ComplexMatrix a = field_a(d1, d2), b = field_b(d1, d2);
        const ComplexMatrix lhs = r.adjoint() * a * r;
        const ComplexMatrix rhs = std::cos(theta) * a + std::sin(theta) * b;
        // columns with n + m within the complete blocks
        double worst = 0.0;
        for (int n = 0; n < d1; ++n)
            for (int m = 0; m < d2; ++m)
                if (n + m <= bs.trusted_photon_number()) worst = std::max(worst, (lhs.col(n * d2 + m) - rhs.col(n * d2 + m)).norm());
        CHECK(worst < 1e-8);
        CHECK((r.adjoint() * r - ComplexMatrix::Identity(d1 * d2, d1 * d2)).norm() < 1e-12);
        const ComplexMatrix num = a.adjoint() * a + b.adjoint() * b;
        CHECK((r.adjoint() * num * r - num).norm() < 1e-9);
    }
    CHECK((BeamSplitter(0.0, 5, 5).dense() - ComplexMatrix::Identity(25, 25)).norm() < 1e-15);
    CHECK((mode_rotation_unitary(rotation_params(1.0, 2.0), 4, 4) - BeamSplitter(std::atan2(2.0, 1.0), 4, 4).dense()).norm() == 0.0);
    CHECK(throws_code(ErrorCode::DimTooSmall, [] { BeamSplitter(0.1, 1, 4); }));
}

TEST_CASE("coherent products map to rotated coherent products") {
    const int d = 40;
    for (double theta : {0.0, 0.3, oracle::pi / 4, 1.0, oracle::pi / 2}) {
        const BeamSplitter bs(theta, d, d);
        const ModeRotation rot{theta, 1.0, std::cos(theta), std::sin(theta)};
        for (Complex alpha : {Complex(0.0), Complex(1.5, 0.5), Complex(-2.0, 0.0)})
            for (Complex beta : {Complex(0.3, -1.0), Complex(0.0, 2.0)}) {
                if (std::abs(alpha) > 2 || std::abs(beta) > 2) continue;
                const AmplitudePair q = rotate_amplitudes(rot, {alpha, beta, ModeBasis::physical}, Direction::forward);
                const SystemState phys = SystemState::field_product(coherent_state(alpha, d), coherent_state(beta, d),
                                                                    ModeBasis::physical);
                const SystemState quasi = SystemState::field_product(coherent_state(q.first, d),
                                                                     coherent_state(q.second, d), ModeBasis::quasi);
                CHECK(std::norm(inner(to_quasi(phys, bs), quasi)) >= 1.0 - 1e-8);
            }
    }
}

TEST_CASE("squeeze composition parameters") {
    const ModeRotation r = rotation_params(1.0, 2.0);
    const Complex z(0.3, -0.1);
    SqueezeComposition sc = squeeze_composition(r, z, z);
    CHECK(sc.p == Complex(0.0));
    CHECK(sc.q == z);
    sc = squeeze_composition(rotation_params(1.0, 0.0), 0.2, 0.45);
    CHECK(std::abs(sc.p) < 1e-16);
    CHECK(std::abs(sc.q - 0.2) < 1e-16);
    sc = squeeze_composition(rotation_params(1.0, 1.0), 0.0, 0.4);
    CHECK(std::abs(sc.p - 0.2) < 1e-15);
    CHECK(std::abs(sc.q - 0.2) < 1e-15);
    CHECK(std::abs(sc.q_mode_two - 0.2) < 1e-15);
}

TEST_CASE("squeeze identity") {
    const int d = 60, nc = kSqueezeCheckTotal;
    for (double theta : {0.0, oracle::pi / 6, oracle::pi / 4}) {
        const ModeRotation rot{theta, 1.0, std::cos(theta), std::sin(theta)};
        CHECK(squeeze_identity_residual(rot, 0.5, 0.5, d, nc, SqueezeForm::product) < 1e-6);
        const Complex z(0.2, 0.3);
        CHECK(squeeze_identity_residual(rot, z, z, d, nc, SqueezeForm::product) < 1e-6);
        CHECK(squeeze_identity_residual(rot, Complex(0.1, 0.4), -0.3, d, nc, SqueezeForm::exponent) < 1e-6);
    }
    // at theta = pi/4 the factorized form also holds for real pairs
    const ModeRotation quarter = rotation_params(1.0, 1.0);
    CHECK(squeeze_identity_residual(quarter, 0.0, 0.4, d, nc, SqueezeForm::product) < 1e-6);
    // generic unequal pair: the factorized form with a common q is not an identity
    const ModeRotation sixth{oracle::pi / 6, 1.0, std::cos(oracle::pi / 6), std::sin(oracle::pi / 6)};
    CHECK(squeeze_identity_residual(sixth, 0.1, 0.5, d, nc, SqueezeForm::product) > 1e-2);
}

TEST_CASE("quasi phase amplitudes") {
    const ModeRotation eq = rotation_params(1.0, 1.0);
    const Complex alpha(0.8, 0.1), i(0, 1);
    const AmplitudePair p{alpha, alpha, ModeBasis::physical};
    const AmplitudePair same = quasi_phase_amplitudes(eq, 1.0, p);
    CHECK(std::abs(same.first - alpha) < 1e-15);
    CHECK(std::abs(same.second - alpha) < 1e-15);
    const AmplitudePair plus = quasi_phase_amplitudes(eq, i, p);
    CHECK(std::abs(plus.first - i * alpha) < 1e-15);
    CHECK(std::abs(plus.second - i * alpha) < 1e-15);
    // phase e^{-i g^2 t'/Delta} at t' = pi Delta/g^2 is -1
    const AmplitudePair flip = quasi_phase_amplitudes(eq, std::exp(-i * oracle::pi), p);
    CHECK(std::abs(flip.first + alpha) < 1e-15);
    CHECK(std::abs(flip.second + alpha) < 1e-15);

    const ModeRotation r = rotation_params(0.4, 1.1);
    const AmplitudePair q{Complex(1.0, -0.3), Complex(0.2, 0.9), ModeBasis::physical};
    const AmplitudePair b1 = quasi_phase_amplitudes(r, i, q), b2 = quasi_phase_amplitudes(r, -i, q);
    CHECK(std::norm(b1.first) + std::norm(b1.second) == doctest::Approx(std::norm(b2.first) + std::norm(b2.second)).epsilon(1e-14));
    CHECK(throws_code(ErrorCode::NonUnitPhase, [&] { quasi_phase_amplitudes(r, 1.1, q); }));
}

TEST_CASE("decoupling parameters") {
    DecoupleParams p = decouple_params(0.3, 0.0, 20.0, 35.0);
    CHECK(p.eta == 0.0);
    CHECK(p.lambda_mode == doctest::Approx(0.09 / 20.0));
    CHECK(std::abs(p.zeta_mode) < 1e-18);

    p = decouple_params(0.5, 0.5, 40.0, 40.0);
    CHECK(p.eta == doctest::Approx(oracle::pi / 4));
    CHECK(p.lambda_mode == doctest::Approx(2 * 0.25 / 40.0));
    CHECK(std::abs(p.zeta_mode) < 1e-16);

    for (auto [g1, g2, d1, d2] : {std::array<double, 4>{0.3, 0.7, 20, 45}, {1.0, 0.2, -30, 50}, {0.6, 0.6, 25, -60}}) {
        p = decouple_params(g1, g2, d1, d2);
        Eigen::Matrix2d m;
        m << g1 * g1 / d1, g1 * g2 * (d1 + d2) / (2 * d1 * d2), g1 * g2 * (d1 + d2) / (2 * d1 * d2), g2 * g2 / d2;
        const Eigen::Vector2d ev = Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d>(m).eigenvalues();
        const double lo = std::min(p.lambda_mode, p.zeta_mode), hi = std::max(p.lambda_mode, p.zeta_mode);
        CHECK(std::abs(lo - ev(0)) < 1e-10);
        CHECK(std::abs(hi - ev(1)) < 1e-10);
    }
    CHECK(throws_code(ErrorCode::ZeroDetuning, [] { decouple_params(1, 1, 0, 3); }));
}
