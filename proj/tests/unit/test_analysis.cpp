#include <doctest.h>

#include <cmath>
#include <random>

#include "ecsim/analysis.hpp"
#include "ecsim/errors.hpp"
#include "ecsim/protocols.hpp"
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

SystemState random_state(int d1, int d2, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> n(0.0, 1.0);
    ComplexVector v(d1 * d2 * 2);
    for (auto& x : v) x = Complex(n(rng), n(rng));
    return SystemState::normalized(v, SystemSpace{d1, d2, 2}, ModeBasis::physical);
}

}  // namespace

TEST_CASE("partial trace agrees with brute-force reduction") {
    const SystemState s = random_state(4, 3, 7);
    const std::vector<int> dims{4, 3, 2};
    CHECK((partial_trace(s, {Subsystem::mode1}).rho - oracle::reduce(s.amps(), dims, 0)).norm() < 1e-13);
    CHECK((partial_trace(s, {Subsystem::mode2}).rho - oracle::reduce(s.amps(), dims, 1)).norm() < 1e-13);
    CHECK((partial_trace(s, {Subsystem::atom}).rho - oracle::reduce(s.amps(), dims, 2)).norm() < 1e-13);

    const DensityMatrix field = partial_trace(s, {Subsystem::mode1, Subsystem::mode2});
    CHECK(field.dims == std::vector<int>{4, 3});
    CHECK(std::abs(field.rho.trace() - 1.0) < 1e-13);
    const DensityMatrix m2 = partial_trace(field, {Subsystem::mode2});
    CHECK((m2.rho - oracle::reduce(s.amps(), dims, 1)).norm() < 1e-13);
    CHECK(m2.label() == "mode2");

    CHECK(throws_code(ErrorCode::BadSubsystem, [&] { partial_trace(s, std::vector<Subsystem>{}); }));
    CHECK(throws_code(ErrorCode::BadSubsystem, [&] { partial_trace(s, {Subsystem::atom, Subsystem::atom}); }));
    CHECK(throws_code(ErrorCode::BadSubsystem, [&] { partial_trace(field, {Subsystem::atom}); }));
}

TEST_CASE("purity and entropy") {
    const SystemState s = SystemState::product(coherent_state(0.5, 12), coherent_state(0.2, 8), 0.6, 0.8,
                                               ModeBasis::physical);
    CHECK(purity(partial_trace(s, {Subsystem::atom})) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(entropy(partial_trace(s, {Subsystem::mode1})) < 1e-10);

    ComplexVector bell = ComplexVector::Zero(2 * 1 * 2);
    bell(SystemSpace{2, 1, 2}.index(0, 0, 1)) = 1.0 / std::sqrt(2.0);
    bell(SystemSpace{2, 1, 2}.index(1, 0, 0)) = 1.0 / std::sqrt(2.0);
    const SystemState b(bell, SystemSpace{2, 1, 2}, ModeBasis::physical);
    const DensityMatrix atom = partial_trace(b, {Subsystem::atom});
    CHECK(purity(atom) == doctest::Approx(0.5));
    CHECK(entropy(atom) == doctest::Approx(std::log(2.0)));
}

TEST_CASE("Schmidt symmetry and local-unitary invariance") {
    const SystemState s = random_state(3, 4, 11);
    const double e_atom = entropy(partial_trace(s, {Subsystem::atom}));
    const double e_field = entropy(partial_trace(s, {Subsystem::mode1, Subsystem::mode2}));
    CHECK(e_atom == doctest::Approx(e_field).epsilon(1e-10));
    CHECK(purity(partial_trace(s, {Subsystem::atom})) ==
          doctest::Approx(purity(partial_trace(s, {Subsystem::mode1, Subsystem::mode2}))).epsilon(1e-10));

    // random atomic unitary leaves the field reduction unchanged
    oracle::Mat h(2, 2);
    h << 0.3, Complex(0.2, -0.5), Complex(0.2, 0.5), -0.7;
    const oracle::Mat u = oracle::kron(oracle::eye(12), oracle::propagator(h, 1.3));
    const SystemState rotated(u * s.amps(), s.space(), ModeBasis::physical);
    const DensityMatrix f0 = partial_trace(s, {Subsystem::mode1, Subsystem::mode2});
    const DensityMatrix f1 = partial_trace(rotated, {Subsystem::mode1, Subsystem::mode2});
    CHECK((f0.rho - f1.rho).norm() < 1e-12);
    CHECK(entropy(partial_trace(rotated, {Subsystem::atom})) == doctest::Approx(e_atom).epsilon(1e-10));
}

TEST_CASE("fidelity") {
    const FockVector a = coherent_state(0.8, 20), b = coherent_state(Complex(0.1, 0.5), 20);
    CHECK(fidelity(a, a) == doctest::Approx(1.0).epsilon(1e-14));
    const double f_ab = std::norm(coherent_overlap(0.8, Complex(0.1, 0.5)));
    CHECK(fidelity(a, b) == doctest::Approx(f_ab).epsilon(1e-10));
    CHECK(fidelity(density_matrix(a), b) == doctest::Approx(fidelity(a, b)).epsilon(1e-12));

    const SystemState s = SystemState::product(a, b, 0.6, Complex(0.0, 0.8), ModeBasis::physical);
    const SystemState target = SystemState::field_product(a, b, ModeBasis::physical);
    CHECK(field_fidelity(s, target) == doctest::Approx(1.0).epsilon(1e-12));
    const SystemState other = SystemState::field_product(b, a, ModeBasis::physical);
    CHECK(field_fidelity(s, other) == doctest::Approx(fidelity(a, b) * fidelity(a, b)).epsilon(1e-10));
    CHECK(throws_code(ErrorCode::BasisMismatch, [&] {
        field_fidelity(s, SystemState::field_product(a, b, ModeBasis::quasi));
    }));
    CHECK(throws_code(ErrorCode::DimensionMismatch, [&] {
        field_fidelity(s, SystemState::field_product(coherent_state(0.8, 21), b, ModeBasis::physical));
    }));
}

TEST_CASE("atomic inversion") {
    const FockVector v = FockVector::number_state(0, 2);
    CHECK(atomic_inversion(SystemState::product(v, v, 1.0, 0.0, ModeBasis::quasi)) == doctest::Approx(-1.0));
    CHECK(atomic_inversion(SystemState::product(v, v, 0.0, 1.0, ModeBasis::quasi)) == doctest::Approx(1.0));
    CHECK(atomic_inversion(SystemState::product(v, v, 0.6, 0.8, ModeBasis::quasi)) == doctest::Approx(0.28));
}

TEST_CASE("Husimi Q of the vacuum and a coherent state") {
    const AxisSpec ax{-4.0, 4.0, 81};
    const PhaseSpaceGrid vac = husimi_q(FockVector::number_state(0, 10), ax, ax);
    CHECK(vac.values(40, 40) == doctest::Approx(1.0 / oracle::pi).epsilon(1e-12));
    CHECK(vac.values(40, 50) == doctest::Approx(std::exp(-1.0) / oracle::pi).epsilon(1e-12));
    CHECK(vac.integral() == doctest::Approx(1.0).epsilon(1e-3));

    const Complex mu(1.5, -1.0);
    const auto [re, im] = default_grid(std::abs(mu), 121);
    const PhaseSpaceGrid q = husimi_q(coherent_state(mu, 40), re, im);
    const std::vector<Complex> peaks = q.local_maxima();
    REQUIRE(peaks.size() == 1);
    CHECK(std::abs(peaks[0] - mu) < re.step());
    CHECK(q.integral() == doctest::Approx(1.0).epsilon(0.02));
    // rows follow im
    const int row = static_cast<int>(std::lround((-1.0 - im.min) / im.step()));
    const int col = static_cast<int>(std::lround((1.5 - re.min) / re.step()));
    const Complex at(re.at(col), im.at(row));
    CHECK(q.values(row, col) == doctest::Approx(std::exp(-std::norm(at - mu)) / oracle::pi).epsilon(1e-9));
}

TEST_CASE("Husimi Q of a cat has two lobes") {
    const Complex mu(3.0, 0.0);
    const FockVector cat = cat_target(mu, 9.0, CatConvention::minus, coherent_dim(3.0));
    const auto [re, im] = default_grid(3.0);
    const PhaseSpaceGrid q = husimi_q(density_matrix(cat), re, im);
    const std::vector<Complex> peaks = q.local_maxima();
    REQUIRE(peaks.size() == 2);
    bool up = false, down = false;
    for (Complex p : peaks) {
        up = up || std::abs(p - Complex(0, 3)) < 0.2;
        down = down || std::abs(p - Complex(0, -3)) < 0.2;
    }
    CHECK(up);
    CHECK(down);
    CHECK(q.integral() == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("Husimi guards") {
    const FockVector c = coherent_state(3.0, 40);
    CHECK(throws_code(ErrorCode::GridTooSmall, [&] { husimi_q(c, AxisSpec{-1, 1, 21}, AxisSpec{-1, 1, 21}); }));
    CHECK(throws_code(ErrorCode::GridTooSmall, [&] { husimi_q(c, AxisSpec{-9, 9, 1}, AxisSpec{-9, 9, 21}); }));
    const SystemState s = SystemState::product(c, c, 1.0, 0.0, ModeBasis::physical);
    CHECK(throws_code(ErrorCode::BadSubsystem, [&] {
        husimi_q(partial_trace(s, {Subsystem::mode1, Subsystem::mode2}), AxisSpec{-9, 9, 21}, AxisSpec{-9, 9, 21});
    }));
}
