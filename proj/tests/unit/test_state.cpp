#include <doctest.h>

#include "ecsim/errors.hpp"
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

}  // namespace

TEST_CASE("layout and product states") {
    const SystemSpace sp{3, 4, 2};
    CHECK(sp.size() == 24);
    CHECK(sp.index(2, 1, kExcited) == (2 * 4 + 1) * 2 + 1);
    const Complex g(0.6, 0.0), d(0.0, 0.8);
    const SystemState s = SystemState::product(coherent_state(0.5, 10), coherent_state(Complex(0, 0.3), 8), g, d,
                                               ModeBasis::physical);
    CHECK(s.has_atom());
    CHECK(std::abs(s.amps().norm() - 1.0) < 1e-12);
    const ComplexVector ref = oracle::kron(oracle::kron(oracle::normalized(oracle::coherent(0.5, 10)),
                                                        oracle::normalized(oracle::coherent(Complex(0, 0.3), 8))),
                                           (ComplexVector(2) << g, d).finished());
    CHECK((s.amps() - ref).norm() < 1e-12);
    const SystemState f = SystemState::field_product(coherent_state(0.3, 8), coherent_state(0.1, 6), ModeBasis::quasi);
    CHECK_FALSE(f.has_atom());
    CHECK(f.space().size() == 48);
}

TEST_CASE("state validation") {
    const SystemSpace sp{2, 2, 2};
    CHECK(throws_code(ErrorCode::NormViolation, [&] { SystemState(ComplexVector::Ones(8), sp, ModeBasis::physical); }));
    CHECK(throws_code(ErrorCode::DimensionMismatch, [&] { SystemState(ComplexVector::Zero(7), sp, ModeBasis::physical); }));
    CHECK(throws_code(ErrorCode::NormViolation, [&] {
        SystemState::product(coherent_state(0, 2), coherent_state(0, 2), 1.0, 1.0, ModeBasis::physical);
    }));
    const SystemState a = SystemState::normalized(ComplexVector::Ones(8), sp, ModeBasis::physical);
    const SystemState b = SystemState::normalized(ComplexVector::Ones(8), sp, ModeBasis::quasi);
    CHECK(std::abs(inner(a, a) - 1.0) < 1e-15);
    CHECK(throws_code(ErrorCode::BasisMismatch, [&] { inner(a, b); }));
    CHECK(throws_code(ErrorCode::BasisMismatch, [&] { to_physical(a, BeamSplitter(0.2, 2, 2)); }));
    CHECK(throws_code(ErrorCode::DimensionMismatch, [&] { to_quasi(a, BeamSplitter(0.2, 3, 2)); }));
}

TEST_CASE("to_quasi and to_physical are inverse") {
    const SystemSpace sp{5, 5, 2};
    ComplexVector v(sp.size());
    for (int k = 0; k < sp.size(); ++k) v(k) = Complex(std::sin(1.3 * k), std::cos(0.7 * k));
    const SystemState s = SystemState::normalized(v, sp, ModeBasis::physical);
    const BeamSplitter r(0.4, 5, 5);
    const SystemState q = to_quasi(s, r);
    CHECK(q.basis() == ModeBasis::quasi);
    CHECK((to_physical(q, r).amps() - s.amps()).norm() < 1e-13);
    const ComplexMatrix rd = oracle::kron(r.dense(), oracle::eye(2));
    CHECK((q.amps() - rd * s.amps()).norm() < 1e-13);
}
