#pragma once

#include <vector>

#include "ecsim/types.hpp"

namespace ecsim {

enum class ModeBasis { physical, quasi };

const char* to_string(ModeBasis basis);

/// Orthogonal map (a, b) -> (A, B) = (cos a + sin b, -sin a + cos b) with cos(theta) = g1/g.
struct ModeRotation {
    double theta = 0.0;
    double g = 0.0;
    double g1 = 0.0;
    double g2 = 0.0;
};

ModeRotation rotation_params(double g1, double g2);

/// Coherent amplitudes of a two-mode product state, (alpha, beta) or (mu, nu).
struct AmplitudePair {
    Complex first;
    Complex second;
    ModeBasis basis = ModeBasis::physical;
};

enum class Direction { forward, inverse };

// forward: physical (alpha, beta) -> quasi (mu, nu); inverse applies the transpose.
AmplitudePair rotate_amplitudes(const ModeRotation& rot, const AmplitudePair& pair, Direction direction);

// Rotate to the quasi basis, multiply mu by a unit scalar, rotate back.
AmplitudePair quasi_phase_amplitudes(const ModeRotation& rot, Complex phase_on_first,
                                     const AmplitudePair& pair);

/// Passive two-mode unitary R = exp(theta (a^dag b - a b^dag)) on a (dim1 x dim2) number grid.
///
/// R conserves n + m, so it is stored as one dense block per total photon number. Blocks with
/// n + m < min(dim1, dim2) are complete and exact; higher blocks are the exponential of the
/// truncated generator (still unitary, but not the untruncated operator). With this sign,
/// R^dag a R = cos a + sin b and R |alpha>|beta> = |mu>|nu>, i.e. R maps physical-basis
/// coefficients to quasi-basis coefficients.
class BeamSplitter {
public:
    BeamSplitter(double theta, int dim1, int dim2);

    int dim1() const { return dim1_; }
    int dim2() const { return dim2_; }
    double theta() const { return theta_; }
    // Largest total photon number whose block is complete.
    int trusted_photon_number() const;

    // Acts on the field index (n * dim2 + m) of a vector that carries `inner` trailing
    // components per field index (inner = 2 for an attached atom).
    ComplexVector apply(const ComplexVector& v, int inner = 1, bool adjoint = false) const;

    ComplexMatrix dense() const;

private:
    struct Block {
        std::vector<int> field_index;
        ComplexMatrix u;
    };
    double theta_;
    int dim1_;
    int dim2_;
    std::vector<Block> blocks_;
};

// Dense R on the dim1*dim2 field space, index n * dim2 + m.
ComplexMatrix mode_rotation_unitary(const ModeRotation& rot, int dim1, int dim2);

struct SqueezeComposition {
    Complex p;           // sin(2 theta) (z2 - z1) / 2
    Complex q;           // z1 cos^2 theta + z2 sin^2 theta
    Complex q_mode_two;  // z1 sin^2 theta + z2 cos^2 theta
};

SqueezeComposition squeeze_composition(const ModeRotation& rot, Complex z1, Complex z2);

// product:  exp(p* A B - p A^dag B^dag) S_I(q) S_II(q), the factorized form.
// exponent: exp(p* A B - p A^dag B^dag + (q* A^2 - q A^dag^2)/2 + (q2* B^2 - q2 B^dag^2)/2).
enum class SqueezeForm { product, exponent };

inline constexpr int kSqueezeCheckTotal = 6;

/// max over inputs |n, m> with n + m <= n_check of || S_1(z1) S_2(z2)|n,m> - RHS |n,m> ||,
/// with RHS built from squeeze_composition and quasi-mode operators A = R^dag a R, B = R^dag b R.
/// The norm runs over output entries with n + m < dim, where R is exact. At dim 60 and |z| <= 0.5
/// inputs up to kSqueezeCheckTotal stay below 1e-6; larger inputs see the squeeze truncation.
double squeeze_identity_residual(const ModeRotation& rot, Complex z1, Complex z2, int dim, int n_check,
                                 SqueezeForm form);

struct DecoupleParams {
    double eta = 0.0;
    double lambda_mode = 0.0;
    double zeta_mode = 0.0;
};

/// Rotation by eta that diagonalizes the dispersive quadratic form
/// [[g1^2/D1, g1 g2 (D1+D2)/(2 D1 D2)], [., g2^2/D2]]; lambda/zeta are its eigenvalues.
DecoupleParams decouple_params(double g1, double g2, double delta1, double delta2);

}  // namespace ecsim
