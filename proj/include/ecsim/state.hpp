#pragma once

#include "ecsim/fock.hpp"
#include "ecsim/modemap.hpp"
#include "ecsim/types.hpp"

namespace ecsim {

// Atom slot ordering: index 0 = |->, index 1 = |+>.
inline constexpr int kGround = 0;
inline constexpr int kExcited = 1;

/// Layout of mode1 (x) mode2 (x) atom. atom_dim is 2, or 1 for a field-only state.
struct SystemSpace {
    int dim1 = 0;
    int dim2 = 0;
    int atom_dim = 2;

    int size() const { return dim1 * dim2 * atom_dim; }
    int index(int n, int m, int s = 0) const { return (n * dim2 + m) * atom_dim + s; }
    bool operator==(const SystemSpace&) const = default;
};

/// Normalized amplitude tensor tagged with the mode basis it is expressed in.
class SystemState {
public:
    // Throws NormViolation unless |amps| = 1 within 1e-10.
    SystemState(ComplexVector amps, SystemSpace space, ModeBasis basis);

    static SystemState normalized(ComplexVector amps, SystemSpace space, ModeBasis basis);

    // |m1> |m2> (gamma |-> + delta |+>)
    static SystemState product(const FockVector& m1, const FockVector& m2, Complex gamma, Complex delta,
                               ModeBasis basis);
    static SystemState field_product(const FockVector& m1, const FockVector& m2, ModeBasis basis);

    const ComplexVector& amps() const { return amps_; }
    const SystemSpace& space() const { return space_; }
    ModeBasis basis() const { return basis_; }
    int dim1() const { return space_.dim1; }
    int dim2() const { return space_.dim2; }
    bool has_atom() const { return space_.atom_dim == 2; }

    Complex at(int n, int m, int s = 0) const { return amps_(space_.index(n, m, s)); }

private:
    ComplexVector amps_;
    SystemSpace space_;
    ModeBasis basis_;
};

// <a|b>; throws DimensionMismatch on layout mismatch and BasisMismatch on differing tags.
Complex inner(const SystemState& a, const SystemState& b);

SystemState to_quasi(const SystemState& state, const BeamSplitter& rotation);
SystemState to_physical(const SystemState& state, const BeamSplitter& rotation);

}  // namespace ecsim
