#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "trimwave/hamiltonian.hpp"

namespace trimwave {

/// Mode labels: l[nu] in 1..p[nu]-1 for the confined sine factors,
/// m[nu] in 0..side-1 for the free-direction torus momenta.
struct ModeIndex {
    std::vector<int> l;
    std::vector<int> m;
};

struct ExtendedState {
    ModeIndex mode;
    double energy = 0.0;      // e_L + 2 sum_nu cos(2 pi m[nu] / side[nu])
    Eigen::VectorXcd values;  // per box site, sup norm <= 1
};

/// One confined sine factor product: prod_nu sin(pi l[nu] x[nu] / p[nu]).
/// Zeros at x[nu] in p[nu] Z are exact (integer argument reduction).
double phi_L(const SiteCoord& x_confined, const std::vector<int>& confined_periods,
             const std::vector<int>& l);

/// Phi_L tensor a free-direction plane wave on the box. Requires periodic bc
/// everywhere, an even confined span (override with allow_odd_span; such
/// states are not exact eigenfunctions in general), and a single-layer trim.
ExtendedState build_extended_state(const LatticeBox& box, const TrimMask& mask, const ModeIndex& mode,
                                   bool allow_odd_span = false);

/// Sup-norm eigen-equation defect |H psi - E psi|_inf.
double residual(const SymOperator& h, const ExtendedState& state);

struct SubspaceReport {
    double max_off_residual = 0.0;  // worst l2 off-subspace component of H psi
    int basis_size = 0;
};

/// Verifies H maps span{Psi_{L,m} : all m} into itself for fixed L.
SubspaceReport invariant_subspace_check(const SymOperator& h, const LatticeBox& box, const TrimMask& mask,
                                        const std::vector<int>& l, bool allow_odd_span = false);

}  // namespace trimwave
