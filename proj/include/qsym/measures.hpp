// Entanglement quantities: Wootters concurrence for mixed and pure two-qubit
// states, the Bloch-angle closed form, I-concurrence from subsystem purity,
// the minimum partial-transpose eigenvalue, and the symmetric-state overlap.

#pragma once

#include <array>

#include "qsym/states.hpp"

namespace qsym {

struct ConcurrenceReport {
    std::array<double, 4> lambdas{}; // descending
    double concurrence = 0.0;        // max(0, l1 - l2 - l3 - l4)
};

// Spectrum of sqrt(sqrt(rho) rho_tilde sqrt(rho)); the Hermitian route, never
// a non-Hermitian eigensolve of rho*rho_tilde.
ConcurrenceReport concurrence_mixed(const DensityMatrix& rho);

// |<Psi|Psi_tilde>| for a two-qubit pure state
double concurrence_pure(const PureState& psi);

// (1 - cos t cos t' - sin t sin t' cos(p - p')) / 2
double concurrence_bloch(const BlochDirection& n, const BlochDirection& m);

// sqrt(2 (1 - tr rho_side^2)) for a bipartite pure state
double i_concurrence(const PureState& psi, std::size_t side);

// minimum eigenvalue of the partial transpose over the first subsystem;
// >= -1e-12 certifies PPT
double ppt_min_eigenvalue(const DensityMatrix& rho);

// |<Psi_out|Psi_sym>|^2 where Psi_out = (|psi phi> + i |phi psi>)/sqrt(2) and
// Psi_sym is the normalized symmetric combination; equals (1+|<psi|phi>|^2)/2
double overlap_with_symmetric(const PureState& psi, const PureState& phi);

} // namespace qsym
