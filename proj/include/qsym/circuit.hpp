// Probabilistic generalized symmetrizer: Hadamard - phase - controlled-SWAP -
// Hadamard on a control qubit, measurement of the control, branch states,
// probabilities and concurrences.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>

#include "qsym/states.hpp"

namespace qsym {

struct BranchOutcome {
    int control_bit = 0;
    double probability = 0.0;
    std::optional<PureState> post_state; // absent for a zero-norm branch
    double concurrence = 0.0;            // Wootters (qubits) / I-concurrence (qudits)
};

// Gate-route circuit output on A (x) B (x) control, control last.
PureState symmetrizer_circuit_state(const PureState& psi, const PureState& phi, double theta);

// The same state from the closed form
//   (e^{-i theta/2}|phi psi> + e^{+i theta/2}|psi phi>)/2 (x) |0>
// + (e^{+i theta/2}|psi phi> - e^{-i theta/2}|phi psi>)/2 (x) |1>.
PureState symmetrizer_closed_form(const PureState& psi, const PureState& phi, double theta);

// (|psi phi><psi phi| + |phi psi><phi psi|)/2: the state of A,B before the
// control is measured; independent of theta, separable.
DensityMatrix premeasure_density(const PureState& psi, const PureState& phi, double theta);

// Projective measurement of the last (control) qubit.
std::array<BranchOutcome, 2> measure_control(const PureState& circuit_state);

// C_pm = (2/N_pm^2) |<phi|psi_tilde><psi|phi_tilde>| with
// N_pm^2 = 2 (1 pm cos(theta) |<psi|phi>|^2); qubits only.
std::pair<double, double> branch_concurrences(const PureState& psi, const PureState& phi,
                                              double theta);

// P+ C+ + P- C-; equals |<phi|psi_tilde><psi|phi_tilde>| for every theta
double average_concurrence(const PureState& psi, const PureState& phi, double theta);

// Shot-style control measurements; returns counts of outcome 0 and 1.
std::array<std::uint64_t, 2> sample_control_shots(const PureState& psi, const PureState& phi,
                                                  double theta, std::uint64_t shots,
                                                  std::uint64_t seed);

} // namespace qsym
