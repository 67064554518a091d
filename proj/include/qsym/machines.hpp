// The entangling machine: two internal machine states with Gram data
// <X|X> = (1+xi)/2, <Y|Y> = (1-xi)/2, <X|Y> = i eta, its closed-form output
// density matrix, spectrum and concurrence, and the input-independent
// optimal entangler U = (I + iP)/sqrt(2).

#pragma once

#include <array>

#include "qsym/measures.hpp"
#include "qsym/states.hpp"

namespace qsym {

struct MachineParams {
    double xi = 0.0;
    double eta = 0.0;
};

// Cauchy-Schwarz bound |eta| <= sqrt(1 - xi^2)/2 (with 1e-12 slack) and
// |xi| <= 1; throws std::domain_error otherwise.
void validate(const MachineParams& p);

struct MachineRealization {
    Vec x; // |X>, 2 entries
    Vec y; // |Y>
};

// Minimal 2-dimensional machine register reproducing the Gram data.
MachineRealization realize_machine_states(const MachineParams& p);

// Full post-interaction state on A (x) B (x) M for input a|0> + b|1> and
// reference |0>: the column (a(X+Y), bY, bX, 0).
PureState machine_full_output(const PureState& psi, const MachineParams& p);

// Closed-form rho_AB after tracing out the machine.
DensityMatrix machine_rho(const PureState& psi, const MachineParams& p);

// Closed-form (sigma_2 (x) sigma_2) rho* (sigma_2 (x) sigma_2).
Mat machine_rho_tilde(const PureState& psi, const MachineParams& p);

// Closed-form product rho * rho_tilde (test fixture; not on the numeric path).
Mat machine_rho_rhotilde(const PureState& psi, const MachineParams& p);

// (|b|^2 (sqrt(1-xi^2)/2 + |eta|), |b|^2 (sqrt(1-xi^2)/2 - |eta|), 0, 0)
std::array<double, 4> machine_lambdas(const MachineParams& p, Cx b);

// 2 |b|^2 |eta|
double machine_concurrence(const MachineParams& p, Cx b);

// (I + iP)/sqrt(2) on C^d (x) C^d, P the permutation operator
Mat optimal_entangler(std::size_t d);

// (|psi phi> + i |phi psi>)/sqrt(2); normalized for any inputs
PureState entangle(const PureState& psi, const PureState& phi);

// (|psi><psi| + |phi><phi|)/2, the reduced state of entangle() on either side
DensityMatrix reduced_out(const PureState& psi, const PureState& phi);

} // namespace qsym
