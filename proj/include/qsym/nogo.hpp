// Numerical corroboration that a machine mapping |psi>|phi>|v> to
// N(|phi psi> + e^{i theta}|psi phi>)|v'> with perfect fidelity exists only
// for theta = +-pi/2: the exact unitarity-consistency residual |cos theta|,
// plus a derivative-free search over machine unitaries whose worst-case
// fidelity reaches 1 only at the allowed phases.

#pragma once

#include <cstdint>
#include <vector>

#include "qsym/states.hpp"

namespace qsym {

struct ConsistencyCheck {
    double theta = 0.0;
    double residual = 0.0; // | |1 + e^{i theta}|^2 / 2 - 1 | = |cos theta|
};

ConsistencyCheck consistency_residual(double theta);

// residual per grid point, sorted by theta
std::vector<ConsistencyCheck> residual_sweep(std::vector<double> theta_grid);

// N (|phi psi> + e^{i theta} |psi phi>); throws std::domain_error when the
// combination annihilates (theta = pi with parallel inputs).
PureState ideal_target(const PureState& psi, const PureState& phi, double theta);

// <target| rho |target>, clamped to [0, 1]
double fidelity_pure_mixed(const DensityMatrix& rho, const PureState& target);

struct SearchResult {
    double theta = 0.0;
    std::size_t machine_dim = 0;
    double best_worst_fidelity = 0.0;
    std::size_t evaluations = 0;
    std::uint64_t seed = 0;
    std::vector<double> parameters; // Hermitian generator of the best unitary
    std::size_t skipped_probes = 0; // probes with a degenerate target
};

// Searches unitaries U = exp(i H) on A (x) B (x) M (machine dimension D,
// (4D)^2 real parameters) maximizing the minimum fidelity over a probe set
// {|0>, |1>, (|0>+|1>)/sqrt(2), seeded random qubits} paired with reference
// |0> and machine start |e_0>. Evaluation schedule: the analytic candidate
// exp(-i theta/2 P (x) I) first, then ceil((budget-1)/2) random restarts
// (uniform in [-pi, pi] per parameter, streams keyed by restart index), then
// Nelder-Mead anchored at the analytic candidate. The schedule for a smaller
// budget is a prefix of the schedule for a larger one, so the reported best
// is monotone in budget. Deterministic given (theta, D, probe_count, seed).
SearchResult optimize_machine(double theta, std::size_t machine_dim, std::size_t probe_count,
                              std::size_t budget, std::uint64_t seed);

// Recomputes the search objective for a parameter vector; a SearchResult is
// self-certifying through this.
double machine_search_objective(double theta, std::size_t machine_dim, std::size_t probe_count,
                                std::uint64_t seed, const std::vector<double>& parameters);

} // namespace qsym
