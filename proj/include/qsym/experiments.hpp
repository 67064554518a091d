// Monte Carlo averages behind the paper-scale numeric claims (mean
// concurrence 1/2, mean symmetric overlap 3/4, theta-independent circuit
// average) and the (xi, eta) grid cross-validation of the machine closed
// forms against the numeric Wootters pipeline.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qsym {

enum class Quantity {
    AvgConcurrence,        // E[C] over independent Bloch-uniform pairs = 1/2
    AvgOverlap,            // E[|<out|sym>|^2] = 3/4
    AvgCircuitConcurrence, // E[P+C+ + P-C-] at fixed theta; theta-independent
    AvgIConcurrence,       // E[1 - |<phi|psi>|^2] over Haar pairs = 1 - 1/d
};

std::string quantity_name(Quantity q);

struct EstimateReport {
    std::string quantity;
    std::uint64_t samples = 0;
    double mean = 0.0;
    double std_error = 0.0; // sample standard deviation / sqrt(samples)
    std::uint64_t seed = 0;
};

// Deterministic for a given seed at any thread count: the sample index space
// is split into fixed blocks whose accumulators merge in block order.
EstimateReport estimate(Quantity q, std::uint64_t samples, std::uint64_t seed,
                        double theta = 0.0, std::size_t dim = 2, unsigned threads = 1);

struct GridRow {
    double xi = 0.0;
    double eta = 0.0;
    unsigned trial = 0;
    double lambda_delta = 0.0;      // closed-form spectrum vs Hermitian-route numeric
    double concurrence_delta = 0.0; // closed-form concurrence vs Wootters
    double rho_delta = 0.0;         // traced full output vs closed-form rho
    bool pass = false;
};

// One row per (grid point, trial); xi spans [-1, 1], eta spans the full
// Cauchy-Schwarz interval [-sqrt(1-xi^2)/2, +sqrt(1-xi^2)/2], endpoints
// included. pass requires lambda/concurrence deltas <= 1e-9 and rho delta
// <= 1e-12.
std::vector<GridRow> grid_validate(std::size_t xi_steps, std::size_t eta_steps, unsigned trials,
                                   std::uint64_t seed);

struct ValidationCheck {
    std::string name;
    std::size_t cases = 0;
    double max_delta = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

// Full internal cross-check battery (grid, concurrence chain, circuit
// routes, reduced-state identities).
std::vector<ValidationCheck> validate_suite(std::uint64_t seed);

} // namespace qsym
