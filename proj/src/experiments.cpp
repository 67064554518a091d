#include "qsym/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "qsym/circuit.hpp"
#include "qsym/machines.hpp"
#include "qsym/measures.hpp"
#include "qsym/rng.hpp"
#include "qsym/welford.hpp"

namespace qsym {

namespace {

constexpr std::uint64_t kBlockSize = 1 << 12;

double sample_value(Quantity q, CounterRng& rng, double theta, std::size_t dim) {
    switch (q) {
        case Quantity::AvgConcurrence: {
            const BlochDirection n = sample_bloch_uniform(rng);
            const BlochDirection m = sample_bloch_uniform(rng);
            return concurrence_bloch(n, m);
        }
        case Quantity::AvgOverlap: {
            const BlochDirection n = sample_bloch_uniform(rng);
            const BlochDirection m = sample_bloch_uniform(rng);
            return overlap_with_symmetric(qubit_from_bloch(n), qubit_from_bloch(m));
        }
        case Quantity::AvgCircuitConcurrence: {
            const BlochDirection n = sample_bloch_uniform(rng);
            const BlochDirection m = sample_bloch_uniform(rng);
            return average_concurrence(qubit_from_bloch(n), qubit_from_bloch(m), theta);
        }
        case Quantity::AvgIConcurrence: {
            const PureState psi = sample_pure_haar(dim, rng);
            const PureState phi = sample_pure_haar(dim, rng);
            return i_concurrence(entangle(psi, phi), 0);
        }
    }
    throw std::invalid_argument("estimate: unknown quantity");
}

std::uint64_t sample_stride(Quantity q, std::size_t dim) {
    return q == Quantity::AvgIConcurrence ? 4 * static_cast<std::uint64_t>(dim) : 4;
}

} // namespace

std::string quantity_name(Quantity q) {
    switch (q) {
        case Quantity::AvgConcurrence: return "avg_concurrence";
        case Quantity::AvgOverlap: return "avg_overlap";
        case Quantity::AvgCircuitConcurrence: return "avg_circuit_concurrence";
        case Quantity::AvgIConcurrence: return "avg_i_concurrence";
    }
    return "unknown";
}

EstimateReport estimate(Quantity q, std::uint64_t samples, std::uint64_t seed, double theta,
                        std::size_t dim, unsigned threads) {
    if (samples < 1) throw std::invalid_argument("estimate: samples must be >= 1");
    if (q == Quantity::AvgIConcurrence && dim < 2)
        throw std::invalid_argument("estimate: dimension must be >= 2");
    threads = std::clamp(threads, 1u, 64u);

    const std::uint64_t stride = sample_stride(q, dim);
    const std::uint64_t blocks = (samples + kBlockSize - 1) / kBlockSize;
    std::vector<Welford> acc(blocks);

    auto run_block = [&](std::uint64_t b) {
        const std::uint64_t begin = b * kBlockSize;
        const std::uint64_t end = std::min(samples, begin + kBlockSize);
        Welford w;
        CounterRng rng(seed);
        for (std::uint64_t i = begin; i < end; ++i) {
            rng.seek(i * stride);
            w.add(sample_value(q, rng, theta, dim));
        }
        acc[b] = w;
    };

    if (threads == 1 || blocks == 1) {
        for (std::uint64_t b = 0; b < blocks; ++b) run_block(b);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                for (std::uint64_t b = t; b < blocks; b += threads) run_block(b);
            });
        for (std::thread& t : pool) t.join();
    }

    Welford total;
    for (const Welford& w : acc) total.merge(w);

    EstimateReport rep;
    rep.quantity = quantity_name(q);
    rep.samples = samples;
    rep.mean = total.mean;
    rep.std_error = total.standard_error();
    rep.seed = seed;
    return rep;
}

std::vector<GridRow> grid_validate(std::size_t xi_steps, std::size_t eta_steps, unsigned trials,
                                   std::uint64_t seed) {
    std::vector<GridRow> rows;
    rows.reserve(xi_steps * eta_steps * trials);
    CounterRng rng(seed);

    for (std::size_t i = 0; i < xi_steps; ++i) {
        const double xi = xi_steps == 1
                              ? 0.0
                              : -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(xi_steps - 1);
        const double bound = std::sqrt(std::max(0.0, 1.0 - xi * xi)) / 2.0;
        for (std::size_t j = 0; j < eta_steps; ++j) {
            const double eta =
                eta_steps == 1
                    ? bound
                    : -bound + 2.0 * bound * static_cast<double>(j) / static_cast<double>(eta_steps - 1);
            const MachineParams p{xi, eta};
            for (unsigned t = 0; t < trials; ++t) {
                const PureState psi = sample_pure_haar(2, rng);

                GridRow row;
                row.xi = xi;
                row.eta = eta;
                row.trial = t;

                const DensityMatrix rho = machine_rho(psi, p);
                const PureState full = machine_full_output(psi, p);
                row.rho_delta =
                    max_abs_diff(partial_trace(projector(full), {0, 1}).mat(), rho.mat());

                const ConcurrenceReport rep = concurrence_mixed(rho);
                const auto lams = machine_lambdas(p, psi.amplitude(1));
                for (std::size_t k = 0; k < 4; ++k)
                    row.lambda_delta = std::max(row.lambda_delta,
                                                std::abs(rep.lambdas[k] - lams[k]));
                row.concurrence_delta =
                    std::abs(machine_concurrence(p, psi.amplitude(1)) - rep.concurrence);

                row.pass = row.lambda_delta <= 1e-9 && row.concurrence_delta <= 1e-9 &&
                           row.rho_delta <= 1e-12;
                rows.push_back(row);
            }
        }
    }
    return rows;
}

std::vector<ValidationCheck> validate_suite(std::uint64_t seed) {
    std::vector<ValidationCheck> checks;

    {
        const auto rows = grid_validate(10, 10, 20, seed);
        ValidationCheck spectrum{"machine_grid_spectrum", rows.size(), 0.0, 1e-9, false};
        ValidationCheck reduction{"machine_grid_reduction", rows.size(), 0.0, 1e-12, false};
        for (const GridRow& r : rows) {
            spectrum.max_delta =
                std::max({spectrum.max_delta, r.lambda_delta, r.concurrence_delta});
            reduction.max_delta = std::max(reduction.max_delta, r.rho_delta);
        }
        spectrum.pass = spectrum.max_delta <= spectrum.threshold;
        reduction.pass = reduction.max_delta <= reduction.threshold;
        checks.push_back(spectrum);
        checks.push_back(reduction);
    }

    {
        ValidationCheck chain{"bloch_concurrence_chain", 1000, 0.0, 1e-9, false};
        CounterRng rng(seed, 1ull << 32);
        for (std::size_t c = 0; c < chain.cases; ++c) {
            const BlochDirection n = sample_bloch_uniform(rng);
            const BlochDirection m = sample_bloch_uniform(rng);
            const double closed = concurrence_bloch(n, m);
            const PureState pair = entangle(qubit_from_bloch(n), qubit_from_bloch(m));
            chain.max_delta = std::max(chain.max_delta, std::abs(closed - concurrence_pure(pair)));
            chain.max_delta = std::max(
                chain.max_delta, std::abs(closed - concurrence_mixed(projector(pair)).concurrence));
        }
        chain.pass = chain.max_delta <= chain.threshold;
        checks.push_back(chain);
    }

    {
        ValidationCheck routes{"circuit_state_routes", 200, 0.0, 1e-12, false};
        ValidationCheck psum{"circuit_probability_sum", 200, 0.0, 1e-12, false};
        ValidationCheck avg{"circuit_average_concurrence", 200, 0.0, 1e-10, false};
        ValidationCheck sep_ppt{"circuit_premeasure_ppt", 200, 0.0, 1e-12, false};
        ValidationCheck sep_c{"circuit_premeasure_concurrence", 200, 0.0, 1e-10, false};
        CounterRng rng(seed, 1ull << 33);
        for (std::size_t c = 0; c < routes.cases; ++c) {
            const BlochDirection n = sample_bloch_uniform(rng);
            const BlochDirection m = sample_bloch_uniform(rng);
            const double theta = 2.0 * std::numbers::pi * rng.next_double();
            const PureState psi = qubit_from_bloch(n);
            const PureState phi = qubit_from_bloch(m);

            const PureState gate = symmetrizer_circuit_state(psi, phi, theta);
            routes.max_delta =
                std::max(routes.max_delta, max_abs_diff(gate.amplitudes(),
                                                        symmetrizer_closed_form(psi, phi, theta)
                                                            .amplitudes()));
            const auto branches = measure_control(gate);
            psum.max_delta = std::max(
                psum.max_delta,
                std::abs(branches[0].probability + branches[1].probability - 1.0));
            avg.max_delta =
                std::max(avg.max_delta, std::abs(average_concurrence(psi, phi, theta) -
                                                 concurrence_bloch(n, m)));
            const DensityMatrix sep = premeasure_density(psi, phi, theta);
            sep_ppt.max_delta =
                std::max(sep_ppt.max_delta, std::max(0.0, -ppt_min_eigenvalue(sep)));
            sep_c.max_delta = std::max(sep_c.max_delta, concurrence_mixed(sep).concurrence);
        }
        for (ValidationCheck* v : {&routes, &psum, &avg, &sep_ppt, &sep_c}) {
            v->pass = v->max_delta <= v->threshold;
            checks.push_back(*v);
        }
    }

    {
        ValidationCheck red{"reduced_state_identities", 200, 0.0, 1e-12, false};
        CounterRng rng(seed, 1ull << 34);
        for (std::size_t c = 0; c < red.cases; ++c) {
            const PureState psi = qubit_from_bloch(sample_bloch_uniform(rng));
            const PureState phi = qubit_from_bloch(sample_bloch_uniform(rng));
            const DensityMatrix closed = reduced_out(psi, phi);
            const DensityMatrix traced = partial_trace(projector(entangle(psi, phi)), {0});
            red.max_delta = std::max(red.max_delta, max_abs_diff(closed.mat(), traced.mat()));

            const double overlap2 = std::norm(inner(psi, phi));
            const Vec rp = closed.mat() * psi.amplitudes();
            const double fid = inner(psi.amplitudes(), rp).real();
            red.max_delta = std::max(red.max_delta, std::abs(fid - 0.5 * (1.0 + overlap2)));
        }
        red.pass = red.max_delta <= red.threshold;
        checks.push_back(red);
    }

    return checks;
}

} // namespace qsym
