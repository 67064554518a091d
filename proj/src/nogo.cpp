#include "qsym/nogo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qsym/nelder_mead.hpp"

namespace qsym {

namespace {

constexpr std::uint64_t kRestartStreamBase = 1ull << 20;

struct Probe {
    Vec input;  // psi (x) |0> (x) |e_0> on the full 4D-dimensional space
    Vec target; // ideal target on A (x) B
};

struct SearchSetup {
    std::size_t machine_dim = 0;
    std::size_t n = 0; // 4 * machine_dim
    std::vector<Probe> probes;
    std::size_t skipped = 0;
};

SearchSetup make_setup(double theta, std::size_t machine_dim, std::size_t probe_count,
                       std::uint64_t seed) {
    SearchSetup s;
    s.machine_dim = machine_dim;
    s.n = 4 * machine_dim;

    const double h = 1.0 / std::sqrt(2.0);
    std::vector<PureState> inputs = {PureState::basis(2, 0), PureState::basis(2, 1),
                                     PureState::qubit(h, h)};
    CounterRng rng(seed);
    while (inputs.size() < std::max<std::size_t>(probe_count, 3))
        inputs.push_back(sample_pure_haar(2, rng));

    const PureState reference = PureState::basis(2, 0);
    for (const PureState& psi : inputs) {
        Probe p;
        try {
            p.target = ideal_target(psi, reference, theta).amplitudes();
        } catch (const std::domain_error&) {
            ++s.skipped;
            continue;
        }
        p.input = Vec(s.n);
        p.input[0] = psi.amplitude(0);                  // (a=0, b=0, m=0)
        p.input[2 * machine_dim] = psi.amplitude(1);    // (a=1, b=0, m=0)
        s.probes.push_back(std::move(p));
    }
    return s;
}

Mat hermitian_from_params(const std::vector<double>& p, std::size_t n) {
    Mat h(n, n);
    std::size_t k = n;
    for (std::size_t i = 0; i < n; ++i) {
        h(i, i) = p[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            h(i, j) = Cx(p[k], p[k + 1]);
            h(j, i) = std::conj(h(i, j));
            k += 2;
        }
    }
    return h;
}

std::vector<double> params_from_hermitian(const Mat& h) {
    const std::size_t n = h.rows();
    std::vector<double> p(n * n);
    std::size_t k = n;
    for (std::size_t i = 0; i < n; ++i) {
        p[i] = h(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            p[k] = h(i, j).real();
            p[k + 1] = h(i, j).imag();
            k += 2;
        }
    }
    return p;
}

// min over probes of <t| Tr_M(U in in^dag U^dag) |t>
double worst_fidelity(const SearchSetup& s, const std::vector<double>& params) {
    const Mat u = expm_skew(hermitian_from_params(params, s.n));
    const std::size_t d = s.machine_dim;

    double worst = 1.0;
    Vec out(s.n);
    for (const Probe& p : s.probes) {
        for (std::size_t r = 0; r < s.n; ++r) {
            Cx acc = 0;
            // input is nonzero at positions 0 and 2d only
            acc += u(r, 0) * p.input[0];
            acc += u(r, 2 * d) * p.input[2 * d];
            out[r] = acc;
        }
        double f = 0.0;
        for (std::size_t m = 0; m < d; ++m) {
            Cx amp = 0;
            for (std::size_t ab = 0; ab < 4; ++ab) amp += std::conj(p.target[ab]) * out[ab * d + m];
            f += std::norm(amp);
        }
        worst = std::min(worst, f);
    }
    return worst;
}

Mat warm_start_generator(double theta, std::size_t machine_dim) {
    Mat perm(4, 4);
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) perm(a * 2 + b, b * 2 + a) = 1.0;
    Mat h = kron(perm, Mat::identity(machine_dim));
    h *= Cx(-theta / 2.0, 0.0);
    return h;
}

} // namespace

ConsistencyCheck consistency_residual(double theta) {
    // |v0> = (1 + e^{i theta})|v2>, |v2> = |v1>, <v0|v0> = 1, <v1|v1> = 1/2
    // leave the residual | |1 + e^{i theta}|^2 / 2 - 1 | = |cos theta|
    return {theta, std::abs(std::cos(theta))};
}

std::vector<ConsistencyCheck> residual_sweep(std::vector<double> theta_grid) {
    std::sort(theta_grid.begin(), theta_grid.end());
    std::vector<ConsistencyCheck> out;
    out.reserve(theta_grid.size());
    for (double t : theta_grid) out.push_back(consistency_residual(t));
    return out;
}

PureState ideal_target(const PureState& psi, const PureState& phi, double theta) {
    if (psi.dims() != phi.dims()) throw std::invalid_argument("ideal_target: dimension mismatch");
    const std::size_t d = psi.dim();
    Vec v = kron(phi.amplitudes(), psi.amplitudes());
    v += std::exp(Cx(0.0, theta)) * kron(psi.amplitudes(), phi.amplitudes());
    const double n = v.norm();
    if (n * n < 1e-10) throw std::domain_error("ideal_target: combination has vanishing norm");
    v *= Cx(1.0 / n, 0.0);
    return PureState(std::move(v), {d, d});
}

double fidelity_pure_mixed(const DensityMatrix& rho, const PureState& target) {
    if (rho.dim() != target.dim())
        throw std::invalid_argument("fidelity_pure_mixed: dimension mismatch");
    const Vec rt = rho.mat() * target.amplitudes();
    const double f = inner(target.amplitudes(), rt).real();
    return std::clamp(f, 0.0, 1.0);
}

SearchResult optimize_machine(double theta, std::size_t machine_dim, std::size_t probe_count,
                              std::size_t budget, std::uint64_t seed) {
    if (machine_dim < 1) throw std::invalid_argument("optimize_machine: machine_dim must be >= 1");
    if (budget < 1) throw std::invalid_argument("optimize_machine: budget must be >= 1");

    const SearchSetup setup = make_setup(theta, machine_dim, probe_count, seed);
    const std::size_t n = setup.n;
    const std::size_t nparams = n * n;

    SearchResult res;
    res.theta = theta;
    res.machine_dim = machine_dim;
    res.seed = seed;
    res.skipped_probes = setup.skipped;
    res.best_worst_fidelity = -1.0;

    auto track = [&](const std::vector<double>& p, double v) {
        if (v > res.best_worst_fidelity) {
            res.best_worst_fidelity = v;
            res.parameters = p;
        }
    };

    const std::vector<double> warm = params_from_hermitian(warm_start_generator(theta, machine_dim));
    track(warm, worst_fidelity(setup, warm));
    res.evaluations = 1;

    const std::size_t restarts = (budget - 1) / 2;
    std::vector<double> candidate(nparams);
    for (std::size_t k = 0; k < restarts; ++k) {
        CounterRng rng(seed, kRestartStreamBase + k * nparams);
        for (double& x : candidate) x = rng.next_symmetric(std::numbers::pi);
        track(candidate, worst_fidelity(setup, candidate));
        ++res.evaluations;
    }

    const std::size_t remaining = budget - res.evaluations;
    if (remaining > 0) {
        NelderMeadResult nm = nelder_mead_maximize(
            [&](const std::vector<double>& p) { return worst_fidelity(setup, p); }, warm, 0.2,
            remaining);
        res.evaluations += nm.evaluations;
        track(nm.best_point, nm.best_value);
    }
    return res;
}

double machine_search_objective(double theta, std::size_t machine_dim, std::size_t probe_count,
                                std::uint64_t seed, const std::vector<double>& parameters) {
    const SearchSetup setup = make_setup(theta, machine_dim, probe_count, seed);
    if (parameters.size() != setup.n * setup.n)
        throw std::invalid_argument("machine_search_objective: wrong parameter count");
    return worst_fidelity(setup, parameters);
}

} // namespace qsym
