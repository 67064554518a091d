#include "qsym/circuit.hpp"

#include <cmath>
#include <stdexcept>

#include "qsym/measures.hpp"

namespace qsym {

namespace {

const Cx kI(0.0, 1.0);

void require_equal_dims(const PureState& psi, const PureState& phi, const char* who) {
    if (psi.dims() != phi.dims()) throw std::invalid_argument(std::string(who) + ": dimension mismatch");
}

// controlled swap of A and B when the (last) control qubit is |1>
Mat controlled_swap(std::size_t d) {
    const std::size_t n = 2 * d * d;
    Mat g(n, n);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            g((i * d + j) * 2 + 0, (i * d + j) * 2 + 0) = 1.0;
            g((j * d + i) * 2 + 1, (i * d + j) * 2 + 1) = 1.0;
        }
    return g;
}

Mat on_control(std::size_t d, const Mat& gate) {
    return kron(Mat::identity(d * d), gate);
}

} // namespace

PureState symmetrizer_circuit_state(const PureState& psi, const PureState& phi, double theta) {
    require_equal_dims(psi, phi, "symmetrizer_circuit_state");
    const std::size_t d = psi.dim();

    const double h = 1.0 / std::sqrt(2.0);
    const Mat hadamard(2, 2, {h, h, h, -h});
    const Mat phase(2, 2, {std::exp(kI * (theta / 2.0)), 0, 0, std::exp(-kI * (theta / 2.0))});

    Vec state = kron(kron(psi.amplitudes(), phi.amplitudes()), Vec{1.0, 0.0});
    state = on_control(d, hadamard) * state;
    state = on_control(d, phase) * state;
    state = controlled_swap(d) * state;
    state = on_control(d, hadamard) * state;
    return PureState(std::move(state), {d, d, 2});
}

PureState symmetrizer_closed_form(const PureState& psi, const PureState& phi, double theta) {
    require_equal_dims(psi, phi, "symmetrizer_closed_form");
    const std::size_t d = psi.dim();
    const Cx fwd = 0.5 * std::exp(kI * (theta / 2.0));   // e^{+i theta/2}/2
    const Cx bwd = 0.5 * std::exp(-kI * (theta / 2.0));  // e^{-i theta/2}/2

    const Vec pq = kron(psi.amplitudes(), phi.amplitudes());
    const Vec qp = kron(phi.amplitudes(), psi.amplitudes());

    Vec state(2 * d * d);
    for (std::size_t k = 0; k < d * d; ++k) {
        state[2 * k + 0] = bwd * qp[k] + fwd * pq[k];
        state[2 * k + 1] = fwd * pq[k] - bwd * qp[k];
    }
    return PureState(std::move(state), {d, d, 2});
}

DensityMatrix premeasure_density(const PureState& psi, const PureState& phi, double theta) {
    require_equal_dims(psi, phi, "premeasure_density");
    (void)theta; // only enters relative phases between branches
    const std::size_t d = psi.dim();
    const Vec pq = kron(psi.amplitudes(), phi.amplitudes());
    const Vec qp = kron(phi.amplitudes(), psi.amplitudes());
    Mat m = outer(pq, pq);
    m += outer(qp, qp);
    m *= 0.5;
    return DensityMatrix(std::move(m), {d, d});
}

std::array<BranchOutcome, 2> measure_control(const PureState& circuit_state) {
    const auto& dims = circuit_state.dims();
    if (dims.size() < 2 || dims.back() != 2)
        throw std::invalid_argument("measure_control: last subsystem is not a control qubit");

    const std::size_t rest = circuit_state.dim() / 2;
    std::vector<std::size_t> rest_dims(dims.begin(), dims.end() - 1);

    std::array<BranchOutcome, 2> out;
    for (int bit = 0; bit < 2; ++bit) {
        Vec branch(rest);
        double p = 0.0;
        for (std::size_t k = 0; k < rest; ++k) {
            branch[k] = circuit_state.amplitude(2 * k + static_cast<std::size_t>(bit));
            p += std::norm(branch[k]);
        }
        out[bit].control_bit = bit;
        out[bit].probability = p;
        if (p > 1e-24) {
            branch *= Cx(1.0 / std::sqrt(p), 0.0);
            PureState post(std::move(branch), rest_dims);
            if (rest_dims == std::vector<std::size_t>{2, 2})
                out[bit].concurrence = concurrence_pure(post);
            else if (rest_dims.size() == 2)
                out[bit].concurrence = i_concurrence(post, 0);
            out[bit].post_state = std::move(post);
        }
    }
    return out;
}

std::pair<double, double> branch_concurrences(const PureState& psi, const PureState& phi,
                                              double theta) {
    require_equal_dims(psi, phi, "branch_concurrences");
    if (psi.dims() != std::vector<std::size_t>{2})
        throw std::invalid_argument("branch_concurrences: inputs are not qubits");

    const double overlap2 = std::norm(inner(psi, phi));
    const double k = std::abs(inner(phi, spin_flip(psi)) * inner(psi, spin_flip(phi)));
    const double n_plus2 = 2.0 * (1.0 + std::cos(theta) * overlap2);
    const double n_minus2 = 2.0 * (1.0 - std::cos(theta) * overlap2);

    const double c_plus = n_plus2 > 1e-24 ? 2.0 * k / n_plus2 : 0.0;
    const double c_minus = n_minus2 > 1e-24 ? 2.0 * k / n_minus2 : 0.0;
    return {c_plus, c_minus};
}

double average_concurrence(const PureState& psi, const PureState& phi, double theta) {
    const auto [c_plus, c_minus] = branch_concurrences(psi, phi, theta);
    const double overlap2 = std::norm(inner(psi, phi));
    const double p_plus = (1.0 + std::cos(theta) * overlap2) / 2.0; // N+^2/4
    const double p_minus = (1.0 - std::cos(theta) * overlap2) / 2.0;
    return p_plus * c_plus + p_minus * c_minus;
}

std::array<std::uint64_t, 2> sample_control_shots(const PureState& psi, const PureState& phi,
                                                  double theta, std::uint64_t shots,
                                                  std::uint64_t seed) {
    const PureState state = symmetrizer_circuit_state(psi, phi, theta);
    const auto branches = measure_control(state);
    const double p0 = branches[0].probability;

    CounterRng rng(seed);
    std::array<std::uint64_t, 2> counts{0, 0};
    for (std::uint64_t s = 0; s < shots; ++s) ++counts[rng.next_double() < p0 ? 0 : 1];
    return counts;
}

} // namespace qsym
