#include "qsym/machines.hpp"

#include <cmath>
#include <stdexcept>

namespace qsym {

namespace {

const Cx kI(0.0, 1.0);

void require_qubit(const PureState& psi, const char* who) {
    if (psi.dims() != std::vector<std::size_t>{2})
        throw std::invalid_argument(std::string(who) + ": input is not a single qubit");
}

} // namespace

void validate(const MachineParams& p) {
    if (std::abs(p.xi) > 1.0 + 1e-12)
        throw std::domain_error("machine parameters: xi outside [-1, 1]");
    const double bound = std::sqrt(std::max(0.0, 1.0 - p.xi * p.xi)) / 2.0;
    if (std::abs(p.eta) > bound + 1e-12)
        throw std::domain_error("machine parameters violate η ≤ √(1−ξ²)/2");
}

MachineRealization realize_machine_states(const MachineParams& p) {
    validate(p);
    const double xx = (1.0 + p.xi) / 2.0; // <X|X>
    const double yy = (1.0 - p.xi) / 2.0; // <Y|Y>

    MachineRealization r{Vec(2), Vec(2)};
    if (xx >= yy) {
        const double x1 = std::sqrt(xx);
        r.x[0] = x1;
        r.y[0] = kI * (p.eta / x1);
        r.y[1] = std::sqrt(std::max(0.0, yy - (p.eta * p.eta) / (x1 * x1)));
    } else {
        const double y1 = std::sqrt(yy);
        r.y[0] = y1;
        r.x[0] = -kI * (p.eta / y1);
        r.x[1] = std::sqrt(std::max(0.0, xx - (p.eta * p.eta) / (y1 * y1)));
    }
    return r;
}

PureState machine_full_output(const PureState& psi, const MachineParams& p) {
    require_qubit(psi, "machine_full_output");
    const MachineRealization r = realize_machine_states(p);
    const Cx a = psi.amplitude(0);
    const Cx b = psi.amplitude(1);

    Vec out(8); // index (i_A i_B i_M), machine register last
    out[0] = a * (r.x[0] + r.y[0]);
    out[1] = a * (r.x[1] + r.y[1]);
    out[2] = b * r.y[0];
    out[3] = b * r.y[1];
    out[4] = b * r.x[0];
    out[5] = b * r.x[1];
    return PureState(std::move(out), {2, 2, 2});
}

DensityMatrix machine_rho(const PureState& psi, const MachineParams& p) {
    require_qubit(psi, "machine_rho");
    validate(p);
    const Cx a = psi.amplitude(0);
    const Cx b = psi.amplitude(1);
    const double xi = p.xi, eta = p.eta;
    const double aa = std::norm(a), bb = std::norm(b);
    const Cx ab = a * std::conj(b);

    Mat m(4, 4);
    m(0, 0) = aa;
    m(0, 1) = ab * (-kI * eta + (1.0 - xi) / 2.0);
    m(0, 2) = ab * (kI * eta + (1.0 + xi) / 2.0);
    m(1, 0) = std::conj(m(0, 1));
    m(1, 1) = bb * (1.0 - xi) / 2.0;
    m(1, 2) = kI * bb * eta;
    m(2, 0) = std::conj(m(0, 2));
    m(2, 1) = -kI * bb * eta;
    m(2, 2) = bb * (1.0 + xi) / 2.0;
    return DensityMatrix(std::move(m), {2, 2});
}

Mat machine_rho_tilde(const PureState& psi, const MachineParams& p) {
    require_qubit(psi, "machine_rho_tilde");
    validate(p);
    const Cx a = psi.amplitude(0);
    const Cx b = psi.amplitude(1);
    const double xi = p.xi, eta = p.eta;
    const double aa = std::norm(a), bb = std::norm(b);
    const Cx ab = a * std::conj(b);

    Mat m(4, 4);
    m(1, 1) = bb * (1.0 + xi) / 2.0;
    m(1, 2) = kI * bb * eta;
    m(1, 3) = -ab * (kI * eta + (1.0 + xi) / 2.0);
    m(2, 1) = -kI * bb * eta;
    m(2, 2) = bb * (1.0 - xi) / 2.0;
    m(2, 3) = -ab * (-kI * eta + (1.0 - xi) / 2.0);
    m(3, 1) = std::conj(m(1, 3));
    m(3, 2) = std::conj(m(2, 3));
    m(3, 3) = aa;
    return m;
}

Mat machine_rho_rhotilde(const PureState& psi, const MachineParams& p) {
    require_qubit(psi, "machine_rho_rhotilde");
    validate(p);
    const Cx a = psi.amplitude(0);
    const Cx b = psi.amplitude(1);
    const double xi = p.xi, eta = p.eta;
    const double bb = std::norm(b);
    const Cx ab = a * std::conj(b);

    const double core = eta * eta + (1.0 - xi * xi) / 4.0;
    const Cx m_plus = core + kI * eta * (1.0 - xi);
    const Cx m_minus = core - kI * eta * (1.0 + xi);

    Mat m(4, 4);
    m(0, 1) = ab * bb * m_minus;
    m(0, 2) = ab * bb * m_plus;
    m(0, 3) = -2.0 * ab * ab * (core - kI * eta * xi);
    m(1, 1) = bb * bb * core;
    m(1, 2) = kI * bb * bb * eta * (1.0 - xi);
    m(1, 3) = -ab * bb * m_plus;
    m(2, 1) = -kI * bb * bb * eta * (1.0 + xi);
    m(2, 2) = bb * bb * core;
    m(2, 3) = -ab * bb * m_minus;
    return m;
}

std::array<double, 4> machine_lambdas(const MachineParams& p, Cx b) {
    validate(p);
    const double bb = std::norm(b);
    const double s = std::sqrt(std::max(0.0, 1.0 - p.xi * p.xi)) / 2.0;
    const double e = std::abs(p.eta);
    return {bb * (s + e), bb * (s - e), 0.0, 0.0};
}

double machine_concurrence(const MachineParams& p, Cx b) {
    validate(p);
    return 2.0 * std::norm(b) * std::abs(p.eta);
}

Mat optimal_entangler(std::size_t d) {
    if (d < 2) throw std::invalid_argument("optimal_entangler: dimension must be at least 2");
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    Mat u(d * d, d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            u(i * d + j, i * d + j) += inv_sqrt2;       // I
            u(i * d + j, j * d + i) += kI * inv_sqrt2;  // iP
        }
    return u;
}

PureState entangle(const PureState& psi, const PureState& phi) {
    if (psi.dims() != phi.dims()) throw std::invalid_argument("entangle: dimension mismatch");
    const std::size_t d = psi.dim();
    Vec v = kron(psi.amplitudes(), phi.amplitudes());
    v += kI * kron(phi.amplitudes(), psi.amplitudes());
    v *= Cx(1.0 / std::sqrt(2.0), 0.0);
    return PureState(std::move(v), {d, d});
}

DensityMatrix reduced_out(const PureState& psi, const PureState& phi) {
    if (psi.dims() != phi.dims()) throw std::invalid_argument("reduced_out: dimension mismatch");
    Mat m = outer(psi.amplitudes(), psi.amplitudes());
    m += outer(phi.amplitudes(), phi.amplitudes());
    m *= 0.5;
    return DensityMatrix(std::move(m), {psi.dim()});
}

} // namespace qsym
