#include "qsym/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qsym {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
} // namespace

Mat pauli_x() { return Mat(2, 2, {0, 1, 1, 0}); }
Mat pauli_y() { return Mat(2, 2, {0, Cx(0, -1), Cx(0, 1), 0}); }
Mat pauli_z() { return Mat(2, 2, {1, 0, 0, -1}); }

Mat spin_flip_kernel() { return kron(pauli_y(), pauli_y()); }

std::array<double, 3> BlochDirection::unit_vector() const {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

double dot(const BlochDirection& n, const BlochDirection& m) {
    const auto a = n.unit_vector();
    const auto b = m.unit_vector();
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

PureState::PureState(Vec amplitudes, std::vector<std::size_t> dims)
    : amps_(std::move(amplitudes)), dims_(std::move(dims)) {
    std::size_t total = 1;
    for (std::size_t d : dims_) total *= d;
    if (dims_.empty() || total != amps_.dim())
        throw std::invalid_argument("PureState: dims do not match amplitude count");
    const double n = amps_.norm();
    if (std::abs(n - 1.0) > kNormGrace)
        throw std::invalid_argument("PureState: amplitudes are not normalized");
    if (n != 1.0) amps_ *= Cx(1.0 / n, 0.0);
}

PureState PureState::basis(std::size_t d, std::size_t k) {
    if (k >= d) throw std::invalid_argument("PureState::basis: index out of range");
    Vec v(d);
    v[k] = 1.0;
    return PureState(std::move(v), {d});
}

PureState PureState::qubit(Cx a, Cx b) { return PureState(Vec{a, b}, {2}); }

Cx inner(const PureState& psi, const PureState& phi) {
    return inner(psi.amplitudes(), phi.amplitudes());
}

PureState product(const PureState& psi, const PureState& phi) {
    std::vector<std::size_t> dims = psi.dims();
    dims.insert(dims.end(), phi.dims().begin(), phi.dims().end());
    return PureState(kron(psi.amplitudes(), phi.amplitudes()), std::move(dims));
}

DensityMatrix::DensityMatrix(Mat m, std::vector<std::size_t> dims)
    : m_(std::move(m)), dims_(std::move(dims)) {
    std::size_t total = 1;
    for (std::size_t d : dims_) total *= d;
    if (dims_.empty() || m_.rows() != m_.cols() || m_.rows() != total)
        throw std::invalid_argument("DensityMatrix: dims do not match matrix size");
    if (hermiticity_error(m_) > kHermitianTol)
        throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
    if (std::abs(m_.trace() - Cx(1.0, 0.0)) > 1e-9)
        throw std::invalid_argument("DensityMatrix: trace is not one");
}

DensityMatrix projector(const PureState& psi) {
    return DensityMatrix(outer(psi.amplitudes(), psi.amplitudes()), psi.dims());
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::size_t>& keep) {
    Mat reduced = partial_trace(rho.mat(), rho.dims(), keep);
    std::vector<std::size_t> dims;
    for (std::size_t k : keep) dims.push_back(rho.dims().at(k));
    return DensityMatrix(std::move(reduced), std::move(dims));
}

Mat partial_transpose(const DensityMatrix& rho, std::size_t subsystem) {
    return partial_transpose(rho.mat(), rho.dims(), subsystem);
}

PureState qubit_from_bloch(const BlochDirection& dir) {
    double theta = dir.theta;
    double phi = dir.phi;
    if (theta < -kAngleGrace || theta > kPi + kAngleGrace)
        throw std::domain_error("qubit_from_bloch: theta outside [0, pi]");
    if (phi < -kAngleGrace || phi >= kTwoPi + kAngleGrace)
        throw std::domain_error("qubit_from_bloch: phi outside [0, 2*pi)");
    theta = std::clamp(theta, 0.0, kPi);
    phi = phi < 0.0 ? 0.0 : (phi >= kTwoPi ? phi - kTwoPi : phi);

    const Cx a = std::cos(theta / 2.0) * std::exp(Cx(0.0, -phi / 2.0));
    const Cx b = std::sin(theta / 2.0) * std::exp(Cx(0.0, +phi / 2.0));
    return PureState::qubit(a, b);
}

PureState spin_flip(const PureState& psi) {
    if (psi.dims() != std::vector<std::size_t>{2})
        throw std::invalid_argument("spin_flip: input is not a single qubit");
    const Cx a = psi.amplitude(0);
    const Cx b = psi.amplitude(1);
    return PureState::qubit(Cx(0, -1) * std::conj(b), Cx(0, 1) * std::conj(a));
}

PureState tilde_two_qubit(const PureState& psi) {
    if (psi.dims() != std::vector<std::size_t>{2, 2})
        throw std::invalid_argument("tilde_two_qubit: input is not a two-qubit state");
    const Vec& v = psi.amplitudes();
    Vec out(4);
    out[0] = -std::conj(v[3]);
    out[1] = std::conj(v[2]);
    out[2] = std::conj(v[1]);
    out[3] = -std::conj(v[0]);
    return PureState(std::move(out), {2, 2});
}

Mat tilde_two_qubit(const Mat& m) {
    if (m.rows() != 4 || m.cols() != 4)
        throw std::invalid_argument("tilde_two_qubit: matrix is not 4x4");
    const Mat s = spin_flip_kernel();
    return s * m.conjugate() * s;
}

DensityMatrix tilde_two_qubit(const DensityMatrix& rho) {
    if (rho.dims() != std::vector<std::size_t>{2, 2})
        throw std::invalid_argument("tilde_two_qubit: input is not a two-qubit state");
    return DensityMatrix(tilde_two_qubit(rho.mat()), rho.dims());
}

BlochDirection sample_bloch_uniform(CounterRng& rng) {
    const double z = 2.0 * rng.next_double() - 1.0;
    const double phi = kTwoPi * rng.next_double();
    return {std::acos(std::clamp(z, -1.0, 1.0)), phi};
}

PureState sample_pure_haar(std::size_t d, CounterRng& rng) {
    if (d < 2) throw std::invalid_argument("sample_pure_haar: dimension must be at least 2");
    Vec v(d);
    double n2 = 0.0;
    do {
        for (std::size_t i = 0; i < d; ++i) {
            const auto [g1, g2] = rng.next_gaussian_pair();
            v[i] = Cx(g1, g2);
        }
        n2 = v.norm();
    } while (n2 == 0.0);
    v *= Cx(1.0 / n2, 0.0);
    return PureState(std::move(v), {d});
}

} // namespace qsym
