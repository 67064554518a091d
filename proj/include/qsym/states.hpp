// Pure states and density matrices over a subsystem-dimension list, qubits
// from Bloch angles, spin-flip (tilde) conjugations, and uniform sampling.

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "qsym/linalg.hpp"
#include "qsym/rng.hpp"

namespace qsym {

// vectors within this distance of unit norm are silently renormalized;
// farther off is an error
inline constexpr double kNormGrace = 1e-6;

// same grace band for angle ranges
inline constexpr double kAngleGrace = 1e-6;

Mat pauli_x();
Mat pauli_y(); // sigma_2
Mat pauli_z();

// sigma_2 (x) sigma_2
Mat spin_flip_kernel();

struct BlochDirection {
    double theta = 0.0; // polar, [0, pi]
    double phi = 0.0;   // azimuthal, [0, 2*pi)

    std::array<double, 3> unit_vector() const;
};

double dot(const BlochDirection& n, const BlochDirection& m);

class PureState {
public:
    // Renormalizes amplitudes within kNormGrace of unit norm; throws
    // std::invalid_argument beyond that or when dims do not multiply out
    // to the amplitude count.
    PureState(Vec amplitudes, std::vector<std::size_t> dims);

    static PureState basis(std::size_t d, std::size_t k);
    static PureState qubit(Cx a, Cx b);

    const Vec& amplitudes() const { return amps_; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t dim() const { return amps_.dim(); }

    Cx amplitude(std::size_t i) const { return amps_[i]; }

private:
    Vec amps_;
    std::vector<std::size_t> dims_;
};

// <psi|phi>
Cx inner(const PureState& psi, const PureState& phi);

// |psi> (x) |phi>; concatenates dims
PureState product(const PureState& psi, const PureState& phi);

class DensityMatrix {
public:
    // Requires a square matrix matching the dims product, Hermitian within
    // kHermitianTol, trace within 1e-9 of one. Positivity is enforced by the
    // operations that need it (sqrtm_psd throws on negative spectrum).
    DensityMatrix(Mat m, std::vector<std::size_t> dims);

    const Mat& mat() const { return m_; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t dim() const { return m_.rows(); }

private:
    Mat m_;
    std::vector<std::size_t> dims_;
};

// |psi><psi|
DensityMatrix projector(const PureState& psi);

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::size_t>& keep);
Mat partial_transpose(const DensityMatrix& rho, std::size_t subsystem);

// amplitudes (cos(theta/2) e^{-i phi/2}, sin(theta/2) e^{+i phi/2})
PureState qubit_from_bloch(const BlochDirection& dir);

// sigma_2 |psi*>; single qubits only
PureState spin_flip(const PureState& psi);

// (sigma_2 (x) sigma_2) |psi*>
PureState tilde_two_qubit(const PureState& psi);

// (sigma_2 (x) sigma_2) M* (sigma_2 (x) sigma_2)
Mat tilde_two_qubit(const Mat& m);
DensityMatrix tilde_two_qubit(const DensityMatrix& rho);

// cos(theta) uniform on [-1, 1], phi uniform on [0, 2*pi)
BlochDirection sample_bloch_uniform(CounterRng& rng);

// unitarily invariant pure state on C^d, d >= 2
PureState sample_pure_haar(std::size_t d, CounterRng& rng);

} // namespace qsym
