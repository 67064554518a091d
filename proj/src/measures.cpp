#include "qsym/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qsym {

ConcurrenceReport concurrence_mixed(const DensityMatrix& rho) {
    if (rho.dims() != std::vector<std::size_t>{2, 2})
        throw std::invalid_argument("concurrence_mixed: input is not a two-qubit state");

    const Mat s = sqrtm_psd(rho.mat()); // throws on non-PSD input
    const Mat m = s * tilde_two_qubit(rho.mat()) * s;
    EigHermitian e = eig_hermitian(m);

    ConcurrenceReport rep;
    for (std::size_t k = 0; k < 4; ++k) rep.lambdas[k] = std::sqrt(std::max(e.values[k], 0.0));
    std::sort(rep.lambdas.begin(), rep.lambdas.end(), std::greater<>());
    rep.concurrence =
        std::max(0.0, rep.lambdas[0] - rep.lambdas[1] - rep.lambdas[2] - rep.lambdas[3]);
    return rep;
}

double concurrence_pure(const PureState& psi) {
    return std::abs(inner(psi, tilde_two_qubit(psi)));
}

double concurrence_bloch(const BlochDirection& n, const BlochDirection& m) {
    return 0.5 * (1.0 - std::cos(n.theta) * std::cos(m.theta) -
                  std::sin(n.theta) * std::sin(m.theta) * std::cos(n.phi - m.phi));
}

double i_concurrence(const PureState& psi, std::size_t side) {
    if (psi.dims().size() != 2)
        throw std::invalid_argument("i_concurrence: state is not bipartite");
    if (side > 1) throw std::invalid_argument("i_concurrence: side must be 0 or 1");
    const DensityMatrix reduced = partial_trace(projector(psi), {side});
    const Mat sq = reduced.mat() * reduced.mat();
    const double purity = sq.trace().real();
    return std::sqrt(std::max(0.0, 2.0 * (1.0 - purity)));
}

double ppt_min_eigenvalue(const DensityMatrix& rho) {
    if (rho.dims().size() != 2)
        throw std::invalid_argument("ppt_min_eigenvalue: state is not bipartite");
    EigHermitian e = eig_hermitian(partial_transpose(rho, 0));
    return e.values.back();
}

double overlap_with_symmetric(const PureState& psi, const PureState& phi) {
    if (psi.dims() != phi.dims())
        throw std::invalid_argument("overlap_with_symmetric: dimension mismatch");

    const Vec pq = kron(psi.amplitudes(), phi.amplitudes());
    const Vec qp = kron(phi.amplitudes(), psi.amplitudes());

    Vec out = pq;
    out += Cx(0, 1) * qp;
    out *= Cx(1.0 / std::sqrt(2.0), 0.0);

    Vec sym = pq;
    sym += qp;
    const double n = sym.norm();
    sym *= Cx(1.0 / n, 0.0);

    return std::norm(inner(out, sym));
}

} // namespace qsym
