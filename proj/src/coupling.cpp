#include "wgqed/coupling.hpp"

#include <algorithm>
#include <cmath>

namespace wgqed {

Eigen::MatrixXcd build_v(int n_atoms, double gamma, double spacing, double delta_k) {
    const double k = kResonantWavevector + delta_k;
    Eigen::MatrixXcd v(n_atoms, n_atoms);
    for (int j = 0; j < n_atoms; ++j)
        for (int l = 0; l < n_atoms; ++l)
            v(j, l) = -0.5 * gamma * std::polar(1.0, k * spacing * std::abs(j - l));
    return v;
}

Eigen::MatrixXcd build_v(const ValidatedScenario& scn, double delta_k) {
    return build_v(scn.system.n_atoms, scn.gamma, scn.system.spacing, delta_k);
}

MMatrix build_m(int n_atoms, double gamma, double gamma_free, double spacing, double delta_k) {
    MMatrix out;
    out.m = -build_v(n_atoms, gamma, spacing, delta_k);
    const cplx shift{0.5 * gamma_free, -delta_k * kGroupVelocity};
    out.m.diagonal().array() += shift;
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(out.m);
    out.rcond = lu.rcond();
    out.near_singular = !(out.rcond > 1e-12);
    return out;
}

MMatrix build_m(const ValidatedScenario& scn, double delta_k) {
    return build_m(scn.system.n_atoms, scn.gamma, scn.gamma_free, scn.system.spacing, delta_k);
}

std::vector<EigenMode> eigenmodes(int n_atoms, double gamma, double spacing, double delta_k) {
    const Eigen::MatrixXcd v = build_v(n_atoms, gamma, spacing, delta_k);
    std::vector<EigenMode> modes(n_atoms);
    if (n_atoms == 1) {
        modes[0].value = v(0, 0);
        modes[0].vector = Eigen::VectorXcd::Ones(1);
        return modes;
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(v);
    if (solver.info() != Eigen::Success) fail_numerical("eigendecomposition failed");
    for (int i = 0; i < n_atoms; ++i) {
        modes[i].value = solver.eigenvalues()(i);
        modes[i].vector = solver.eigenvectors().col(i);
        modes[i].vector.normalize();
    }
    std::sort(modes.begin(), modes.end(), [](const EigenMode& a, const EigenMode& b) {
        if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
        return a.value.imag() < b.value.imag();
    });
    return modes;
}

std::vector<EigenMode> eigenmodes(const ValidatedScenario& scn, double delta_k) {
    return eigenmodes(scn.system.n_atoms, scn.gamma, scn.system.spacing, delta_k);
}

std::array<cplx, 2> two_atom_eigenvalues(double gamma, double spacing, double delta_k) {
    const double k = kResonantWavevector + delta_k;
    const cplx phase = std::polar(1.0, k * spacing);
    return {-0.5 * gamma * (1.0 + phase), -0.5 * gamma * (1.0 - phase)};
}

}  // namespace wgqed
