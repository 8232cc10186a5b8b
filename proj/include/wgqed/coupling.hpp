#pragma once

#include <Eigen/Dense>

#include <array>
#include <vector>

#include "wgqed/core.hpp"

namespace wgqed {

// Waveguide-mediated collective coupling matrix at wavevector k_a + delta_k:
// V_jl = -(gamma/2) exp(i k |r_j - r_l|). Complex-symmetric, not Hermitian.
Eigen::MatrixXcd build_v(int n_atoms, double gamma, double spacing, double delta_k);
Eigen::MatrixXcd build_v(const ValidatedScenario& scn, double delta_k);

// Spectral system matrix M = -V + (gamma_free/2 - i delta_k v_g) I with a
// near-singularity flag (dark modes at half-wavelength spacing).
struct MMatrix {
    Eigen::MatrixXcd m;
    double rcond = 1.0;
    bool near_singular = false;
};

MMatrix build_m(int n_atoms, double gamma, double gamma_free, double spacing, double delta_k);
MMatrix build_m(const ValidatedScenario& scn, double delta_k);

struct EigenMode {
    cplx value;               // real part: -collective half decay; imag: energy shift
    Eigen::VectorXcd vector;  // unit 2-norm
};

// Eigenmodes of V, sorted by ascending real part then imaginary part.
std::vector<EigenMode> eigenmodes(int n_atoms, double gamma, double spacing, double delta_k);
std::vector<EigenMode> eigenmodes(const ValidatedScenario& scn, double delta_k);

// Closed-form pair for two atoms: -(gamma/2)(1 +- exp(i k a)), with the
// symmetric combination first.
std::array<cplx, 2> two_atom_eigenvalues(double gamma, double spacing, double delta_k);

}  // namespace wgqed
