#include "wgqed/freq_domain.hpp"

#include <Eigen/Dense>

#include <atomic>
#include <cmath>
#include <string>

#include "wgqed/coupling.hpp"
#include "wgqed/kernels.hpp"
#include "wgqed/pulse.hpp"
#include "wgqed/threading.hpp"

namespace wgqed {

namespace {
constexpr double kPi = 3.14159265358979323846;
const cplx kImag{0.0, 1.0};
}  // namespace

SpectralSolution solve_chi(const ValidatedScenario& scn) {
    const int n = scn.system.n_atoms;
    const std::size_t nk = scn.grid.samples.size();
    SpectralSolution sol;
    sol.grid = scn.grid;
    sol.n_atoms = n;
    sol.width = scn.width;
    const SpectralAmplitude amp = spectral_amplitude(scn);
    sol.warnings = amp.warnings;
    sol.input = sample_spectrum(amp, scn.grid);
    sol.chi.assign(nk * n, cplx{0.0, 0.0});

    const double drive_scale = std::sqrt(kPi * scn.gamma / kGroupVelocity);
    std::vector<double> residuals(nk, 0.0);
    std::atomic<bool> singular{false};
    std::atomic<std::size_t> singular_at{0};

    parallel_for(nk, [&](std::size_t begin, std::size_t end) {
        Eigen::VectorXcd b(n), chi(n);
        for (std::size_t m = begin; m < end; ++m) {
            if (singular.load(std::memory_order_relaxed)) return;
            const double dk = scn.grid.samples[m];
            MMatrix mm = build_m(scn, dk);
            if (mm.near_singular) {
                if (!scn.regularize_dark_modes) {
                    singular.store(true, std::memory_order_relaxed);
                    singular_at.store(m, std::memory_order_relaxed);
                    return;
                }
                mm = build_m(n, scn.gamma, scn.gamma_free + 1e-12 * scn.gamma,
                             scn.system.spacing, dk);
            }
            const cplx phi = sol.input[m];
            for (int j = 0; j < n; ++j)
                b(j) = -kImag * drive_scale * phi *
                       std::polar(1.0, (kResonantWavevector + dk) * scn.positions[j]);
            Eigen::PartialPivLU<Eigen::MatrixXcd> lu(mm.m);
            chi = lu.solve(b);
            const double bn = b.norm();
            if (bn > 0.0) residuals[m] = (mm.m * chi - b).norm() / bn;
            for (int j = 0; j < n; ++j) sol.chi[static_cast<std::size_t>(j) * nk + m] = chi(j);
        }
    });

    if (singular.load())
        fail_numerical("singular spectral system near detuning " +
                       std::to_string(scn.grid.samples[singular_at.load()]) +
                       "; enable dark-mode regularization");
    for (double r : residuals) sol.max_residual = std::max(sol.max_residual, r);
    if (sol.max_residual > 1e-10)
        fail_numerical("spectral solve residual " + std::to_string(sol.max_residual) +
                       " exceeds 1e-10");
    return sol;
}

void outgoing_spectra(const ValidatedScenario& scn, SpectralSolution& sol) {
    const int n = sol.n_atoms;
    const std::size_t nk = sol.grid.samples.size();
    sol.beta_r = sol.input;
    sol.beta_l.assign(nk, cplx{0.0, 0.0});
    const cplx scale = -kImag * std::sqrt(scn.gamma * kGroupVelocity / (4.0 * kPi));
    const double dk0 = sol.grid.samples.front();
    for (int j = 0; j < n; ++j) {
        const cplx* chi_j = sol.chi.data() + static_cast<std::size_t>(j) * nk;
        const double rj = scn.positions[j];
        kernels::axpy_phased(sol.beta_r.data(), chi_j, nk, scale,
                             -(kResonantWavevector + dk0) * rj, -sol.grid.step * rj);
        kernels::axpy_phased(sol.beta_l.data(), chi_j, nk, scale,
                             (kResonantWavevector + dk0) * rj, sol.grid.step * rj);
    }
}

SpectralSolution solve_spectra(const ValidatedScenario& scn) {
    SpectralSolution sol = solve_chi(scn);
    outgoing_spectra(scn, sol);
    return sol;
}

std::pair<cplx, cplx> closed_form_spectra(ClosedFormVariant variant,
                                          const ValidatedScenario& scn, double delta_k) {
    const double v = kGroupVelocity;
    const double g = scn.gamma;
    const cplx phi = spectral_amplitude(scn)(delta_k);
    const double k = kResonantWavevector + delta_k;
    const cplx r1_phase = std::polar(1.0, 2.0 * k * scn.positions.front());

    switch (variant) {
        case ClosedFormVariant::one_atom: {
            if (scn.system.n_atoms != 1) fail_validation("one_atom variant needs one atom");
            if (scn.gamma_free != 0.0) fail_validation("one_atom variant assumes no free decay");
            const cplx d = 1.0 - 2.0 * kImag * delta_k * v / g;
            return {-(2.0 * kImag * delta_k * v / g) * phi / d, -r1_phase * phi / d};
        }
        case ClosedFormVariant::two_atom: {
            if (scn.system.n_atoms != 2) fail_validation("two_atom variant needs two atoms");
            if (scn.gamma_free != 0.0) fail_validation("two_atom variant assumes no free decay");
            const cplx q = std::polar(1.0, 2.0 * k * scn.system.spacing);
            const cplx z = 1.0 - 2.0 * kImag * delta_k * v / g;
            const cplx den = z * z - q;
            const cplx beta_r = phi * (-4.0 * delta_k * delta_k * v * v / (g * g)) / den;
            const cplx beta_l = -phi * r1_phase * ((1.0 + q) * z - 2.0 * q) / den;
            return {beta_r, beta_l};
        }
        case ClosedFormVariant::two_atom_decay: {
            if (scn.system.n_atoms != 2) fail_validation("two_atom_decay variant needs two atoms");
            const double gf = scn.gamma_free;
            const cplx q = std::polar(1.0, 2.0 * k * scn.system.spacing);
            const cplx z{g + gf, -2.0 * delta_k * v};
            const cplx num_r{gf * gf - 4.0 * delta_k * delta_k * v * v, -4.0 * delta_k * v * gf};
            const cplx den = z * z - g * g * q;
            const cplx beta_r = phi * num_r / den;
            const cplx beta_l = -g * phi * r1_phase * ((1.0 + q) * z - 2.0 * g * q) / den;
            return {beta_r, beta_l};
        }
    }
    fail_validation("unknown closed-form variant");
}

}  // namespace wgqed
