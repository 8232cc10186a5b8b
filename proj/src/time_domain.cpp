#include "wgqed/time_domain.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "wgqed/cerf.hpp"
#include "wgqed/kernels.hpp"
#include "wgqed/pulse.hpp"
#include "wgqed/threading.hpp"

namespace wgqed {

namespace {

constexpr double kPi = 3.14159265358979323846;
const cplx kImag{0.0, 1.0};

struct History {
    int n_atoms = 0;
    double step = 0.0;
    std::size_t completed = 0;  // nodes with value and derivative stored
    std::vector<cplx> y;        // node values, atom-major per node
    std::vector<cplx> f;        // node derivatives
    DelayInterpolation interp = DelayInterpolation::cubic;

    // Value of atom l at time t <= completed node time. Zero before t=0.
    cplx at(int l, double t) const {
        if (t < 0.0) return {0.0, 0.0};
        if (t == 0.0 || completed < 2) return y[l];
        double pos = t / step;
        auto seg = static_cast<std::size_t>(pos);
        if (seg >= completed - 1) seg = completed - 2;
        const double th = pos - static_cast<double>(seg);
        const cplx y0 = y[seg * n_atoms + l];
        const cplx y1 = y[(seg + 1) * n_atoms + l];
        if (interp == DelayInterpolation::linear) return (1.0 - th) * y0 + th * y1;
        const cplx f0 = f[seg * n_atoms + l];
        const cplx f1 = f[(seg + 1) * n_atoms + l];
        const double t2 = th * th, t3 = t2 * th;
        return (2.0 * t3 - 3.0 * t2 + 1.0) * y0 + (t3 - 2.0 * t2 + th) * step * f0 +
               (-2.0 * t3 + 3.0 * t2) * y1 + (t3 - t2) * step * f1;
    }
};

}  // namespace

DdeSettings default_dde_settings(const ValidatedScenario& scn) {
    DdeSettings s;
    const double rate = std::max(scn.gamma + scn.gamma_free, scn.width * kGroupVelocity);
    s.step = 1.0 / (50.0 * rate);
    if (scn.system.n_atoms > 1 && scn.system.spacing > 0.0)
        s.step = std::min(s.step, scn.system.spacing / kGroupVelocity);
    s.horizon = scn.arrival_time + 30.0 / rate;
    return s;
}

AmplitudeTrajectory integrate_dde(const ValidatedScenario& scn, const DdeSettings& settings) {
    const int n = scn.system.n_atoms;
    DdeSettings eff = settings;
    const DdeSettings defaults = default_dde_settings(scn);
    if (eff.step <= 0.0) eff.step = defaults.step;
    if (eff.horizon <= 0.0) eff.horizon = defaults.horizon;
    const double h = eff.step;
    const double min_delay = scn.system.spacing / kGroupVelocity;
    const bool delayed = eff.retardation == Retardation::full && n > 1 && min_delay > 0.0;
    if (delayed && h > min_delay * (1.0 + 1e-12))
        fail_validation("time step exceeds the smallest retardation delay");

    const auto steps = static_cast<std::size_t>(std::ceil(eff.horizon / h - 1e-9));
    const std::size_t nodes = steps + 1;

    // Pair coefficients and delays depend only on the index distance.
    std::vector<cplx> coeff(n);
    std::vector<double> delay(n);
    for (int m = 0; m < n; ++m) {
        coeff[m] = 0.5 * scn.gamma * std::polar(1.0, scn.phase_ka_a * m);
        delay[m] = m * min_delay;
    }
    const cplx diag = coeff[0] + 0.5 * scn.gamma_free;

    // Drive tabulated on the half-step grid used by the RK4 stages.
    std::vector<cplx> drive(n * (2 * steps + 1));
    parallel_for(2 * steps + 1, [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i)
            for (int j = 0; j < n; ++j)
                drive[i * n + j] = drive_term(scn, j, 0.5 * h * static_cast<double>(i));
    });

    History hist;
    hist.n_atoms = n;
    hist.step = h;
    hist.interp = eff.interpolation;
    hist.y.assign(nodes * n, cplx{0.0, 0.0});
    hist.f.assign(nodes * n, cplx{0.0, 0.0});
    hist.completed = 1;

    std::vector<cplx> y(n), k1(n), k2(n), k3(n), k4(n), stage(n);
    std::vector<cplx> delayed_vals(delayed ? n * n : 0);

    // delayed_vals[m*n + l] = alpha_l(t - delay_m), shared across target atoms
    auto gather_delayed = [&](double t) {
        for (int m = 1; m < n; ++m)
            for (int l = 0; l < n; ++l) delayed_vals[m * n + l] = hist.at(l, t - delay[m]);
    };

    auto rhs = [&](std::size_t half_index, const std::vector<cplx>& state,
                   std::vector<cplx>& out) {
        for (int j = 0; j < n; ++j) {
            cplx acc = drive[half_index * n + j] - diag * state[j];
            for (int m = 1; m < n; ++m) {
                cplx neighbors{0.0, 0.0};
                if (delayed) {
                    if (j - m >= 0) neighbors += delayed_vals[m * n + j - m];
                    if (j + m < n) neighbors += delayed_vals[m * n + j + m];
                } else {
                    if (j - m >= 0) neighbors += state[j - m];
                    if (j + m < n) neighbors += state[j + m];
                }
                acc -= coeff[m] * neighbors;
            }
            out[j] = acc;
        }
    };

    if (delayed) gather_delayed(0.0);
    rhs(0, y, k1);
    std::copy(k1.begin(), k1.end(), hist.f.begin());

    for (std::size_t i = 0; i < steps; ++i) {
        const double t = h * static_cast<double>(i);
        std::copy(hist.f.begin() + i * n, hist.f.begin() + (i + 1) * n, k1.begin());

        if (delayed) gather_delayed(t + 0.5 * h);
        for (int j = 0; j < n; ++j) stage[j] = y[j] + 0.5 * h * k1[j];
        rhs(2 * i + 1, stage, k2);
        for (int j = 0; j < n; ++j) stage[j] = y[j] + 0.5 * h * k2[j];
        rhs(2 * i + 1, stage, k3);

        if (delayed) gather_delayed(t + h);
        for (int j = 0; j < n; ++j) stage[j] = y[j] + h * k3[j];
        rhs(2 * i + 2, stage, k4);

        for (int j = 0; j < n; ++j) {
            y[j] += h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
            if (std::abs(y[j]) > 1.0 + 1e-6)
                fail_numerical("amplitude exceeded unity; integration unstable");
            hist.y[(i + 1) * n + j] = y[j];
        }
        hist.completed = i + 2;
        rhs(2 * i + 2, y, k2);
        std::copy(k2.begin(), k2.end(), hist.f.begin() + (i + 1) * n);
    }

    AmplitudeTrajectory traj;
    traj.step = h;
    traj.n_atoms = n;
    traj.times.resize(nodes);
    for (std::size_t i = 0; i < nodes; ++i) traj.times[i] = h * static_cast<double>(i);
    traj.amplitudes = std::move(hist.y);
    return traj;
}

cplx single_atom_analytic(const ValidatedScenario& scn, double t) {
    if (scn.system.n_atoms != 1) fail_validation("analytic solution needs a single atom");
    if (scn.pulse.shape != PulseShape::gaussian)
        fail_validation("analytic solution needs the Gaussian pulse");
    const double v = kGroupVelocity;
    const double total = scn.gamma + scn.gamma_free;
    const cplx a{-0.5 * total, scn.detuning * v};
    const double b = 0.25 * scn.width * scn.width * v * v;
    const double sqrt_b = 0.5 * scn.width * v;
    const double ta = scn.arrival_time;
    const cplx c = (a - 2.0 * b * ta) / (2.0 * sqrt_b);
    const cplx s = std::pow(kPi / 8.0, 0.25) * std::sqrt(scn.gamma / (scn.width * v)) *
                   std::polar(1.0, kResonantWavevector * scn.positions.front()) *
                   std::exp(a * a / (4.0 * b) + 0.5 * total * ta);
    return -kImag * s * (cerf(c + sqrt_b * t) - cerf(c)) * std::exp(-0.5 * total * t);
}

SpectralSolution finite_time_spectra(const ValidatedScenario& scn,
                                     const AmplitudeTrajectory& traj, double t) {
    const int n = scn.system.n_atoms;
    const std::size_t nk = scn.grid.samples.size();
    if (traj.n_atoms != n || traj.times.empty()) fail_validation("trajectory mismatch");

    std::size_t last = traj.times.size() - 1;
    if (t >= 0.0) {
        if (t > traj.times.back() + 1e-9 * traj.step)
            fail_validation("requested time beyond the trajectory");
        last = std::min<std::size_t>(static_cast<std::size_t>(t / traj.step + 1e-9), last);
    }
    const std::size_t nt = last + 1;

    SpectralSolution sol;
    sol.grid = scn.grid;
    sol.n_atoms = n;
    sol.width = scn.width;
    const SpectralAmplitude amp = spectral_amplitude(scn);
    sol.warnings = amp.warnings;
    sol.input = sample_spectrum(amp, scn.grid);
    sol.chi.assign(nk * n, cplx{0.0, 0.0});
    sol.beta_r = sol.input;
    sol.beta_l.assign(nk, cplx{0.0, 0.0});

    double residual = 0.0;
    for (int j = 0; j < n; ++j) residual += traj.probability(last, j);
    if (residual > 1e-4)
        sol.warnings.push_back("atomic excitation " + std::to_string(residual) +
                               " has not decayed; spectra not converged");
    if (nt < 2) return sol;

    // One amplitude row per atom, contiguous over time for the kernels.
    std::vector<cplx> rows(static_cast<std::size_t>(n) * nt);
    for (std::size_t i = 0; i < nt; ++i)
        for (int j = 0; j < n; ++j)
            rows[static_cast<std::size_t>(j) * nt + i] = traj.amplitudes[i * n + j];

    const double h = traj.step;
    const double v = kGroupVelocity;
    const cplx scale = -kImag * std::sqrt(scn.gamma * v / (4.0 * kPi)) * h;
    parallel_for(nk, [&](std::size_t begin, std::size_t end) {
        for (std::size_t m = begin; m < end; ++m) {
            const double dk = scn.grid.samples[m];
            cplx right{0.0, 0.0}, left{0.0, 0.0};
            for (int j = 0; j < n; ++j) {
                const cplx time_sum = kernels::phased_sum_trapezoid(
                    rows.data() + static_cast<std::size_t>(j) * nt, nt, 0.0, dk * v * h);
                sol.chi[static_cast<std::size_t>(j) * nk + m] = h * time_sum;
                const double phase = (kResonantWavevector + dk) * scn.positions[j];
                right += time_sum * std::polar(1.0, -phase);
                left += time_sum * std::polar(1.0, phase);
            }
            sol.beta_r[m] += scale * right;
            sol.beta_l[m] = scale * left;
        }
    });
    return sol;
}

}  // namespace wgqed
