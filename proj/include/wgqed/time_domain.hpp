#pragma once

#include "wgqed/core.hpp"

namespace wgqed {

enum class DelayInterpolation { linear, cubic };
enum class Retardation { full, markovian };

struct DdeSettings {
    double step = 0.0;     // <= 0 selects the default
    double horizon = 0.0;  // <= 0 selects arrival + 30/gamma
    DelayInterpolation interpolation = DelayInterpolation::cubic;
    Retardation retardation = Retardation::full;
};

DdeSettings default_dde_settings(const ValidatedScenario& scn);

// Integrates the retarded amplitude equations with classical fixed-step RK4.
// Inter-atom terms are delayed by the photon travel time and read from the
// stored history by Hermite (or linear) interpolation; the step must not
// exceed the smallest nonzero delay so every delayed lookup lands in
// completed history.
AmplitudeTrajectory integrate_dde(const ValidatedScenario& scn, const DdeSettings& settings);

// Closed-form single-atom response to the Gaussian pulse (error-function
// form). Free-space decay folds into the total decay constant.
cplx single_atom_analytic(const ValidatedScenario& scn, double t);

// Outgoing spectra accumulated from the trajectory up to time t (t < 0 means
// the end of the trajectory). Converges to the stationary solution once the
// atoms have decayed.
SpectralSolution finite_time_spectra(const ValidatedScenario& scn,
                                     const AmplitudeTrajectory& traj, double t = -1.0);

}  // namespace wgqed
