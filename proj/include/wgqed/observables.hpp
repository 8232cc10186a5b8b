#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wgqed/core.hpp"

namespace wgqed {

// Reflectivity and transmittivity by trapezoid quadrature on the solver grid,
// plus detected spectral features.
TransportSummary reflect_transmit(const SpectralSolution& sol);

// Prefactor convention for the single-atom reflectivity integral over the
// coupling ratio. The printed constant sqrt(pi/2) overshoots probability for
// strong coupling; the corrected sqrt(2/pi) restores R -> 1.
enum class RtPrefactor { printed, corrected };

double one_atom_reflectivity_eta(double eta, RtPrefactor pref = RtPrefactor::corrected);

// Transmission peak detunings, in units of the pulse width.
std::pair<double, double> transmission_peaks(double eta);

struct PulseShapeField {
    std::vector<double> x;
    std::vector<cplx> right;
    std::vector<cplx> left;
    std::vector<std::string> warnings;
};

// Real-space field envelopes at time t synthesized from the spectra.
// Normalized so the integral of |left|^2 over x equals the reflectivity.
PulseShapeField pulse_shape(const SpectralSolution& sol, double x_min, double x_max,
                            int points, double t);

struct FeatureThresholds {
    double bandgap = 0.01;     // transmitted fraction of the input peak density
    double peak_floor = 1e-4;  // peaks below this fraction of the maximum are ripple
};

std::vector<SpectralFeature> spectral_features(const SpectralSolution& sol,
                                               const FeatureThresholds& thr = {});

struct ConcurrenceTrajectory {
    std::vector<double> times;
    std::vector<double> values;
};

// Pairwise entanglement of the two-atom state from the excitation amplitudes.
ConcurrenceTrajectory concurrence_trajectory(const AmplitudeTrajectory& traj);

enum class ScanAxis { detuning, spacing, coupling, n_atoms };

struct ScanRow {
    double value = 0.0;
    bool ok = false;
    std::string error;
    TransportSummary summary;
};

// Runs the spectral pipeline once per axis value. Per-point failures are
// recorded in the row and the scan continues.
std::vector<ScanRow> parameter_scan(const Scenario& base, ScanAxis axis,
                                    const std::vector<double>& values);

}  // namespace wgqed
