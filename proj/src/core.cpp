#include "wgqed/core.hpp"

#include <cmath>

namespace wgqed {

KGrid KGrid::make(double center, double extent, int points) {
    if (points < 16 || points % 2 != 0) fail_validation("grid.points must be even and >= 16");
    if (!(extent > 0.0)) fail_validation("grid extent must be positive");
    KGrid g;
    g.center = center;
    g.extent = extent;
    g.points = points;
    g.step = 2.0 * extent / points;
    g.samples.resize(points);
    for (int i = 0; i < points; ++i)
        g.samples[i] = center - extent + (i + 0.5) * g.step;
    return g;
}

ValidatedScenario validate(const Scenario& s) {
    if (s.system.n_atoms < 1) fail_validation("system.n_atoms must be >= 1");
    if (s.system.spacing < 0.0) fail_validation("system.spacing must be >= 0");
    if (s.system.gamma_wg < 0.0) fail_validation("system.gamma_wg must be >= 0");
    if (s.system.gamma_free < 0.0) fail_validation("system.gamma_free must be >= 0");
    if (!(s.pulse.width > 0.0)) fail_validation("degenerate pulse width");
    if (s.grid.points < 16 || s.grid.points % 2 != 0)
        fail_validation("grid.points must be even and >= 16");
    if (s.grid.extent_over_width < 3.0)
        fail_truncation("grid extent below 3 pulse widths truncates the spectrum");
    if (s.pulse.shape == PulseShape::inversion && s.system.gamma_wg == 0.0)
        fail_validation("inversion pulse requires nonzero waveguide coupling");

    ValidatedScenario v;
    v.system = s.system;
    v.pulse = s.pulse;
    v.regularize_dark_modes = s.regularize_dark_modes;
    v.width = s.pulse.width;
    v.eta = s.system.gamma_wg;
    v.gamma = s.system.gamma_wg * v.width * kGroupVelocity;
    v.gamma_free = s.system.gamma_free * v.gamma;
    v.detuning = s.pulse.center_detuning * v.width;
    v.offset = s.pulse.initial_offset < 0.0 ? 10.0 / v.width : s.pulse.initial_offset;
    v.pulse.initial_offset = v.offset;
    v.pulse_center = s.system.r1 - v.offset;
    v.arrival_time = v.offset / kGroupVelocity;
    v.phase_ka_a = kResonantWavevector * s.system.spacing;
    v.positions.resize(s.system.n_atoms);
    for (int j = 0; j < s.system.n_atoms; ++j)
        v.positions[j] = s.system.r1 + j * s.system.spacing;
    v.grid = KGrid::make(v.detuning, s.grid.extent_over_width * v.width, s.grid.points);
    return v;
}

}  // namespace wgqed
