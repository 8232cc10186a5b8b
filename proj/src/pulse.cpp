#include "wgqed/pulse.hpp"

#include <cmath>

#include "wgqed/kernels.hpp"

namespace wgqed {

namespace {
constexpr double kPi = 3.14159265358979323846;
const cplx kImag{0.0, 1.0};
}  // namespace

cplx SpectralAmplitude::envelope(double dk) const {
    const double u = dk - center;
    if (shape == PulseShape::gaussian)
        return {norm * std::exp(-u * u / (width_param * width_param)), 0.0};
    return norm / cplx{width_param, u * kGroupVelocity};
}

cplx SpectralAmplitude::operator()(double dk) const {
    return envelope(dk) * std::polar(1.0, -dk * position);
}

SpectralAmplitude gaussian_spectrum(const ValidatedScenario& scn) {
    SpectralAmplitude a;
    a.shape = PulseShape::gaussian;
    a.norm = std::pow(8.0 * kPi, 0.25) / std::sqrt(2.0 * kPi * scn.width);
    a.center = scn.detuning;
    a.width_param = scn.width;
    a.position = scn.pulse_center;
    a.bandwidth = scn.width;
    return a;
}

SpectralAmplitude inversion_spectrum(const ValidatedScenario& scn) {
    if (!(scn.gamma > 0.0)) fail_validation("inversion pulse requires nonzero coupling");
    SpectralAmplitude a;
    a.shape = PulseShape::inversion;
    a.norm = std::sqrt(scn.gamma * kGroupVelocity / (2.0 * kPi));
    a.center = scn.detuning;
    a.width_param = 0.5 * scn.gamma;  // lorentzian half-width times v_g
    a.position = scn.pulse_center;
    a.bandwidth = 0.5 * scn.gamma / kGroupVelocity;
    if (a.bandwidth < 3.0 * scn.grid.step)
        fail_truncation("inversion line narrower than the grid resolution");
    const double tail = (2.0 / kPi) * std::atan(a.bandwidth / scn.grid.extent);
    if (tail > 1e-2)
        a.warnings.push_back("inversion spectrum tails beyond the grid carry " +
                             std::to_string(tail) + " of the norm");
    return a;
}

SpectralAmplitude spectral_amplitude(const ValidatedScenario& scn) {
    return scn.pulse.shape == PulseShape::gaussian ? gaussian_spectrum(scn)
                                                   : inversion_spectrum(scn);
}

std::vector<cplx> sample_spectrum(const SpectralAmplitude& amp, const KGrid& grid) {
    std::vector<cplx> out(grid.samples.size());
    for (std::size_t m = 0; m < grid.samples.size(); ++m) out[m] = amp(grid.samples[m]);
    return out;
}

cplx drive_term(const ValidatedScenario& scn, int j, double t) {
    if (j < 0 || j >= scn.system.n_atoms) fail_validation("atom index out of range");
    if (scn.gamma == 0.0) return {0.0, 0.0};
    const double v = kGroupVelocity;
    const double dj = scn.positions[j] - scn.pulse_center;  // pulse center to atom j
    const double s = v * t - dj;
    const cplx carrier = std::polar(1.0, kResonantWavevector * scn.positions[j] -
                                             scn.detuning * s);
    if (scn.pulse.shape == PulseShape::gaussian) {
        const double k = std::sqrt(scn.gamma * v * scn.width) / std::pow(8.0 * kPi, 0.25);
        return -kImag * k * carrier * std::exp(-0.25 * scn.width * scn.width * s * s);
    }
    if (s > 0.0) return {0.0, 0.0};
    return -kImag * (scn.gamma / std::sqrt(2.0)) * carrier *
           std::exp(0.5 * scn.gamma * s / v);
}

DriveQuadrature::DriveQuadrature(const ValidatedScenario& scn)
    : grid_(scn.grid), positions_(scn.positions) {
    const SpectralAmplitude amp = spectral_amplitude(scn);
    phi_ = sample_spectrum(amp, grid_);
    double peak = 0.0;
    for (const cplx& p : phi_) peak = std::max(peak, std::norm(p));
    const double edge = std::max(std::norm(phi_.front()), std::norm(phi_.back()));
    if (peak == 0.0 || edge > 1e-6 * peak)
        fail_truncation("spectral grid extent insufficient for drive quadrature");
    prefactor_ = std::sqrt(scn.gamma * kGroupVelocity / (4.0 * kPi));
}

cplx DriveQuadrature::eval(int j, double t) const {
    if (j < 0 || j >= static_cast<int>(positions_.size()))
        fail_validation("atom index out of range");
    const double arg = positions_[j] - kGroupVelocity * t;
    const double theta0 = kResonantWavevector * positions_[j] + grid_.samples.front() * arg;
    const cplx s = kernels::phased_sum_trapezoid(phi_.data(), phi_.size(), theta0,
                                                 grid_.step * arg);
    return -kImag * prefactor_ * grid_.step * s;
}

}  // namespace wgqed
