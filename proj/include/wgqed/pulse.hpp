#pragma once

#include <string>
#include <vector>

#include "wgqed/core.hpp"

namespace wgqed {

// Single-photon spectral amplitude, square-normalized so the integral of
// |phi|^2 over detuning is 1. envelope() is the centered form; operator()
// adds the linear phase that places the pulse center at `position` at t=0.
struct SpectralAmplitude {
    PulseShape shape = PulseShape::gaussian;
    double norm = 0.0;
    double center = 0.0;       // absolute center detuning
    double width_param = 0.0;  // gaussian width, or lorentzian half-width
    double position = 0.0;     // pulse center at t=0
    double bandwidth = 0.0;    // effective spectral support scale
    std::vector<std::string> warnings;

    cplx envelope(double dk) const;
    cplx operator()(double dk) const;
};

SpectralAmplitude gaussian_spectrum(const ValidatedScenario& scn);
SpectralAmplitude inversion_spectrum(const ValidatedScenario& scn);
SpectralAmplitude spectral_amplitude(const ValidatedScenario& scn);

std::vector<cplx> sample_spectrum(const SpectralAmplitude& amp, const KGrid& grid);

// Excitation amplitude fed to atom j at time t by the input photon.
// Closed form; exact for both pulse shapes.
cplx drive_term(const ValidatedScenario& scn, int j, double t);

// Quadrature route over the scenario grid, kept as an independent check of
// the closed form. Fails when the grid cannot carry the spectrum.
class DriveQuadrature {
public:
    explicit DriveQuadrature(const ValidatedScenario& scn);
    cplx eval(int j, double t) const;

private:
    KGrid grid_;
    std::vector<cplx> phi_;
    std::vector<double> positions_;
    double prefactor_ = 0.0;
};

}  // namespace wgqed
