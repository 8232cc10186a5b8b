#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace wgqed {

using cplx = std::complex<double>;

// Unit conventions used throughout: group velocity 1, resonant wavelength 1
// (so the resonant wavevector is 2*pi), lengths in wavelengths, rates in
// inverse length. Coupling is supplied as the ratio to the pulse bandwidth
// and free-space decay as the ratio to the waveguide coupling, which are the
// only combinations the observables depend on.
constexpr double kGroupVelocity = 1.0;
constexpr double kResonantWavevector = 6.283185307179586476925286766559;

enum class ErrorKind { validation, truncation, numerical };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail_validation(const std::string& msg) {
    throw Error(ErrorKind::validation, msg);
}
[[noreturn]] inline void fail_truncation(const std::string& msg) {
    throw Error(ErrorKind::truncation, msg);
}
[[noreturn]] inline void fail_numerical(const std::string& msg) {
    throw Error(ErrorKind::numerical, msg);
}

enum class PulseShape { gaussian, inversion };

struct SystemConfig {
    int n_atoms = 1;
    double spacing = 0.5;     // wavelengths
    double gamma_wg = 1.0;    // waveguide coupling over (bandwidth * v_g)
    double gamma_free = 0.0;  // free-space decay over waveguide coupling
    double r1 = 0.0;          // first atom position
};

struct PulseSpec {
    PulseShape shape = PulseShape::gaussian;
    double width = 0.05;          // spectral width, inverse length
    double center_detuning = 0.0; // in units of width
    double initial_offset = -1.0; // pulse center to first atom at t=0; <0 selects 10/width
};

// Detuning grid for the spectral solver. Samples sit half a step off the
// center so the grid straddles, never hits, the center itself; with an even
// count the resonance point can only coincide with a sample for pathological
// user detunings, which the solver guards against separately.
struct KGrid {
    double center = 0.0;  // absolute detuning of the grid center
    double extent = 0.0;  // absolute half-width
    int points = 0;
    double step = 0.0;
    std::vector<double> samples;

    static KGrid make(double center, double extent, int points);
};

struct GridSpec {
    double extent_over_width = 8.0;
    int points = 4096;
};

struct Scenario {
    SystemConfig system;
    PulseSpec pulse;
    GridSpec grid;
    bool regularize_dark_modes = false;
};

// Immutable result of validate(): all invariants checked, derived quantities
// precomputed. Safe to share across threads.
struct ValidatedScenario {
    SystemConfig system;
    PulseSpec pulse;
    KGrid grid;
    bool regularize_dark_modes = false;

    double width = 0.0;           // pulse spectral width
    double gamma = 0.0;           // absolute waveguide coupling
    double gamma_free = 0.0;      // absolute free-space decay
    double eta = 0.0;             // gamma / (width * v_g)
    double detuning = 0.0;        // absolute center detuning
    double offset = 0.0;          // pulse center to first atom at t=0
    double pulse_center = 0.0;    // pulse center position at t=0
    double arrival_time = 0.0;    // offset / v_g
    double phase_ka_a = 0.0;      // resonant phase across one spacing
    std::vector<double> positions;
};

ValidatedScenario validate(const Scenario& s);

struct AmplitudeTrajectory {
    double step = 0.0;
    int n_atoms = 0;
    std::vector<double> times;
    std::vector<cplx> amplitudes;  // times.size() * n_atoms, atom index fastest

    cplx alpha(std::size_t i, int j) const { return amplitudes[i * n_atoms + j]; }
    double probability(std::size_t i, int j) const { return std::norm(alpha(i, j)); }
};

// Outgoing amplitudes are stored in the quantization-length-free
// normalization where the integral of |.|^2 over detuning is a probability.
struct SpectralSolution {
    KGrid grid;
    int n_atoms = 0;
    double width = 1.0;  // pulse spectral width, the unit for feature reports
    std::vector<cplx> input;   // input spectrum on the grid
    std::vector<cplx> chi;     // atom response, atom-major [j * points + m]
    std::vector<cplx> beta_r;  // right-moving outgoing
    std::vector<cplx> beta_l;  // left-moving outgoing
    double max_residual = 0.0;
    std::vector<std::string> warnings;

    cplx chi_at(int j, std::size_t m) const { return chi[static_cast<std::size_t>(j) * grid.samples.size() + m]; }
};

struct SpectralFeature {
    enum class Kind { peak, dip, fwhm, bandgap };
    Kind kind = Kind::peak;
    std::string channel;      // "input", "reflected", "transmitted"
    double location = 0.0;    // detuning in units of the pulse width
    double width = 0.0;       // in units of width * v_g where applicable
    double threshold = 0.0;   // bandgap cutoff
};

struct TransportSummary {
    double reflectivity = 0.0;
    double transmittivity = 0.0;
    std::vector<SpectralFeature> features;
    std::vector<std::string> warnings;

    double guided_fraction() const { return reflectivity + transmittivity; }
};

}  // namespace wgqed
