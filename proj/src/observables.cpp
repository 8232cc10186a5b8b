#include "wgqed/observables.hpp"

#include <algorithm>
#include <cmath>

#include "wgqed/freq_domain.hpp"
#include "wgqed/kernels.hpp"
#include "wgqed/threading.hpp"

namespace wgqed {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<double> density(const std::vector<cplx>& a) {
    std::vector<double> d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = std::norm(a[i]);
    return d;
}

void check_boundary(const std::vector<double>& d, const char* channel,
                    std::vector<std::string>& warnings) {
    const double peak = *std::max_element(d.begin(), d.end());
    if (peak <= 0.0) return;
    if (std::max(d.front(), d.back()) > 1e-6 * peak)
        warnings.push_back(std::string(channel) +
                           " spectral density at the grid boundary exceeds 1e-6 of the peak");
}

// Quadratic refinement of an extremum through three equispaced samples.
double refine_extremum(double xm, double step, double ym1, double y0, double yp1) {
    const double denom = ym1 - 2.0 * y0 + yp1;
    if (denom == 0.0) return xm;
    double shift = 0.5 * (ym1 - yp1) / denom;
    shift = std::clamp(shift, -0.5, 0.5);
    return xm + shift * step;
}

// Half-max crossing positions around the global maximum, linear interpolation.
bool fwhm_of(const std::vector<double>& x, const std::vector<double>& y, double& width,
             double& center) {
    const std::size_t imax = std::max_element(y.begin(), y.end()) - y.begin();
    const double half = 0.5 * y[imax];
    if (half <= 0.0) return false;
    double lo = x.front(), hi = x.back();
    bool found_lo = false, found_hi = false;
    for (std::size_t i = imax; i > 0; --i) {
        if (y[i - 1] <= half && y[i] >= half) {
            const double f = (half - y[i - 1]) / (y[i] - y[i - 1]);
            lo = x[i - 1] + f * (x[i] - x[i - 1]);
            found_lo = true;
            break;
        }
    }
    for (std::size_t i = imax; i + 1 < y.size(); ++i) {
        if (y[i] >= half && y[i + 1] <= half) {
            const double f = (y[i] - half) / (y[i] - y[i + 1]);
            hi = x[i] + f * (x[i + 1] - x[i]);
            found_hi = true;
            break;
        }
    }
    if (!found_lo || !found_hi) return false;
    width = hi - lo;
    center = 0.5 * (hi + lo);
    return true;
}

void find_peaks_and_dips(const std::vector<double>& x, const std::vector<double>& y,
                         const char* channel, double peak_floor, double width_unit,
                         std::vector<SpectralFeature>& out) {
    const double ymax = *std::max_element(y.begin(), y.end());
    if (ymax <= 0.0) return;
    const double floor = peak_floor * ymax;
    std::vector<std::size_t> maxima;
    for (std::size_t i = 1; i + 1 < y.size(); ++i) {
        if (y[i] >= y[i - 1] && y[i] > y[i + 1] && y[i] > floor) maxima.push_back(i);
        // plateaus of equal-height samples report each flank once
    }
    for (std::size_t i : maxima) {
        SpectralFeature f;
        f.kind = SpectralFeature::Kind::peak;
        f.channel = channel;
        f.location = refine_extremum(x[i], x[1] - x[0], y[i - 1], y[i], y[i + 1]) / width_unit;
        out.push_back(f);
    }
    // Dips only count between detected flanking maxima; tail ripple has none.
    for (std::size_t k = 0; k + 1 < maxima.size(); ++k) {
        std::size_t imin = maxima[k];
        for (std::size_t i = maxima[k]; i <= maxima[k + 1]; ++i)
            if (y[i] < y[imin]) imin = i;
        if (imin == maxima[k] || imin == maxima[k + 1]) continue;
        if (y[imin] > 0.5 * std::min(y[maxima[k]], y[maxima[k + 1]])) continue;
        SpectralFeature f;
        f.kind = SpectralFeature::Kind::dip;
        f.channel = channel;
        f.location =
            refine_extremum(x[imin], x[1] - x[0], y[imin - 1], y[imin], y[imin + 1]) / width_unit;
        out.push_back(f);
    }
}

}  // namespace

TransportSummary reflect_transmit(const SpectralSolution& sol) {
    TransportSummary s;
    const std::size_t n = sol.grid.samples.size();
    s.reflectivity = sol.grid.step * kernels::norm_sum_trapezoid(sol.beta_l.data(), n);
    s.transmittivity = sol.grid.step * kernels::norm_sum_trapezoid(sol.beta_r.data(), n);
    s.warnings = sol.warnings;
    check_boundary(density(sol.input), "input", s.warnings);
    check_boundary(density(sol.beta_l), "reflected", s.warnings);
    check_boundary(density(sol.beta_r), "transmitted", s.warnings);
    s.features = spectral_features(sol);
    return s;
}

double one_atom_reflectivity_eta(double eta, RtPrefactor pref) {
    if (!(eta > 0.0)) fail_validation("coupling ratio must be positive");
    const double c = pref == RtPrefactor::corrected ? std::sqrt(2.0 / kPi) : std::sqrt(kPi / 2.0);
    const int n = 16384;
    double acc = 0.0;
    if (eta >= 1.0) {
        // Integrand resolved on the plain detuning axis.
        const double span = 8.0;
        const double h = 2.0 * span / n;
        for (int i = 0; i < n; ++i) {
            const double y = -span + (i + 0.5) * h;
            acc += std::exp(-2.0 * y * y) / (1.0 + 4.0 * y * y / (eta * eta));
        }
        return c * acc * h;
    }
    // Narrow coupling: fold the lorentzian into the measure, y = (eta/2) tan u.
    const double h = kPi / n;
    for (int i = 0; i < n; ++i) {
        const double u = -0.5 * kPi + (i + 0.5) * h;
        const double ty = std::tan(u);
        acc += std::exp(-0.5 * eta * eta * ty * ty);
    }
    return c * 0.5 * eta * acc * h;
}

std::pair<double, double> transmission_peaks(double eta) {
    if (!(eta > 0.0)) fail_validation("coupling ratio must be positive");
    const double root =
        eta / (2.0 * std::sqrt(2.0)) * std::sqrt(-1.0 + std::sqrt(1.0 + 8.0 / (eta * eta)));
    return {root, -root};
}

PulseShapeField pulse_shape(const SpectralSolution& sol, double x_min, double x_max, int points,
                            double t) {
    if (points < 2 || !(x_max > x_min)) fail_validation("pulse shape grid is degenerate");
    PulseShapeField f;
    f.x.resize(points);
    f.right.resize(points);
    f.left.resize(points);
    const double dx = (x_max - x_min) / (points - 1);
    for (int i = 0; i < points; ++i) f.x[i] = x_min + i * dx;

    const double v = kGroupVelocity;
    const double extent = 12.0 / std::max(sol.width, 1e-300);
    if (x_max - x_min < v * t + extent)
        f.warnings.push_back("x grid span below v*t plus the pulse extent; synthesis may alias");

    const std::size_t nk = sol.grid.samples.size();
    const double dk0 = sol.grid.samples.front();
    const double hk = sol.grid.step;
    const double norm = hk / std::sqrt(2.0 * kPi);
    parallel_for(points, [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) {
            const double xr = f.x[i] - v * t;
            const double xl = f.x[i] + v * t;
            const cplx right =
                kernels::phased_sum_trapezoid(sol.beta_r.data(), nk, dk0 * xr, hk * xr);
            const cplx left =
                kernels::phased_sum_trapezoid(sol.beta_l.data(), nk, -dk0 * xl, -hk * xl);
            f.right[i] = norm * std::polar(1.0, kResonantWavevector * f.x[i]) * right;
            f.left[i] = norm * std::polar(1.0, -kResonantWavevector * f.x[i]) * left;
        }
    });
    return f;
}

std::vector<SpectralFeature> spectral_features(const SpectralSolution& sol,
                                               const FeatureThresholds& thr) {
    std::vector<SpectralFeature> out;
    const std::vector<double>& dk = sol.grid.samples;
    if (dk.size() < 3) return out;
    // Locations and widths are reported in units of the input pulse width.
    const double width_unit = sol.width > 0.0 ? sol.width : 1.0;

    const std::vector<double> in = density(sol.input);
    const std::vector<double> refl = density(sol.beta_l);
    const std::vector<double> trans = density(sol.beta_r);

    struct Channel {
        const char* name;
        const std::vector<double>* d;
    };
    for (const Channel& ch : {Channel{"input", &in}, Channel{"reflected", &refl},
                              Channel{"transmitted", &trans}}) {
        double w = 0.0, c = 0.0;
        if (fwhm_of(dk, *ch.d, w, c)) {
            SpectralFeature f;
            f.kind = SpectralFeature::Kind::fwhm;
            f.channel = ch.name;
            f.location = c / width_unit;
            f.width = w / (width_unit * kGroupVelocity);
            out.push_back(f);
        }
        if (ch.d != &in)
            find_peaks_and_dips(dk, *ch.d, ch.name, thr.peak_floor, width_unit, out);
    }

    // Bandgap: longest contiguous run where the transmitted density stays
    // below the threshold fraction of the input density at the same detuning.
    const double in_peak = *std::max_element(in.begin(), in.end());
    if (in_peak > 0.0) {
        const double support = 1e-9 * in_peak;
        auto ratio = [&](std::size_t i) { return trans[i] / in[i]; };
        std::size_t best_b = 0, best_e = 0, run_b = 0;
        bool in_run = false;
        for (std::size_t i = 0; i <= trans.size(); ++i) {
            const bool below =
                i < trans.size() && in[i] > support && ratio(i) < thr.bandgap;
            if (below && !in_run) {
                run_b = i;
                in_run = true;
            } else if (!below && in_run) {
                if (i - run_b > best_e - best_b) {
                    best_b = run_b;
                    best_e = i;
                }
                in_run = false;
            }
        }
        if (best_e > best_b + 1) {
            const double h = dk[1] - dk[0];
            double lo = dk[best_b], hi = dk[best_e - 1];
            if (best_b > 0 && in[best_b - 1] > support) {
                const double f = std::clamp(
                    (ratio(best_b - 1) - thr.bandgap) / (ratio(best_b - 1) - ratio(best_b)),
                    0.0, 1.0);
                lo = dk[best_b - 1] + f * h;
            }
            if (best_e < trans.size() && in[best_e] > support) {
                const double f = std::clamp(
                    (ratio(best_e) - thr.bandgap) / (ratio(best_e) - ratio(best_e - 1)), 0.0,
                    1.0);
                hi = dk[best_e] - f * h;
            }
            SpectralFeature f;
            f.kind = SpectralFeature::Kind::bandgap;
            f.channel = "transmitted";
            f.location = 0.5 * (lo + hi) / width_unit;
            f.width = (hi - lo) / (width_unit * kGroupVelocity);
            f.threshold = thr.bandgap;
            out.push_back(f);
        }
    }
    return out;
}

ConcurrenceTrajectory concurrence_trajectory(const AmplitudeTrajectory& traj) {
    if (traj.n_atoms != 2) fail_validation("concurrence requires exactly two atoms");
    ConcurrenceTrajectory c;
    c.times = traj.times;
    c.values.resize(traj.times.size());
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        const double p = std::abs(traj.alpha(i, 0)) * std::abs(traj.alpha(i, 1));
        c.values[i] = std::max(0.0, std::sqrt(p) - std::sqrt(2.0) * p);
    }
    return c;
}

std::vector<ScanRow> parameter_scan(const Scenario& base, ScanAxis axis,
                                    const std::vector<double>& values) {
    std::vector<ScanRow> rows(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        rows[i].value = values[i];
        Scenario s = base;
        switch (axis) {
            case ScanAxis::detuning: s.pulse.center_detuning = values[i]; break;
            case ScanAxis::spacing: s.system.spacing = values[i]; break;
            case ScanAxis::coupling: s.system.gamma_wg = values[i]; break;
            case ScanAxis::n_atoms: {
                const double r = std::round(values[i]);
                if (std::abs(values[i] - r) > 1e-9) {
                    rows[i].error = "atom count must be integral";
                    continue;
                }
                s.system.n_atoms = static_cast<int>(r);
                break;
            }
        }
        try {
            const ValidatedScenario scn = validate(s);
            rows[i].summary = reflect_transmit(solve_spectra(scn));
            rows[i].ok = true;
        } catch (const Error& e) {
            rows[i].error = e.what();
        }
    }
    return rows;
}

}  // namespace wgqed
