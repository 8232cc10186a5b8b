#include "wgqed/scenario.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "wgqed/freq_domain.hpp"
#include "wgqed/pulse.hpp"

namespace wgqed {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    double out = 0.0;
    try {
        out = std::stod(value, &used);
    } catch (...) {
        fail_validation(key + ": expected a number, got '" + value + "'");
    }
    if (used != value.size()) fail_validation(key + ": expected a number, got '" + value + "'");
    return out;
}

int parse_int(const std::string& key, const std::string& value) {
    const double d = parse_double(key, value);
    if (std::abs(d - std::round(d)) > 1e-9) fail_validation(key + ": expected an integer");
    return static_cast<int>(std::round(d));
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    fail_validation(key + ": expected true or false");
}

}  // namespace

LoadedScenario parse_scenario_text(const std::string& text) {
    LoadedScenario ls;
    bool have_width = false;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto comment = line.find_first_of("#;");
        if (comment != std::string::npos) line.erase(comment);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                fail_validation("line " + std::to_string(lineno) + ": malformed section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section != "system" && section != "pulse" && section != "grid" &&
                section != "solver" && section != "output")
                fail_validation("unknown section [" + section + "]");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            fail_validation("line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const std::string qual = section + "." + key;

        if (section == "system") {
            if (key == "n_atoms") ls.scenario.system.n_atoms = parse_int(qual, value);
            else if (key == "spacing") ls.scenario.system.spacing = parse_double(qual, value);
            else if (key == "gamma_wg") ls.scenario.system.gamma_wg = parse_double(qual, value);
            else if (key == "gamma_free") ls.scenario.system.gamma_free = parse_double(qual, value);
            else if (key == "r1") ls.scenario.system.r1 = parse_double(qual, value);
            else fail_validation("unknown key " + qual);
        } else if (section == "pulse") {
            if (key == "shape") {
                if (value == "gaussian") ls.scenario.pulse.shape = PulseShape::gaussian;
                else if (value == "inversion") ls.scenario.pulse.shape = PulseShape::inversion;
                else fail_validation(qual + ": expected gaussian or inversion");
            } else if (key == "width") {
                ls.scenario.pulse.width = parse_double(qual, value);
                have_width = true;
            } else if (key == "center_detuning") {
                ls.scenario.pulse.center_detuning = parse_double(qual, value);
            } else if (key == "initial_offset") {
                ls.scenario.pulse.initial_offset = parse_double(qual, value);
            } else {
                fail_validation("unknown key " + qual);
            }
        } else if (section == "grid") {
            if (key == "extent") ls.scenario.grid.extent_over_width = parse_double(qual, value);
            else if (key == "points") ls.scenario.grid.points = parse_int(qual, value);
            else fail_validation("unknown key " + qual);
        } else if (section == "solver") {
            if (key == "step") ls.solver.step = parse_double(qual, value);
            else if (key == "horizon") ls.solver.horizon = parse_double(qual, value);
            else if (key == "delay_interpolation") {
                if (value == "linear") ls.solver.interpolation = DelayInterpolation::linear;
                else if (value == "cubic") ls.solver.interpolation = DelayInterpolation::cubic;
                else fail_validation(qual + ": expected linear or cubic");
            } else if (key == "retardation") {
                if (value == "full") ls.solver.retardation = Retardation::full;
                else if (value == "markovian") ls.solver.retardation = Retardation::markovian;
                else fail_validation(qual + ": expected full or markovian");
            } else if (key == "regularize_dark_modes") {
                ls.scenario.regularize_dark_modes = parse_bool(qual, value);
            } else {
                fail_validation("unknown key " + qual);
            }
        } else if (section == "output") {
            if (key == "pulseshape_time") ls.output.pulseshape_time = parse_double(qual, value);
            else if (key == "pulseshape_points")
                ls.output.pulseshape_points = parse_int(qual, value);
            else fail_validation("unknown key " + qual);
        } else {
            fail_validation("key " + key + " outside any section");
        }
    }
    if (!have_width) fail_validation("pulse.width required");
    return ls;
}

LoadedScenario parse_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail_validation("cannot open scenario file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario_text(buf.str());
}

std::string tool_version() { return "0.1.0"; }

namespace {

void hash_mix(std::uint64_t& h, const std::string& s) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
}

std::string canonical(const LoadedScenario& ls) {
    std::ostringstream o;
    o.precision(17);
    const Scenario& s = ls.scenario;
    o << "n_atoms=" << s.system.n_atoms << ";spacing=" << s.system.spacing
      << ";gamma_wg=" << s.system.gamma_wg << ";gamma_free=" << s.system.gamma_free
      << ";r1=" << s.system.r1
      << ";shape=" << (s.pulse.shape == PulseShape::gaussian ? "gaussian" : "inversion")
      << ";width=" << s.pulse.width << ";center_detuning=" << s.pulse.center_detuning
      << ";initial_offset=" << s.pulse.initial_offset
      << ";extent=" << s.grid.extent_over_width << ";points=" << s.grid.points
      << ";regularize=" << s.regularize_dark_modes << ";step=" << ls.solver.step
      << ";horizon=" << ls.solver.horizon
      << ";interp=" << (ls.solver.interpolation == DelayInterpolation::cubic ? "cubic" : "linear")
      << ";retard=" << (ls.solver.retardation == Retardation::full ? "full" : "markovian")
      << ";ps_time=" << ls.output.pulseshape_time
      << ";ps_points=" << ls.output.pulseshape_points;
    return o.str();
}

}  // namespace

std::string scenario_hash(const LoadedScenario& ls) {
    std::uint64_t h = 14695981039346656037ULL;
    hash_mix(h, canonical(ls));
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string format_csv_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12e", v);
    return buf;
}

void write_csv(const std::string& path, const std::string& meta,
               const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail_validation("cannot write " + path);
    out << "# " << meta << "\n";
    for (std::size_t i = 0; i < header.size(); ++i)
        out << header[i] << (i + 1 < header.size() ? "," : "\n");
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i)
            out << row[i] << (i + 1 < row.size() ? "," : "\n");
    if (!out) fail_validation("failed writing " + path);
}

void write_csv_numeric(const std::string& path, const std::string& meta,
                       const std::vector<std::string>& header,
                       const std::vector<std::vector<double>>& rows) {
    std::vector<std::vector<std::string>> cells(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        cells[r].reserve(rows[r].size());
        for (double v : rows[r]) cells[r].push_back(format_csv_value(v));
    }
    write_csv(path, meta, header, cells);
}

namespace {

std::string meta_line(const LoadedScenario& ls, const std::string& product) {
    return "wgqed " + tool_version() + " scenario=" + scenario_hash(ls) + " product=" + product;
}

std::string join_path(const std::string& dir, const std::string& file) {
    if (dir.empty() || dir == ".") return file;
    return dir.back() == '/' ? dir + file : dir + "/" + file;
}

}  // namespace

void run_dynamics(const LoadedScenario& ls, const std::string& out_dir,
                  const std::string& prefix) {
    const ValidatedScenario scn = validate(ls.scenario);
    const AmplitudeTrajectory traj = integrate_dde(scn, ls.solver);

    std::vector<std::string> header{"t"};
    for (int j = 0; j < traj.n_atoms; ++j) {
        const std::string tag = std::to_string(j + 1);
        header.push_back("prob_" + tag);
        header.push_back("re_alpha_" + tag);
        header.push_back("im_alpha_" + tag);
    }
    std::vector<std::vector<double>> rows(traj.times.size());
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        rows[i].reserve(1 + 3 * traj.n_atoms);
        rows[i].push_back(traj.times[i]);
        for (int j = 0; j < traj.n_atoms; ++j) {
            const cplx a = traj.alpha(i, j);
            rows[i].push_back(std::norm(a));
            rows[i].push_back(a.real());
            rows[i].push_back(a.imag());
        }
    }
    write_csv_numeric(join_path(out_dir, prefix + "trajectory.csv"), meta_line(ls, "trajectory"),
                      header, rows);

    if (traj.n_atoms == 2) {
        const ConcurrenceTrajectory c = concurrence_trajectory(traj);
        std::vector<std::vector<double>> crows(c.times.size());
        for (std::size_t i = 0; i < c.times.size(); ++i) crows[i] = {c.times[i], c.values[i]};
        write_csv_numeric(join_path(out_dir, prefix + "concurrence.csv"),
                          meta_line(ls, "concurrence"), {"t", "c"}, crows);
    }
}

namespace {

std::vector<std::vector<std::string>> summary_cells(const TransportSummary& s) {
    std::vector<std::vector<std::string>> cells;
    auto scalar = [&](const char* name, double v) {
        cells.push_back({name, format_csv_value(v), format_csv_value(0.0),
                         format_csv_value(0.0)});
    };
    scalar("r", s.reflectivity);
    scalar("t", s.transmittivity);
    scalar("guided_fraction", s.guided_fraction());
    for (const SpectralFeature& f : s.features) {
        std::string kind;
        switch (f.kind) {
            case SpectralFeature::Kind::peak: kind = "peak"; break;
            case SpectralFeature::Kind::dip: kind = "dip"; break;
            case SpectralFeature::Kind::fwhm: kind = "fwhm"; break;
            case SpectralFeature::Kind::bandgap: kind = "bandgap"; break;
        }
        const double value =
            (f.kind == SpectralFeature::Kind::peak || f.kind == SpectralFeature::Kind::dip)
                ? f.location
                : f.width;
        cells.push_back({f.channel + "_" + kind, format_csv_value(value),
                         format_csv_value(f.location), format_csv_value(f.width)});
    }
    return cells;
}

}  // namespace

void run_spectrum(const LoadedScenario& ls, const std::string& out_dir,
                  const std::string& prefix) {
    const ValidatedScenario scn = validate(ls.scenario);
    const SpectralSolution sol = solve_spectra(scn);
    const TransportSummary summary = reflect_transmit(sol);

    const std::size_t nk = sol.grid.samples.size();
    std::vector<std::vector<double>> rows(nk);
    for (std::size_t m = 0; m < nk; ++m)
        rows[m] = {sol.grid.samples[m] / scn.width, std::norm(sol.input[m]),
                   std::norm(sol.beta_l[m]), std::norm(sol.beta_r[m])};
    write_csv_numeric(join_path(out_dir, prefix + "spectrum.csv"), meta_line(ls, "spectrum"),
                      {"dk_over_delta", "input_density", "reflected_density",
                       "transmitted_density"},
                      rows);

    write_csv(join_path(out_dir, prefix + "summary.csv"), meta_line(ls, "summary"),
              {"quantity", "value", "location", "width"}, summary_cells(summary));

    if (ls.output.pulseshape_time >= 0.0)
        run_pulseshape(ls, ls.output.pulseshape_time, false, out_dir, prefix);
}

void run_scan(const LoadedScenario& ls, ScanAxis axis, const std::vector<double>& values,
              const std::string& out_dir, const std::string& prefix, bool with_reflected_fwhm) {
    const std::vector<ScanRow> rows = parameter_scan(ls.scenario, axis, values);
    std::vector<std::string> header{"axis_value", "r", "t", "guided_fraction"};
    if (with_reflected_fwhm) header.push_back("reflected_fwhm_rel");
    header.push_back("error");
    std::vector<std::vector<std::string>> cells;
    cells.reserve(rows.size());
    const double fwhm_unit = std::sqrt(2.0 * std::log(2.0));
    for (const ScanRow& r : rows) {
        std::vector<std::string> row{format_csv_value(r.value)};
        if (r.ok) {
            row.push_back(format_csv_value(r.summary.reflectivity));
            row.push_back(format_csv_value(r.summary.transmittivity));
            row.push_back(format_csv_value(r.summary.guided_fraction()));
            if (with_reflected_fwhm) {
                double w = 0.0;
                for (const SpectralFeature& f : r.summary.features)
                    if (f.kind == SpectralFeature::Kind::fwhm && f.channel == "reflected")
                        w = f.width / fwhm_unit;
                row.push_back(format_csv_value(w));
            }
            row.push_back("");
        } else {
            for (std::size_t i = 0; i + 2 < header.size(); ++i) row.push_back("nan");
            row.push_back(r.error);
        }
        cells.push_back(std::move(row));
    }
    write_csv(join_path(out_dir, prefix + "scan.csv"), meta_line(ls, "scan"), header, cells);
}

void run_pulseshape(const LoadedScenario& ls, double time, bool input_only,
                    const std::string& out_dir, const std::string& prefix) {
    const ValidatedScenario scn = validate(ls.scenario);
    SpectralSolution sol;
    if (input_only) {
        sol.grid = scn.grid;
        sol.n_atoms = scn.system.n_atoms;
        sol.width = scn.width;
        sol.input = sample_spectrum(spectral_amplitude(scn), scn.grid);
        sol.beta_r = sol.input;
        sol.beta_l.assign(sol.input.size(), cplx{0.0, 0.0});
    } else {
        sol = solve_spectra(scn);
    }
    const double chain = scn.positions.back() - scn.positions.front();
    const double tail = scn.gamma > 0.0 ? 6.0 / scn.gamma : 0.0;
    const double half = kGroupVelocity * time + 10.0 / scn.width + chain + tail;
    const PulseShapeField f =
        pulse_shape(sol, -half, half, ls.output.pulseshape_points, time);

    std::vector<std::vector<double>> rows(f.x.size());
    for (std::size_t i = 0; i < f.x.size(); ++i)
        rows[i] = {f.x[i], std::norm(f.right[i]), std::norm(f.left[i])};
    write_csv_numeric(join_path(out_dir, prefix + "pulseshape.csv"), meta_line(ls, "pulseshape"),
                      {"x", "right_density", "left_density"}, rows);
}

ScanAxis parse_axis(const std::string& name) {
    if (name == "detuning") return ScanAxis::detuning;
    if (name == "spacing") return ScanAxis::spacing;
    if (name == "coupling") return ScanAxis::coupling;
    if (name == "n_atoms") return ScanAxis::n_atoms;
    fail_validation("unknown scan axis '" + name + "'");
}

std::vector<double> parse_range(const std::string& spec) {
    const auto c1 = spec.find(':');
    const auto c2 = spec.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        fail_validation("malformed range '" + spec + "', expected start:stop:count");
    const double start = parse_double("range.start", spec.substr(0, c1));
    const double stop = parse_double("range.stop", spec.substr(c1 + 1, c2 - c1 - 1));
    const int count = parse_int("range.count", spec.substr(c2 + 1));
    if (count < 1) fail_validation("range count must be >= 1");
    std::vector<double> out(count);
    if (count == 1) {
        out[0] = start;
        return out;
    }
    const double step = (stop - start) / (count - 1);
    for (int i = 0; i < count; ++i) out[i] = start + i * step;
    return out;
}

}  // namespace wgqed
