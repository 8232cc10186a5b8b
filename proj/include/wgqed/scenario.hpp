#pragma once

#include <string>
#include <vector>

#include "wgqed/core.hpp"
#include "wgqed/observables.hpp"
#include "wgqed/time_domain.hpp"

namespace wgqed {

struct OutputOptions {
    double pulseshape_time = -1.0;  // < 0 disables the pulse-shape file
    int pulseshape_points = 4001;
};

// A scenario file: sections [system], [pulse], [grid], [solver], [output]
// with keys mirroring the config structs. Unknown keys are rejected.
struct LoadedScenario {
    Scenario scenario;
    DdeSettings solver;
    OutputOptions output;
};

LoadedScenario parse_scenario_text(const std::string& text);
LoadedScenario parse_scenario_file(const std::string& path);

std::string tool_version();
// Stable 64-bit hash of every effective setting, hex-encoded.
std::string scenario_hash(const LoadedScenario& ls);

std::string format_csv_value(double v);
void write_csv(const std::string& path, const std::string& meta,
               const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);
void write_csv_numeric(const std::string& path, const std::string& meta,
                       const std::vector<std::string>& header,
                       const std::vector<std::vector<double>>& rows);

// Command runners shared by the CLI and the figure presets. File names are
// <prefix><product>.csv inside out_dir.
void run_dynamics(const LoadedScenario& ls, const std::string& out_dir,
                  const std::string& prefix = "");
void run_spectrum(const LoadedScenario& ls, const std::string& out_dir,
                  const std::string& prefix = "");
void run_scan(const LoadedScenario& ls, ScanAxis axis, const std::vector<double>& values,
              const std::string& out_dir, const std::string& prefix = "",
              bool with_reflected_fwhm = false);
void run_pulseshape(const LoadedScenario& ls, double time, bool input_only,
                    const std::string& out_dir, const std::string& prefix = "");

ScanAxis parse_axis(const std::string& name);
// "start:stop:count" inclusive linear range.
std::vector<double> parse_range(const std::string& spec);

}  // namespace wgqed
