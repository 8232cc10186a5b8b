// Command-line scenario runner: dynamics, spectra, parameter scans and the
// bundled figure datasets, all emitted as reproducible CSV files.
#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include "wgqed/figures.hpp"
#include "wgqed/scenario.hpp"
#include "wgqed/threading.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct CommonOpts {
    std::string config;
    std::string out_dir = ".";
    int threads = 0;
    int grid_points = 0;
    double grid_extent = 0.0;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool needs_config) {
    auto* c = cmd->add_option("--config", opts.config, "scenario file");
    if (needs_config) c->required();
    cmd->add_option("--out", opts.out_dir, "output directory");
    cmd->add_option("--threads", opts.threads, "worker thread cap");
    cmd->add_option("--grid-points", opts.grid_points, "override grid point count");
    cmd->add_option("--grid-extent", opts.grid_extent, "override grid extent in pulse widths");
}

void apply_common(const CommonOpts& opts) {
    if (opts.threads > 0) {
        wgqed::set_thread_cap(opts.threads);
    } else if (const char* env = std::getenv("WGQED_THREADS")) {
        wgqed::set_thread_cap(std::atoi(env));
    }
}

wgqed::LoadedScenario load(const CommonOpts& opts) {
    wgqed::LoadedScenario ls = wgqed::parse_scenario_file(opts.config);
    if (opts.grid_points > 0) ls.scenario.grid.points = opts.grid_points;
    if (opts.grid_extent > 0.0) ls.scenario.grid.extent_over_width = opts.grid_extent;
    return ls;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"single-photon transport through an atomic chain in a 1D waveguide"};
    app.require_subcommand(1);

    CommonOpts dyn_opts, spec_opts, scan_opts, fig_opts;
    std::string scan_axis, scan_range, figure_id;

    CLI::App* dynamics = app.add_subcommand("dynamics", "integrate the retarded dynamics");
    add_common(dynamics, dyn_opts, true);

    CLI::App* spectrum = app.add_subcommand("spectrum", "stationary spectra and transport");
    add_common(spectrum, spec_opts, true);

    CLI::App* scan = app.add_subcommand("scan", "sweep one scenario parameter");
    add_common(scan, scan_opts, true);
    scan->add_option("--axis", scan_axis, "detuning|spacing|coupling|n_atoms")->required();
    scan->add_option("--range", scan_range, "start:stop:count")->required();

    CLI::App* figure = app.add_subcommand("figure", "run a bundled figure preset");
    add_common(figure, fig_opts, false);
    figure->add_option("id", figure_id, "figure panel id, e.g. 2a")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (dynamics->parsed()) {
            apply_common(dyn_opts);
            wgqed::run_dynamics(load(dyn_opts), dyn_opts.out_dir);
        } else if (spectrum->parsed()) {
            apply_common(spec_opts);
            wgqed::run_spectrum(load(spec_opts), spec_opts.out_dir);
        } else if (scan->parsed()) {
            apply_common(scan_opts);
            wgqed::run_scan(load(scan_opts), wgqed::parse_axis(scan_axis),
                            wgqed::parse_range(scan_range), scan_opts.out_dir);
        } else if (figure->parsed()) {
            apply_common(fig_opts);
            wgqed::run_figure(figure_id, fig_opts.out_dir);
        }
    } catch (const wgqed::Error& e) {
        std::cerr << "wgqed: " << e.what() << "\n";
        return e.kind() == wgqed::ErrorKind::numerical ? kExitNumerical : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "wgqed: " << e.what() << "\n";
        return kExitNumerical;
    }
    return 0;
}
