#include "wgqed/figures.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>

namespace wgqed {

namespace {

// Shared preset: bandwidth 1/20 wavelength, unit coupling ratio, resonant
// pulse starting ten inverse bandwidths from the first atom.
LoadedScenario base_scenario() {
    LoadedScenario ls;
    ls.scenario.pulse.width = 0.05;
    ls.scenario.system.gamma_wg = 1.0;
    return ls;
}

LoadedScenario atoms(int n, double spacing, double gamma_free = 0.0) {
    LoadedScenario ls = base_scenario();
    ls.scenario.system.n_atoms = n;
    ls.scenario.system.spacing = spacing;
    ls.scenario.system.gamma_free = gamma_free;
    return ls;
}

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
    return v;
}

double inv_gamma(const LoadedScenario& ls) {
    return 1.0 / (ls.scenario.system.gamma_wg * ls.scenario.pulse.width);
}

using Runner = std::function<void(const std::string&)>;

struct SpacingTag {
    double spacing;
    const char* tag;
};

constexpr SpacingTag kHalf{0.5, "l2"};
constexpr SpacingTag kQuarter{0.25, "l4"};
constexpr SpacingTag kEighth{0.125, "l8"};
constexpr SpacingTag kThreeEighths{0.375, "3l8"};

const std::map<std::string, Runner>& registry() {
    static const std::map<std::string, Runner> reg = [] {
        std::map<std::string, Runner> r;

        r["2a"] = [](const std::string& out) {
            LoadedScenario g = atoms(1, 0.5);
            run_dynamics(g, out, "fig2a_gaussian_");
            LoadedScenario inv = g;
            inv.scenario.pulse.shape = PulseShape::inversion;
            run_dynamics(inv, out, "fig2a_inversion_");
        };
        r["2b"] = [](const std::string& out) { run_spectrum(atoms(1, 0.5), out, "fig2b_"); };
        r["2c"] = [](const std::string& out) {
            const LoadedScenario ls = atoms(1, 0.5);
            run_pulseshape(ls, 6.0 * inv_gamma(ls), true, out, "fig2c_incoming_");
            run_pulseshape(ls, 20.0 * inv_gamma(ls), false, out, "fig2c_scattered_");
        };
        r["2d"] = [](const std::string& out) {
            run_scan(atoms(1, 0.5), ScanAxis::coupling, linspace(0.1, 10.0, 100), out, "fig2d_",
                     true);
        };
        r["2e"] = [](const std::string& out) {
            LoadedScenario ls = atoms(1, 0.5);
            ls.scenario.pulse.center_detuning = 0.5;
            run_spectrum(ls, out, "fig2e_");
        };
        r["2f"] = [](const std::string& out) {
            run_scan(atoms(1, 0.5), ScanAxis::detuning, linspace(-4.0, 4.0, 81), out, "fig2f_");
        };

        auto two_atom_dynamics = [](double spacing, const char* name) {
            return [spacing, name](const std::string& out) {
                run_dynamics(atoms(2, spacing), out, name);
            };
        };
        r["3a"] = two_atom_dynamics(0.5, "fig3a_");
        r["3d"] = two_atom_dynamics(0.25, "fig3d_");
        r["3g"] = two_atom_dynamics(0.125, "fig3g_");
        auto two_atom_pulse = [](double spacing, const char* prefix) {
            return [spacing, prefix = std::string(prefix)](const std::string& out) {
                const LoadedScenario ls = atoms(2, spacing);
                run_pulseshape(ls, 6.0 * inv_gamma(ls), true, out, prefix + "incoming_");
                run_pulseshape(ls, 20.0 * inv_gamma(ls), false, out, prefix + "scattered_");
            };
        };
        r["3b"] = two_atom_pulse(0.5, "fig3b_");
        r["3e"] = two_atom_pulse(0.25, "fig3e_");
        auto two_atom_spectrum = [](double spacing, const char* name) {
            return [spacing, name](const std::string& out) {
                run_spectrum(atoms(2, spacing), out, name);
            };
        };
        r["3c"] = two_atom_spectrum(0.5, "fig3c_");
        r["3f"] = two_atom_spectrum(0.25, "fig3f_");
        r["3h"] = two_atom_spectrum(0.125, "fig3h_");
        r["3i"] = two_atom_spectrum(0.375, "fig3i_");

        r["4a"] = [](const std::string& out) {
            for (double eta : {0.5, 1.0, 2.0}) {
                LoadedScenario ls = atoms(2, 0.5);
                ls.scenario.system.gamma_wg = eta;
                char tag[32];
                std::snprintf(tag, sizeof tag, "fig4a_eta%g_", eta);
                run_scan(ls, ScanAxis::spacing, linspace(0.05, 1.0, 96), out, tag);
            }
        };
        r["4b"] = [](const std::string& out) {
            for (const SpacingTag& st : {kHalf, kQuarter, kEighth, kThreeEighths})
                run_scan(atoms(2, st.spacing), ScanAxis::detuning, linspace(-4.0, 4.0, 81), out,
                         std::string("fig4b_") + st.tag + "_");
        };
        r["4c"] = [](const std::string& out) {
            for (const SpacingTag& st : {kHalf, kQuarter, kEighth})
                run_scan(atoms(2, st.spacing), ScanAxis::coupling, linspace(0.1, 4.0, 79), out,
                         std::string("fig4c_") + st.tag + "_");
        };

        r["5"] = [](const std::string& out) {
            for (const SpacingTag& st : {kHalf, kQuarter, kEighth})
                run_dynamics(atoms(2, st.spacing), out, std::string("fig5_") + st.tag + "_");
        };

        const SpacingTag five_atom_tags[] = {kHalf, kQuarter, kEighth};
        const char* six_ids[3][3] = {{"6a", "6b", "6c"}, {"6d", "6e", "6f"}, {"6g", "6h", "6i"}};
        for (int i = 0; i < 3; ++i) {
            const SpacingTag st = five_atom_tags[i];
            r[six_ids[i][0]] = [st](const std::string& out) {
                run_dynamics(atoms(5, st.spacing), out,
                             std::string("fig6_dynamics_") + st.tag + "_");
            };
            r[six_ids[i][1]] = [st](const std::string& out) {
                const LoadedScenario ls = atoms(5, st.spacing);
                run_pulseshape(ls, 6.0 * inv_gamma(ls), true, out,
                               std::string("fig6_incoming_") + st.tag + "_");
                run_pulseshape(ls, 30.0 * inv_gamma(ls), false, out,
                               std::string("fig6_scattered_") + st.tag + "_");
            };
            r[six_ids[i][2]] = [st](const std::string& out) {
                run_spectrum(atoms(5, st.spacing), out, std::string("fig6_spectrum_") + st.tag + "_");
            };
        }

        r["7a"] = [](const std::string& out) {
            for (const SpacingTag& st : {kHalf, kQuarter, kEighth, kThreeEighths})
                run_scan(atoms(5, st.spacing), ScanAxis::detuning, linspace(-4.0, 4.0, 81), out,
                         std::string("fig7a_") + st.tag + "_");
        };
        r["7b"] = [](const std::string& out) {
            for (const SpacingTag& st : {kHalf, kQuarter})
                run_scan(atoms(2, st.spacing), ScanAxis::n_atoms, linspace(1.0, 10.0, 10), out,
                         std::string("fig7b_") + st.tag + "_");
        };

        r["8a"] = [](const std::string& out) {
            run_spectrum(atoms(2, 0.25, 0.2), out, "fig8a_");
        };
        r["8b"] = [](const std::string& out) {
            run_spectrum(atoms(2, 0.25, 1.0), out, "fig8b_");
        };
        r["8c"] = [](const std::string& out) {
            run_spectrum(atoms(5, 0.25, 1.0), out, "fig8c_");
        };
        return r;
    }();
    return reg;
}

}  // namespace

std::vector<std::string> figure_ids() {
    std::vector<std::string> ids;
    for (const auto& [id, fn] : registry()) ids.push_back(id);
    return ids;
}

void run_figure(const std::string& id, const std::string& out_dir) {
    const auto it = registry().find(id);
    if (it == registry().end()) fail_validation("unknown figure id '" + id + "'");
    it->second(out_dir);
}

}  // namespace wgqed
