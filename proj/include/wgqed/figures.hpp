#pragma once

#include <string>
#include <vector>

#include "wgqed/scenario.hpp"

namespace wgqed {

// Bundled scenario presets reproducing the published datasets, keyed by
// figure panel id. Each preset emits one or more CSVs named fig<id>_*.csv.
std::vector<std::string> figure_ids();
void run_figure(const std::string& id, const std::string& out_dir);

}  // namespace wgqed
