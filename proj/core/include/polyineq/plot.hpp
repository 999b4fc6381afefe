#pragma once

#include <string>

#include "polyineq/scan.hpp"

namespace polyineq {

// Deterministic self-contained SVG heat map of one report field over the
// 2-D scan points, with the body outline and a numeric color scale.
// Throws on non-2-D reports and unknown or empty fields.
void render_plot(const ScanReport& r, const std::string& field, const std::string& path);
std::string render_plot_string(const ScanReport& r, const std::string& field);

}  // namespace polyineq
