#pragma once

#include <string>

#include "aborders/word.hpp"

namespace aborders {

enum class FigureView { lattice, diagonal, y, z };

// Standalone SVG for one panel: the two lattice paths, the paired diagonal
// profiles, the |V|-graph of the Y form, or that graph with flat steps
// removed. Prefix path in black, suffix in gray, half-unit grid cells.
// Requires a total binary word; output is byte-identical per input.
std::string render_figure(const PartialWord& w, FigureView view);

FigureView parse_figure_view(const std::string& name);

}  // namespace aborders
