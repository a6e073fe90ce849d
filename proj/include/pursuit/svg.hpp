#pragma once

// Static trajectory plots. Output depends only on the trace, so identical
// traces give byte-identical files.

#include <string>

#include "pursuit/sim.hpp"

namespace pursuit {

struct PlotSpec {
  int width{800};
  int height{800};
  int margin{30};
  bool start_squares{true};
  bool end_dots{true};
  bool capture_circle{true};  // dashed, radius r, around the capture point
};

/// Pursuers are drawn in blue, the evader in red, in world units scaled to fit.
std::string render_svg(const SimulationTrace& trace, const PlotSpec& spec = {});

}  // namespace pursuit
