#pragma once

#include <string>

#include "pltr/model.hpp"

namespace pltr {

/// Static SVG Gantt chart: one lane per processor, one colored block per
/// job unit, hatched power-up markers, and idle/off shading following the
/// min(|I|, q) convention (short interior gaps stay on, long ones power
/// off).
std::string render_gantt_svg(const Schedule& schedule, Energy q);

}  // namespace pltr
