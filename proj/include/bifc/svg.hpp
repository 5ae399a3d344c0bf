#pragma once

#include "bifc/bipartition.hpp"

#include <string>
#include <vector>

namespace bifc {

// Two-string arc diagrams laid out in a grid. Left letters sit on the left
// string, right letters on the right one, position i at height 24 i.
// Opaque points are black, translucent points white, and the translucent
// block is drawn in red with a chord to the top edge. Labels (if given) are
// printed next to each block. Output depends only on the input.
std::string render_svg(const std::vector<LabeledBipartition>& diagrams);

}  // namespace bifc
