#pragma once

#include <string>

#include "linkcat/linking.hpp"

namespace linkcat {

/// Text drawing: X labels on top, Y labels at the bottom, one lane per link
/// joining its feet ('+'), vertical strokes ('|') down from X and up from
/// Y. A link {x_i, y_i} is drawn as a single straight stroke. Loops appear
/// as a "(k loops)" badge. Output is a pure function of the linking.
std::string render_ascii(const Linking& l);

/// SVG 1.1 drawing in the two-row style: binary links as arcs, other links
/// as a small hub circle with edges to each foot, loops as detached circles
/// with a count badge. Output is a pure function of the linking.
std::string render_svg(const Linking& l);

}  // namespace linkcat
