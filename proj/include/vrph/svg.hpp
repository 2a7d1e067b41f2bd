#pragma once

#include <iosfwd>
#include <string>

#include "vrph/persistence.hpp"

namespace vrph {

/// Horizontal bars sorted by (dim, birth), coloured by dimension, x-axis over
/// [0, eps_max]. Infinite bars stop at eps_max with an arrowhead.
void render_barcode_svg(std::ostream& out, const Barcode& b);
void render_barcode_svg(const std::string& path, const Barcode& b);

/// Birth-death scatter above y = x. Infinite deaths sit on a rail at the top;
/// repeated intervals share one marker labelled with their multiplicity.
void render_diagram_svg(std::ostream& out, const Barcode& b);
void render_diagram_svg(const std::string& path, const Barcode& b);

}  // namespace vrph
