#pragma once

#include <ostream>

#include "tieroc/roc.hpp"

namespace tieroc {

// Header `fpr,tpr,threshold`; coordinates at 17 significant digits. The
// threshold column is `+inf` for the sentinel vertex and blank on corners.
void write_curve_csv(std::ostream& os, const RocPolyline& pl);

// Standalone 600x600 SVG: unit square frame, identity diagonal, polyline.
void write_curve_svg(std::ostream& os, const RocPolyline& pl);

}  // namespace tieroc
