#pragma once

#include "ssg/image.hpp"

namespace ssg {

/// Otsu threshold over a 256-bin histogram spanning the raster's own
/// [min, max] range. Bin b(v) = round((v - min) * 255 / (max - min));
/// the scan maximizes between-class variance with class 0 = bins [0, t],
/// ties resolved to the lowest bin. Returns the upper edge of the winning
/// bin mapped back to raster units, so the threshold bin itself falls on
/// the background side of a strict `value > threshold` test.
/// Throws DegenerateHistogram when max == min.
double otsu_threshold(const Image& raster);

/// bit = (value > otsu_threshold). A degenerate (constant) response yields
/// an all-false map with the degenerate flag set instead of an error.
BinaryMap binarize(const ResponseMap& resp);

}  // namespace ssg
