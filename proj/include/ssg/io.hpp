#pragma once

#include <filesystem>
#include <string>

#include "ssg/image.hpp"

namespace ssg {

/// Read a P2 (ASCII) or P5 (binary) PGM with maxval <= 255. A single comment
/// line is tolerated after the magic. Sample values are kept as-is (they
/// already lie in [0, 255]). Parse errors name the byte offset.
Image read_pgm(const std::filesystem::path& path);

/// Write a P5 PGM with maxval 255. With normalize, [min, max] is affinely
/// mapped onto [0, 255] (a constant image maps to all zeros); otherwise
/// values are clamped to [0, 255] and rounded half-up.
void write_pgm(const Image& img, const std::filesystem::path& path,
               bool normalize = false);

/// One CSV row per raster row, comma separated, newline-terminated, values in
/// shortest round-trippable decimal form. Throws EmptyInput on empty rasters.
void write_csv_matrix(const Image& raster, const std::filesystem::path& path);

/// Shortest decimal text that parses back to exactly the same double.
std::string format_double(double value);

}  // namespace ssg
