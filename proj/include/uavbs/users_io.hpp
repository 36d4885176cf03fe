#pragma once

#include <string>
#include <span>
#include <vector>

#include "uavbs/geometry.hpp"

namespace uavbs {

/* Read user positions from a text file: one "x y" pair per line (metres,
 * whitespace separated), blank lines and '#' comments ignored.  Throws
 * DataError naming file and line on malformed input. */
std::vector<Point2D> read_users(const std::string& path);

/* Write user positions in the same format; each header line is emitted as
 * a '#' comment.  Coordinates keep 9 significant digits, enough to
 * round-trip the patterns the generator produces. */
void write_users(const std::string& path, std::span<const Point2D> users,
                 std::span<const std::string> header_lines = {});

}  // namespace uavbs
