#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "teichrec/flat_surface.hpp"

namespace teichrec::surface_io {

// Text format, line oriented, '#' comments:
//   origami n=<int> h=<cycles> v=<cycles>
// or
//   polygon
//   edge <x> <y> pair=<slot>
//   ...
// Cycles use 1-based cycle notation, e.g. h=(1 2 3)(4).
flat_surface::TranslationSurface parse_surface(std::istream& in);
flat_surface::TranslationSurface load_surface(const std::string& path);

// 1-based cycle notation -> 0-based permutation images of {0..n-1};
// elements not mentioned are fixed points.
std::vector<int> parse_cycles(const std::string& text, int n);

// CSV with header len,hol_x,hol_y,start,end
void write_connections_csv(std::ostream& out,
                           const std::vector<flat_surface::SaddleConnection>& conns);

std::string format_double(double v);

}  // namespace teichrec::surface_io
