#pragma once

#include <istream>
#include <string>
#include <vector>

#include "ust/geometry.hpp"

namespace ust {

// Message carries "<source>:<line>: <problem>".
struct ParseError : Error {
  using Error::Error;
};

struct Dataset {
  std::string source;
  std::vector<Rect> rects;
};

// Header must be exactly `id,minx,miny,maxx,maxy`; one rect per line,
// base-10 integers, LF or CRLF. Duplicate ids, degenerate rects and any
// malformed field are reported with their line number.
Dataset parse_csv(std::istream& in, const std::string& source);
Dataset load_csv(const std::string& path);

}  // namespace ust
