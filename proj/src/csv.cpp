#include "ust/csv.hpp"

#include <charconv>
#include <fstream>
#include <unordered_set>

namespace ust {

namespace {

const char kHeader[] = "id,minx,miny,maxx,maxy";

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& what) {
  throw ParseError(source + ":" + std::to_string(line) + ": " + what);
}

std::int64_t parse_int(std::string_view field, const std::string& source, std::size_t line) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size())
    fail(source, line, "expected a base-10 integer, got '" + std::string(field) + "'");
  return value;
}

}  // namespace

Dataset parse_csv(std::istream& in, const std::string& source) {
  Dataset ds;
  ds.source = source;
  std::string line;
  std::size_t line_no = 0;
  std::unordered_set<std::int64_t> seen;
  bool header_done = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1 && line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0)
      line.erase(0, 3);
    if (!header_done) {
      if (line != kHeader)
        fail(source, line_no, "expected header '" + std::string(kHeader) + "', got '" + line + "'");
      header_done = true;
      continue;
    }
    std::vector<std::string_view> fields;
    std::string_view rest = line;
    while (true) {
      const auto comma = rest.find(',');
      fields.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (fields.size() != 5)
      fail(source, line_no, "expected 5 fields, got " + std::to_string(fields.size()));
    Rect r;
    r.id = parse_int(fields[0], source, line_no);
    r.min_x = parse_int(fields[1], source, line_no);
    r.min_y = parse_int(fields[2], source, line_no);
    r.max_x = parse_int(fields[3], source, line_no);
    r.max_y = parse_int(fields[4], source, line_no);
    try {
      validate(r);
    } catch (const InvalidRect& e) {
      fail(source, line_no, e.what());
    }
    if (!seen.insert(r.id).second)
      fail(source, line_no, "duplicate rect id " + std::to_string(r.id));
    ds.rects.push_back(r);
  }
  if (!header_done && line_no == 0) fail(source, 1, "empty file, expected a header line");
  return ds;
}

Dataset load_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "' for reading");
  return parse_csv(in, path);
}

}  // namespace ust
