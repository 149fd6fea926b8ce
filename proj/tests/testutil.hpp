#pragma once

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ust/geometry.hpp"

namespace testutil {

struct CommandResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Runs via the shell so stdout/stderr land in temp files we can read back.
inline CommandResult run_cmd(const std::string& command) {
  const auto dir = std::filesystem::temp_directory_path();
  static int counter = 0;
  const std::string tag = std::to_string(static_cast<long>(getpid())) + "_" + std::to_string(counter++);
  const auto out_path = dir / ("ust_out_" + tag);
  const auto err_path = dir / ("ust_err_" + tag);
  const std::string full =
      command + " >" + out_path.string() + " 2>" + err_path.string();
  const int status = std::system(full.c_str());
  CommandResult result;
  result.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  std::filesystem::remove(out_path);
  std::filesystem::remove(err_path);
  return result;
}

inline std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

inline std::filesystem::path write_file(const std::string& name, const std::string& content) {
  const auto path = temp_file(name);
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

inline std::filesystem::path write_csv(const std::string& name,
                                       const std::vector<ust::Rect>& rects) {
  std::ostringstream body;
  body << "id,minx,miny,maxx,maxy\n";
  for (const ust::Rect& r : rects)
    body << r.id << "," << r.min_x << "," << r.min_y << "," << r.max_x << "," << r.max_y << "\n";
  return write_file(name, body.str());
}

}  // namespace testutil
