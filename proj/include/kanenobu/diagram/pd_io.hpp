#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "kanenobu/diagram/planar_diagram.hpp"

namespace kanenobu {

// Text format:
//   pdcode v1
//   X a b c d s     one crossing, s in {+,-}
//   O               one crossingless circle
//   # comment
// A file with neither X nor O lines is the unknot.
class PdParseError : public std::runtime_error {
 public:
  PdParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

PlanarDiagram parse_pd(std::string_view text);
std::string format_pd(const PlanarDiagram& d, std::string_view comment = {});

PlanarDiagram read_pd_file(const std::filesystem::path& path);
void write_pd_file(const std::filesystem::path& path, const PlanarDiagram& d, std::string_view comment = {});

}  // namespace kanenobu
