#include "kanenobu/diagram/pd_io.hpp"

#include <fstream>
#include <sstream>

namespace kanenobu {

PlanarDiagram parse_pd(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  bool header = false;
  int circles = 0;
  std::vector<Crossing> xs;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (!header) {
      std::string version;
      if (tag != "pdcode" || !(ls >> version) || version != "v1")
        throw PdParseError(lineno, "expected header 'pdcode v1'");
      header = true;
      continue;
    }
    if (tag == "O") {
      ++circles;
    } else if (tag == "X") {
      Crossing x;
      for (int& a : x.arcs)
        if (!(ls >> a)) throw PdParseError(lineno, "expected four arc labels");
      std::string s;
      if (!(ls >> s) || (s != "+" && s != "-")) throw PdParseError(lineno, "expected sign + or -");
      x.sign = s == "+" ? 1 : -1;
      xs.push_back(x);
    } else {
      throw PdParseError(lineno, "unknown record '" + tag + "'");
    }
    std::string extra;
    if (ls >> extra) throw PdParseError(lineno, "trailing token '" + extra + "'");
  }
  if (!header) throw PdParseError(lineno, "missing header 'pdcode v1'");
  if (xs.empty() && circles == 0) circles = 1;
  return PlanarDiagram(std::move(xs), circles);
}

std::string format_pd(const PlanarDiagram& d, std::string_view comment) {
  std::ostringstream os;
  os << "pdcode v1\n";
  std::istringstream cs{std::string(comment)};
  for (std::string line; std::getline(cs, line);) os << "# " << line << '\n';
  for (const auto& x : d.crossings())
    os << "X " << x.arcs[0] << ' ' << x.arcs[1] << ' ' << x.arcs[2] << ' ' << x.arcs[3] << ' '
       << (x.sign > 0 ? '+' : '-') << '\n';
  for (int i = 0; i < d.free_circles(); ++i) os << "O\n";
  return os.str();
}

PlanarDiagram read_pd_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_pd(buf.str());
}

void write_pd_file(const std::filesystem::path& path, const PlanarDiagram& d, std::string_view comment) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << format_pd(d, comment);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace kanenobu
