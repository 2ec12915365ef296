#include "hallint/grp_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hallint {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

Group parse_grp(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  unsigned degree = 0;
  std::vector<Perm> gens;
  while (std::getline(in, line)) {
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string directive;
    ls >> directive;
    if (directive == "degree") {
      if (degree != 0) throw std::invalid_argument("degree declared twice in group file");
      if (!(ls >> degree) || degree == 0)
        throw std::invalid_argument("malformed degree in group file");
    } else if (directive == "gen") {
      if (degree == 0)
        throw std::invalid_argument("degree must be declared before generators");
      std::string cycles;
      std::getline(ls, cycles);
      gens.push_back(parse_perm(trim(cycles), degree));
    } else {
      throw std::invalid_argument("unknown directive in group file: " + directive);
    }
  }
  if (degree == 0) throw std::invalid_argument("group file missing degree");
  return Group(degree, std::move(gens));
}

Group read_grp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open group file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_grp(buf.str());
}

std::string format_grp(const Group& g) {
  std::ostringstream out;
  out << "degree " << g.degree() << '\n';
  for (const Perm& x : g.generators()) out << "gen " << cycle_string(x) << '\n';
  return out.str();
}

void write_grp(const std::string& path, const Group& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open group file: " + path);
  out << format_grp(g);
}

}  // namespace hallint
