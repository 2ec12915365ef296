#include "hallint/report.hpp"

#include <iomanip>
#include <sstream>

namespace hallint {

void RunReport::add(const std::string& key, const std::string& value) {
  fields_.emplace_back(key, value);
}

void RunReport::add(const std::string& key, const char* value) {
  fields_.emplace_back(key, std::string(value));
}

void RunReport::add(const std::string& key, std::uint64_t value) {
  fields_.emplace_back(key, std::to_string(value));
}

void RunReport::add(const std::string& key, bool value) {
  fields_.emplace_back(key, value ? "true" : "false");
}

std::string RunReport::to_string() const {
  std::ostringstream out;
  for (const auto& [key, value] : fields_) out << key << ": " << value << '\n';
  return out.str();
}

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

std::string group_fingerprint(const Group& g) {
  std::ostringstream data;
  data << g.degree();
  for (const Perm& x : g.generators()) {
    data << '|';
    for (unsigned i = 1; i <= g.degree(); ++i) data << x[i] << ',';
  }
  std::ostringstream out;
  out << "hash=" << fnv1a_hex(data.str()) << " degree=" << g.degree() << " order=" << g.order();
  return out.str();
}

}  // namespace hallint
