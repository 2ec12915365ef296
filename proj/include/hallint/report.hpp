#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hallint/group.hpp"

namespace hallint {

// Ordered key: value lines; the machine-readable run record every command
// prints.  Values are formatted by the caller so reruns reproduce them
// byte for byte.
class RunReport {
 public:
  void add(const std::string& key, const std::string& value);
  void add(const std::string& key, const char* value);
  void add(const std::string& key, std::uint64_t value);
  void add(const std::string& key, bool value);  // "true" / "false"

  const std::vector<std::pair<std::string, std::string>>& fields() const { return fields_; }
  std::string to_string() const;

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

// FNV-1a of a byte string, as fixed-width hex.
std::string fnv1a_hex(const std::string& data);

// Stable one-line identity of a group: content hash, degree, order.
std::string group_fingerprint(const Group& g);

}  // namespace hallint
