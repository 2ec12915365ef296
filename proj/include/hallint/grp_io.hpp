#pragma once

#include <string>

#include "hallint/group.hpp"

namespace hallint {

// Text format for permutation groups:
//   # comment
//   degree 8
//   gen (1,2,3,4)
//   gen (1,2)
// The degree line must precede any generator; a file with no generators
// describes the trivial group.
Group parse_grp(const std::string& text);
Group read_grp(const std::string& path);

std::string format_grp(const Group& g);
void write_grp(const std::string& path, const Group& g);

}  // namespace hallint
