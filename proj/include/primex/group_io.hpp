#pragma once

#include <string>

#include "primex/perm.hpp"

namespace primex {

// Text format for permutation groups:
//   - first non-comment line: "degree d"
//   - each further non-comment line: one generator as d space-separated
//     0-based images
//   - '#' starts a comment line; blank lines are ignored
Permutation parse_generator_line(std::string const &line, int degree);

PermutationGroup parse_group(std::string const &text);

PermutationGroup read_group_file(std::string const &path);

// Canonical form: "degree d" followed by the generators sorted
// lexicographically by image table, one per line.
std::string serialize_group(PermutationGroup const &g);

void write_group_file(std::string const &path, PermutationGroup const &g);

} // namespace primex
