#pragma once

#include <optional>
#include <string>
#include <vector>

#include "permspec/bigcount.hpp"
#include "permspec/group_engine.hpp"
#include "permspec/perm.hpp"

namespace permspec {

// Parsed form of a group file:
//
//   # comment
//   degree 5
//   order 10            (optional; asserted against the built engine)
//   (1,2,3,4,5)
//   (2,5)(3,4)
//
// The degree line must precede the generators; `#` starts a comment
// anywhere on a line; blank lines are skipped. A file with no generator
// lines denotes the trivial group.
struct GroupFile {
    int degree = 0;
    std::optional<BigCount> expected_order;
    std::vector<Permutation> generators;
};

// source_name only decorates error messages ("file.gens:3: ...").
GroupFile parse_group_text(const std::string& text, const std::string& source_name);
GroupFile load_group_file(const std::string& path);

// Inline generator syntax for the CLI: cycle notations separated by ';'.
std::vector<Permutation> parse_inline_generators(const std::string& text, int degree);

// Build the engine and enforce the file's order assertion if present
// (throws OrderAssertionError on mismatch).
GroupEngine engine_from_file(const GroupFile& file);

} // namespace permspec
