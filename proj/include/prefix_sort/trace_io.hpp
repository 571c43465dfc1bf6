#pragma once
/**
 * @file trace_io.hpp
 * @brief Text round-trip for sort traces and permutation text parsing.
 *
 * Trace text: optional header "# perm: <middle values>", then one op per
 * line: "B <offset> <j>", "T <offset> <j> <k>", "BT <offset> <j> <k>".
 * Lines that are neither a header nor a known op form are skipped, so a
 * redirected CLI transcript (metrics line included) replays cleanly.
 */

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "prefix_sort/permutation.hpp"

namespace prefix_sort {

// Parses "3 1 2" into middle values.  Raises IoError on non-integer tokens.
std::vector<int> parse_values(const std::string& text);

std::string format_op(const PrefixOp& op);

void write_trace_text(std::ostream& out, const Permutation& original,
                      const std::vector<PrefixOp>& ops);
std::string trace_text(const Permutation& original,
                       const std::vector<PrefixOp>& ops);

struct ParsedTrace {
  std::optional<Permutation> perm;  // from the "# perm:" header, if present
  std::vector<PrefixOp> ops;
};

// Raises IoError (with the 1-based line number) on malformed op lines or a
// malformed header.
ParsedTrace parse_trace_text(std::istream& in);
ParsedTrace parse_trace_file(const std::string& path);

}  // namespace prefix_sort
