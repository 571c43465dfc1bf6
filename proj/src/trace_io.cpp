#include "prefix_sort/trace_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace prefix_sort {

namespace {

int parse_int(const std::string& token) {
  int value = 0;
  const char* first = token.data();
  const char* last = first + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    raise(ErrorCode::IoError, "invalid integer '" + token + "'");
  }
  return value;
}

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string token;
  while (in >> token) tokens.push_back(token);
  return tokens;
}

}  // namespace

std::vector<int> parse_values(const std::string& text) {
  std::vector<int> values;
  for (const std::string& token : tokenize(text)) {
    values.push_back(parse_int(token));
  }
  return values;
}

std::string format_op(const PrefixOp& op) {
  const std::string offset = std::to_string(op.offset);
  const std::string j = std::to_string(op.j);
  switch (op.kind) {
    case OpKind::Reversal:
      return "B " + offset + " " + j;
    case OpKind::Transposition:
      return "T " + offset + " " + j + " " + std::to_string(op.k);
    case OpKind::Transreversal:
      return "BT " + offset + " " + j + " " + std::to_string(op.k);
  }
  raise(ErrorCode::UsageError, "unknown operation kind");
}

void write_trace_text(std::ostream& out, const Permutation& perm,
                      const std::vector<PrefixOp>& ops) {
  out << "# perm: " << to_text(perm) << "\n";
  for (const PrefixOp& op : ops) out << format_op(op) << "\n";
}

std::string trace_text(const Permutation& perm,
                       const std::vector<PrefixOp>& ops) {
  std::ostringstream out;
  write_trace_text(out, perm, ops);
  return out.str();
}

ParsedTrace parse_trace_text(std::istream& in) {
  ParsedTrace parsed;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    try {
      if (line.rfind("# perm:", 0) == 0) {
        parsed.perm = make_permutation(parse_values(line.substr(7)));
        continue;
      }
      const std::vector<std::string> tokens = tokenize(line);
      if (tokens.empty()) continue;
      const std::string& tag = tokens[0];
      if (tag == "B") {
        if (tokens.size() != 3) {
          raise(ErrorCode::IoError, "reversal takes offset and j");
        }
        PrefixOp op = reversal_op(parse_int(tokens[2]), parse_int(tokens[1]));
        parsed.ops.push_back(op);
      } else if (tag == "T" || tag == "BT") {
        if (tokens.size() != 4) {
          raise(ErrorCode::IoError, "operation takes offset, j, and k");
        }
        const int offset = parse_int(tokens[1]);
        const int j = parse_int(tokens[2]);
        const int k = parse_int(tokens[3]);
        parsed.ops.push_back(tag == "T" ? transposition_op(j, k, offset)
                                        : transreversal_op(j, k, offset));
      }
      // Anything else is a comment or a metrics line; skip it.
    } catch (const Error& e) {
      raise(e.code(), "line " + std::to_string(line_no) + ": " + e.message());
    }
  }
  return parsed;
}

ParsedTrace parse_trace_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    raise(ErrorCode::IoError, "cannot open '" + path + "'");
  }
  return parse_trace_text(in);
}

}  // namespace prefix_sort
