#pragma once

#include <stdexcept>
#include <string>

#include "timeline/core.hpp"

namespace timeline {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + what),
        line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

// Text format: "n T", then per snapshot a count line "m" followed by m lines
// "u v". Lines starting with '#' are skipped. Text starting with '{' is read
// as JSON: {"n": int, "snapshots": [[[u, v], ...], ...]}.
TemporalGraph parse_instance(const std::string& text);
std::string emit_instance(const TemporalGraph& g);
std::string emit_instance_json(const TemporalGraph& g);

// {"intervals":[{"v":..,"a":..,"b":..},...]}
std::string emit_witness(const Timeline& tl);
Timeline parse_witness(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace timeline
