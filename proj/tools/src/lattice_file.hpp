#pragma once

#include <permorb/lattice.hpp>

#include <stdexcept>
#include <string>

namespace permorb::cli {

class LatticeFileError : public std::runtime_error {
 public:
  LatticeFileError(const std::string& source, int line, int column, const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Grammar (comments start with '#'):
//   name = <string>        bare text to end of line, or "quoted"
//   rank = <int>           optional; must match the gram matrix
//   gram = [[a, b], [c, d]]
Lattice parse_lattice_text(const std::string& text, const std::string& source = "<input>");
Lattice parse_lattice_file(const std::string& path);

}  // namespace permorb::cli
