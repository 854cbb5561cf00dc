#ifndef OMPRACE_SOURCE_LOC_HPP
#define OMPRACE_SOURCE_LOC_HPP

#include <string>

namespace omprace {

/// A position in an input file. Lines and columns are 1-based.
struct SourceLoc {
  std::string file;
  int line = 1;
  int col = 1;

  bool operator==(const SourceLoc &other) const {
    return file == other.file && line == other.line && col == other.col;
  }
  bool operator!=(const SourceLoc &other) const { return !(*this == other); }

  // Orders by (file, line, col); used to sort diagnostics deterministically.
  bool operator<(const SourceLoc &other) const {
    if (file != other.file)
      return file < other.file;
    if (line != other.line)
      return line < other.line;
    return col < other.col;
  }

  std::string str() const {
    return file + ":" + std::to_string(line) + ":" + std::to_string(col);
  }
};

} // namespace omprace

#endif
