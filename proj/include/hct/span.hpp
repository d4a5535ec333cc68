#ifndef HCT_SPAN_HPP
#define HCT_SPAN_HPP

#include <string>

namespace hct {

// Half-open region of a source file, 1-based lines and columns.
struct SourceSpan {
  std::string file;
  int start_line = 1;
  int start_col = 1;
  int end_line = 1;
  int end_col = 1;

  static SourceSpan point(std::string file, int line, int col) {
    return SourceSpan{std::move(file), line, col, line, col};
  }

  SourceSpan to(const SourceSpan& other) const {
    SourceSpan s = *this;
    s.end_line = other.end_line;
    s.end_col = other.end_col;
    return s;
  }
};

}  // namespace hct

#endif
