// Byte-stable CSV output: fixed header order, floats at 9 significant digits,
// LF line endings.
#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace rdna {

std::string format_double(double v);

class csv_writer {
 public:
  explicit csv_writer(const std::string& path);

  void comment(const std::string& text);  // '# ' prefixed line
  void row(const std::vector<std::string>& cells);

 private:
  std::ofstream out_;
};

}  // namespace rdna
