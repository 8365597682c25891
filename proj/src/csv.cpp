#include "csv.hpp"

#include <cstdio>

#include "error.hpp"

namespace rdna {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

csv_writer::csv_writer(const std::string& path) : out_(path, std::ios::binary) {
  if (!out_) fail(errc::io, "cannot open output file '" + path + "'");
}

void csv_writer::comment(const std::string& text) { out_ << "# " << text << "\n"; }

void csv_writer::row(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ << ',';
    out_ << cells[i];
  }
  out_ << '\n';
}

}  // namespace rdna
