#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

namespace fussi::csv {

// One parsed CSV record plus its 1-based physical line number.
struct Row {
  std::size_t line_no = 0;
  std::vector<std::string> fields;
};

// Reads all rows of a comma-separated file. `#` comment lines and blank
// lines are skipped; a leading header line (first field not numeric) is
// skipped as well. Missing file -> Error.
std::vector<Row> read_rows(const std::string& path);

bool looks_numeric(const std::string& s);

// Locale-independent numeric parsing of a whole field.
// Returns nullopt when the field is not a valid number.
std::optional<double> parse_double(const std::string& s);
std::optional<std::int64_t> parse_int(const std::string& s);

// Shortest round-trip decimal representation of a double (std::to_chars).
std::string format_double(double v);

// Line-oriented CSV writer. Writes a `# manifest <digest>` comment when a
// digest is supplied, then an optional header, then rows.
class Writer {
 public:
  Writer(const std::string& path, const std::string& header,
         const std::string& manifest_digest = "");
  ~Writer();

  void raw_line(const std::string& line);
  Writer& field(std::int64_t v);
  Writer& field(int v) { return field(std::int64_t(v)); }
  Writer& field(double v);
  Writer& field(const std::string& v);
  void end_row();
  void close();

 private:
  std::ofstream os_;
  std::string pending_;
  bool row_open_ = false;
};

}  // namespace fussi::csv
