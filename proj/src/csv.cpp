#include "fussi/csv.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

#include "fussi/errors.hpp"

namespace fussi::csv {

static std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

static std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(trim(cur));
  return out;
}

bool looks_numeric(const std::string& s) {
  return parse_double(s).has_value();
}

std::optional<double> parse_double(const std::string& s) {
  if (s.empty()) return std::nullopt;
  double v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [p, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || p != last) return std::nullopt;
  return v;
}

std::optional<std::int64_t> parse_int(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::int64_t v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [p, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || p != last) return std::nullopt;
  return v;
}

std::string format_double(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, p);
}

std::vector<Row> read_rows(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open " + path);
  std::vector<Row> rows;
  std::string line;
  std::size_t line_no = 0;
  bool first_record = true;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    Row row{line_no, split_fields(line)};
    if (first_record) {
      first_record = false;
      // Optional header: skip when the leading field is not a number.
      if (!row.fields.empty() && !looks_numeric(row.fields[0])) continue;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Writer::Writer(const std::string& path, const std::string& header,
               const std::string& manifest_digest) {
  os_.open(path);
  if (!os_) throw Error("cannot open " + path + " for writing");
  if (!manifest_digest.empty()) os_ << "# manifest " << manifest_digest << "\n";
  if (!header.empty()) os_ << header << "\n";
}

Writer::~Writer() { close(); }

void Writer::raw_line(const std::string& line) { os_ << line << "\n"; }

Writer& Writer::field(std::int64_t v) {
  if (row_open_) pending_.push_back(',');
  pending_ += std::to_string(v);
  row_open_ = true;
  return *this;
}

Writer& Writer::field(double v) {
  if (row_open_) pending_.push_back(',');
  pending_ += format_double(v);
  row_open_ = true;
  return *this;
}

Writer& Writer::field(const std::string& v) {
  if (row_open_) pending_.push_back(',');
  pending_ += v;
  row_open_ = true;
  return *this;
}

void Writer::end_row() {
  os_ << pending_ << "\n";
  pending_.clear();
  row_open_ = false;
}

void Writer::close() {
  if (os_.is_open()) os_.close();
}

}  // namespace fussi::csv
