#pragma once

#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "fussi/errors.hpp"

// Little-endian primitives for model files. Doubles are written as raw
// IEEE-754 bits, so save/load round trips are bit-exact.

namespace fussi::bio {

inline void write_u64(std::ostream& os, std::uint64_t v) {
  char b[8];
  for (int i = 0; i < 8; ++i) b[i] = char((v >> (8 * i)) & 0xff);
  os.write(b, 8);
}

inline std::uint64_t read_u64(std::istream& is) {
  unsigned char b[8];
  is.read(reinterpret_cast<char*>(b), 8);
  if (!is) throw Error("unexpected end of binary stream");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= std::uint64_t(b[i]) << (8 * i);
  return v;
}

inline void write_i64(std::ostream& os, std::int64_t v) {
  write_u64(os, std::uint64_t(v));
}

inline std::int64_t read_i64(std::istream& is) {
  return std::int64_t(read_u64(is));
}

inline void write_f64(std::ostream& os, double d) {
  std::uint64_t v;
  std::memcpy(&v, &d, 8);
  write_u64(os, v);
}

inline double read_f64(std::istream& is) {
  std::uint64_t v = read_u64(is);
  double d;
  std::memcpy(&d, &v, 8);
  return d;
}

inline void write_string(std::ostream& os, const std::string& s) {
  write_u64(os, s.size());
  os.write(s.data(), std::streamsize(s.size()));
}

inline std::string read_string(std::istream& is) {
  auto n = read_u64(is);
  if (n > (1ull << 30)) throw Error("corrupt string length in binary stream");
  std::string s(n, '\0');
  is.read(s.data(), std::streamsize(n));
  if (!is) throw Error("unexpected end of binary stream");
  return s;
}

inline void write_f64_array(std::ostream& os, const double* p, std::size_t n) {
  write_u64(os, n);
  for (std::size_t i = 0; i < n; ++i) write_f64(os, p[i]);
}

inline std::vector<double> read_f64_array(std::istream& is) {
  auto n = read_u64(is);
  if (n > (1ull << 32)) throw Error("corrupt array length in binary stream");
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = read_f64(is);
  return v;
}

}  // namespace fussi::bio
