#include "fussi/manifest.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fussi/errors.hpp"

namespace fussi {

std::uint64_t fnv1a(const void* data, std::size_t n) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t fnv1a_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error("cannot open " + path);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  char buf[1 << 16];
  while (is) {
    is.read(buf, sizeof(buf));
    std::streamsize n = is.gcount();
    for (std::streamsize i = 0; i < n; ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 0x100000001b3ULL;
    }
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}

void RunManifest::add_input(const std::string& path) {
  input_digests[path] = hex64(fnv1a_file(path));
}

std::string RunManifest::digest() const {
  std::ostringstream os;
  os << kToolVersion << '\n' << command << '\n' << seed << '\n';
  for (const auto& [k, v] : config) os << k << '=' << v << '\n';
  for (const auto& [k, v] : input_digests) os << k << ':' << v << '\n';
  std::string s = os.str();
  return hex64(fnv1a(s.data(), s.size()));
}

void RunManifest::write(const std::string& path) const {
  nlohmann::json j;
  j["tool_version"] = kToolVersion;
  j["command"] = command;
  j["seed"] = seed;
  j["config"] = config;
  j["input_digests"] = input_digests;
  j["timings_ms"] = timings_ms;
  j["digest"] = digest();
  std::ofstream os(path);
  if (!os) throw Error("cannot open " + path + " for writing");
  os << j.dump(2) << "\n";
}

}  // namespace fussi
