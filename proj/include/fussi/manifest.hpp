#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace fussi {

inline constexpr const char* kToolVersion = "0.1.0";

// 64-bit FNV-1a. A correlation id for artifacts, not a security hash.
std::uint64_t fnv1a(const void* data, std::size_t n);
std::uint64_t fnv1a_file(const std::string& path);
std::string hex64(std::uint64_t v);

// Reproducibility record written next to every command's outputs. The digest
// covers the command, config snapshot, seeds and input digests -- not the
// wall-clock timings -- so identical runs share a digest and artifacts can
// reference it.
struct RunManifest {
  std::string command;
  std::map<std::string, std::string> config;
  std::uint64_t seed = 0;
  std::map<std::string, std::string> input_digests;  // path -> hex digest
  std::map<std::string, double> timings_ms;          // stage -> elapsed

  void add_input(const std::string& path);
  std::string digest() const;
  void write(const std::string& path) const;
};

}  // namespace fussi
