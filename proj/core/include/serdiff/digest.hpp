#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace serdiff {

// Streaming SHA-256 with hex output. Backs dataset checksums and parameter
// fingerprints.
class Sha256 {
 public:
  Sha256();
  ~Sha256();
  Sha256(const Sha256&) = delete;
  Sha256& operator=(const Sha256&) = delete;

  void update(const void* bytes, std::size_t n);
  void update(const std::string& s) { update(s.data(), s.size()); }
  void update_u64(std::uint64_t v);
  void update_f64(double v);

  // Finalizes; the object must not be updated afterwards.
  std::string hex();

 private:
  void* ctx_;
};

std::string sha256_hex(const void* bytes, std::size_t n);
std::string sha256_hex(const std::string& s);

}  // namespace serdiff
