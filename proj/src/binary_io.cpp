#include "binary_io.hpp"

#include <openssl/evp.h>
#include <zlib.h>

#include "tint/error.hpp"

namespace tint::bin {

std::uint32_t crc32(std::string_view bytes) {
  return static_cast<std::uint32_t>(
      ::crc32(0L, reinterpret_cast<const Bytef*>(bytes.data()), static_cast<uInt>(bytes.size())));
}

std::array<std::uint8_t, 32> sha256(std::string_view bytes) {
  std::array<std::uint8_t, 32> out{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), out.data(), &len, EVP_sha256(), nullptr) != 1 || len != 32) {
    throw Error("SHA-256 computation failed");
  }
  return out;
}

}  // namespace tint::bin
