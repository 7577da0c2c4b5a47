#pragma once

// Little-endian encoding helpers shared by the store and model writers.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace tint::bin {

inline void put_u8(std::string& out, std::uint8_t v) { out.push_back(static_cast<char>(v)); }

template <typename T>
void put_le(std::string& out, T v) {
  for (std::size_t i = 0; i < sizeof(T); ++i) out.push_back(static_cast<char>((std::uint64_t(v) >> (8 * i)) & 0xFF));
}
inline void put_u16(std::string& out, std::uint16_t v) { put_le(out, v); }
inline void put_u32(std::string& out, std::uint32_t v) { put_le(out, v); }
inline void put_u64(std::string& out, std::uint64_t v) { put_le(out, v); }

inline void put_str16(std::string& out, std::string_view s) {
  put_u16(out, static_cast<std::uint16_t>(s.size()));
  out.append(s);
}
inline void put_str8(std::string& out, std::string_view s) {
  put_u8(out, static_cast<std::uint8_t>(s.size()));
  out.append(s);
}

// Bounds-checked reader; Error is thrown on overrun.
template <typename Error>
class Reader {
 public:
  Reader(const char* data, std::size_t size, const char* what) : data_(data), size_(size), what_(what) {}
  explicit Reader(std::string_view bytes, const char* what) : Reader(bytes.data(), bytes.size(), what) {}

  bool done() const { return pos_ >= size_; }
  std::size_t pos() const { return pos_; }

  std::uint64_t uint(std::size_t bytes) {
    need(bytes);
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < bytes; ++i) {
      v |= std::uint64_t(static_cast<unsigned char>(data_[pos_ + i])) << (8 * i);
    }
    pos_ += bytes;
    return v;
  }
  std::string_view bytes(std::size_t n) {
    need(n);
    std::string_view s(data_ + pos_, n);
    pos_ += n;
    return s;
  }
  std::string_view str16() { return bytes(uint(2)); }
  std::string_view str8() { return bytes(uint(1)); }

 private:
  void need(std::size_t n) const {
    if (n > size_ - pos_) throw Error(std::string(what_) + ": truncated data");
  }
  const char* data_;
  std::size_t size_;
  const char* what_;
  std::size_t pos_ = 0;
};

std::uint32_t crc32(std::string_view bytes);
std::array<std::uint8_t, 32> sha256(std::string_view bytes);

}  // namespace tint::bin
