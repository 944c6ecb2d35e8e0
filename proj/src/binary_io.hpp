#pragma once

#include "tccs/graph.hpp"

#include <cstring>
#include <istream>
#include <ostream>

// Little-endian fixed-width readers/writers shared by the index formats.
namespace tccs::bio {

inline void put8(std::ostream& o, std::uint8_t v) { o.put(static_cast<char>(v)); }

inline void put32(std::ostream& o, std::uint32_t v) {
  char b[4] = {static_cast<char>(v), static_cast<char>(v >> 8), static_cast<char>(v >> 16),
               static_cast<char>(v >> 24)};
  o.write(b, 4);
}

inline void put64(std::ostream& o, std::uint64_t v) {
  put32(o, static_cast<std::uint32_t>(v));
  put32(o, static_cast<std::uint32_t>(v >> 32));
}

inline std::uint8_t get8(std::istream& i) {
  int c = i.get();
  if (c < 0) throw IoError("truncated index file");
  return static_cast<std::uint8_t>(c);
}

inline std::uint32_t get32(std::istream& i) {
  char b[4];
  if (!i.read(b, 4)) throw IoError("truncated index file");
  return static_cast<std::uint32_t>(static_cast<unsigned char>(b[0])) |
         (static_cast<std::uint32_t>(static_cast<unsigned char>(b[1])) << 8) |
         (static_cast<std::uint32_t>(static_cast<unsigned char>(b[2])) << 16) |
         (static_cast<std::uint32_t>(static_cast<unsigned char>(b[3])) << 24);
}

inline std::uint64_t get64(std::istream& i) {
  std::uint64_t lo = get32(i);
  std::uint64_t hi = get32(i);
  return lo | (hi << 32);
}

inline void putMagic(std::ostream& o, const char magic[7], std::uint8_t version) {
  o.write(magic, 7);
  put8(o, version);
}

inline void expectMagic(std::istream& i, const char magic[7], std::uint8_t version,
                        const char* kind) {
  char b[7];
  if (!i.read(b, 7)) throw IoError("truncated index file");
  if (std::memcmp(b, magic, 7) != 0)
    throw IoError(std::string("bad magic, not a ") + kind + " index file");
  std::uint8_t ver = get8(i);
  if (ver != version)
    throw IoError(std::string("unsupported ") + kind + " format version " + std::to_string(ver));
}

// streambuf that discards output and counts bytes; sizes a serialization
// without materialising it.
class CountingBuf : public std::streambuf {
 public:
  std::size_t count() const { return count_; }

 protected:
  int overflow(int c) override {
    if (c != EOF) ++count_;
    return c;
  }
  std::streamsize xsputn(const char*, std::streamsize n) override {
    count_ += static_cast<std::size_t>(n);
    return n;
  }

 private:
  std::size_t count_ = 0;
};

}  // namespace tccs::bio
