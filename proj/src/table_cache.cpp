#include "pavg/table_cache.hpp"

#include <cstdio>
#include <fstream>
#include <vector>

#include "pavg/errors.hpp"

namespace pavg {

namespace {

constexpr char kMagic[4] = {'P', 'A', 'V', 'G'};
constexpr std::uint8_t kVersion = 0x01;

void put_u64le(std::string& out, u64 v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

void put_leb128(std::string& out, u64 v) {
  do {
    std::uint8_t byte = v & 0x7F;
    v >>= 7;
    if (v != 0) byte |= 0x80;
    out.push_back(static_cast<char>(byte));
  } while (v != 0);
}

class Reader {
 public:
  Reader(const std::string& data, const std::string& path) : data_(data), path_(path) {}

  std::uint8_t byte() {
    if (pos_ >= data_.size()) throw ParseError("truncated cache file " + path_);
    return static_cast<std::uint8_t>(data_[pos_++]);
  }

  u64 u64le() {
    u64 v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<u64>(byte()) << (8 * i);
    return v;
  }

  u64 leb128() {
    u64 v = 0;
    int shift = 0;
    while (true) {
      const std::uint8_t b = byte();
      if (shift >= 64 || (shift == 63 && (b & 0x7E)))
        throw ParseError("oversized varint in cache file " + path_);
      v |= static_cast<u64>(b & 0x7F) << shift;
      if (!(b & 0x80)) return v;
      shift += 7;
    }
  }

  std::size_t remaining() const { return data_.size() - pos_; }

 private:
  const std::string& data_;
  std::string path_;
  std::size_t pos_ = 0;
};

}  // namespace

void save_table(const PrimeTable& t, const std::string& path) {
  std::string out;
  out.reserve(21 + t.primes().size() * 2 + 8);
  out.append(kMagic, 4);
  out.push_back(static_cast<char>(kVersion));
  put_u64le(out, t.limit());
  put_u64le(out, static_cast<u64>(t.count()));
  u64 prev = 0, checksum = 0;
  for (std::uint32_t p : t.primes()) {
    put_leb128(out, p - prev);
    prev = p;
    checksum += p;  // mod 2^64 by unsigned wraparound
  }
  put_u64le(out, checksum);

  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open cache file for writing: " + path);
  f.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!f) throw IoError("short write to cache file: " + path);
}

PrimeTable load_table(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open cache file: " + path);
  std::string data((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  if (f.bad()) throw IoError("read failure on cache file: " + path);

  Reader r(data, path);
  for (char m : kMagic)
    if (r.byte() != static_cast<std::uint8_t>(m))
      throw ParseError("bad magic in cache file " + path);
  const std::uint8_t version = r.byte();
  if (version != kVersion)
    throw ParseError("unsupported cache version " + std::to_string(version) + " in " + path);

  const u64 limit = r.u64le();
  const u64 count = r.u64le();
  if (limit < 2 || limit > 0xFFFFFFFFull)
    throw IntegrityError("implausible limit " + std::to_string(limit) + " in cache " + path);

  std::vector<std::uint32_t> primes;
  primes.reserve(count);
  u64 prev = 0, checksum = 0, running = 0;
  std::vector<u64> sums;
  sums.reserve(count);
  for (u64 i = 0; i < count; ++i) {
    const u64 delta = r.leb128();
    const u64 p = prev + delta;
    if (p <= prev && i > 0) throw IntegrityError("non-increasing primes in cache " + path);
    if (p > limit) throw IntegrityError("prime beyond stated limit in cache " + path);
    prev = p;
    checksum += p;
    if (__builtin_add_overflow(running, p, &running))
      throw IntegrityError("prefix sum overflow while loading cache " + path);
    primes.push_back(static_cast<std::uint32_t>(p));
    sums.push_back(running);
  }
  if (r.remaining() != 8) throw ParseError("trailing or missing bytes in cache file " + path);
  const u64 stored = r.u64le();
  if (stored != checksum)
    throw IntegrityError("checksum mismatch in cache " + path + ": stored " +
                         std::to_string(stored) + ", recomputed " + std::to_string(checksum));
  if (primes.empty() || primes.front() != 2)
    throw IntegrityError("cache " + path + " does not start at the prime 2");

  PrimeTable t;
  t.limit_ = limit;
  t.primes_ = std::move(primes);
  t.sums_ = std::move(sums);
  return t;
}

}  // namespace pavg
