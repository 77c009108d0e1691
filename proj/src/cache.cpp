#include "nssigma/cache.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace nssigma {

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string cache_file_name(std::uint64_t key) {
  std::ostringstream out;
  out << std::hex;
  for (int shift = 60; shift >= 0; shift -= 4)
    out << ((key >> shift) & 0xf);
  return out.str() + ".out";
}

std::optional<std::string> cache_load(const std::string& dir, std::uint64_t key) {
  std::filesystem::path p = std::filesystem::path(dir) / cache_file_name(key);
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  if (!in.good() && !in.eof()) return std::nullopt;
  return buf.str();
}

void cache_store(const std::string& dir, std::uint64_t key, const std::string& bytes) {
  std::filesystem::path base(dir);
  std::error_code ec;
  std::filesystem::create_directories(base, ec);
  if (ec) return;  // caching is best effort
  std::filesystem::path final_path = base / cache_file_name(key);
  std::filesystem::path tmp_path = final_path;
  tmp_path += ".tmp";
  {
    std::ofstream out(tmp_path, std::ios::binary | std::ios::trunc);
    if (!out) return;
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out.good()) return;
  }
  std::filesystem::rename(tmp_path, final_path, ec);
}

}  // namespace nssigma
