#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace nssigma {

std::uint64_t fnv1a64(std::string_view data);
std::string cache_file_name(std::uint64_t key);

// Byte-level result cache keyed by a hash of the full request description.
std::optional<std::string> cache_load(const std::string& dir, std::uint64_t key);
void cache_store(const std::string& dir, std::uint64_t key, const std::string& bytes);

}  // namespace nssigma
