#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tau/engines.hpp"

namespace tau {

// Raised on malformed headers, gaps in n, bad digits or checksum mismatch.
class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Lowercase hex SHA-256 of `bytes`.
std::string sha256_hex(std::string_view bytes);

// Text format:
//   #tau-table v=1 limit=<N> algo=<label>
//   <n>,<tau>            (n = 1..N, one per line)
//   #sha256=<hex>        (over the data lines, each with its trailing '\n')
std::string serialize_table(const TauTable& table);
TauTable parse_table(std::string_view text);

void write_table(const TauTable& table, const std::filesystem::path& path);
TauTable read_table(const std::filesystem::path& path);

}  // namespace tau
