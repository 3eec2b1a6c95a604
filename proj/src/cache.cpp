#include "tau/cache.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include <openssl/evp.h>

namespace tau {

namespace {

constexpr std::string_view kHeaderPrefix = "#tau-table v=1 limit=";
constexpr std::string_view kChecksumPrefix = "#sha256=";

std::uint64_t parse_u64(std::string_view text, const char* what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || (text.size() > 1 && text[0] == '0')) {
    throw CacheError(std::string("bad ") + what + ": '" + std::string(text) + "'");
  }
  return v;
}

BigInt parse_decimal(std::string_view text, std::uint64_t n) {
  const std::string_view digits = (!text.empty() && text[0] == '-') ? text.substr(1) : text;
  bool ok = !digits.empty() && (digits.size() == 1 || digits[0] != '0');
  for (char c : digits) ok = ok && c >= '0' && c <= '9';
  if (!ok) throw CacheError("bad tau value on line for n=" + std::to_string(n));
  return BigInt(std::string(text), 10);
}

}  // namespace

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("EVP_Digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xf]);
  }
  return out;
}

std::string serialize_table(const TauTable& table) {
  std::string data;
  for (std::uint64_t n = 1; n <= table.limit(); ++n) {
    data += std::to_string(n);
    data += ',';
    data += table[n].get_str(10);
    data += '\n';
  }
  std::string out(kHeaderPrefix);
  out += std::to_string(table.limit());
  out += " algo=";
  out += to_string(table.algo());
  out += '\n';
  out += data;
  out += kChecksumPrefix;
  out += sha256_hex(data);
  out += '\n';
  return out;
}

TauTable parse_table(std::string_view text) {
  const auto header_end = text.find('\n');
  if (header_end == std::string_view::npos) throw CacheError("missing header line");
  const std::string_view header = text.substr(0, header_end);
  if (!header.starts_with(kHeaderPrefix)) throw CacheError("header mismatch: '" + std::string(header) + "'");
  const std::string_view rest = header.substr(kHeaderPrefix.size());
  const auto space = rest.find(' ');
  if (space == std::string_view::npos || !rest.substr(space + 1).starts_with("algo=")) {
    throw CacheError("header mismatch: '" + std::string(header) + "'");
  }
  const std::uint64_t limit = parse_u64(rest.substr(0, space), "limit");
  if (limit == 0) throw CacheError("header limit must be >= 1");
  Algo algo;
  try {
    algo = parse_algo(rest.substr(space + 1 + 5));
  } catch (const std::invalid_argument& e) {
    throw CacheError(std::string("header mismatch: ") + e.what());
  }

  const std::size_t data_begin = header_end + 1;
  std::size_t pos = data_begin;
  std::vector<BigInt> values(limit + 1, BigInt(0));
  for (std::uint64_t n = 1; n <= limit; ++n) {
    const auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) throw CacheError("truncated data at n=" + std::to_string(n));
    const std::string_view line = text.substr(pos, eol - pos);
    const auto comma = line.find(',');
    if (comma == std::string_view::npos || line.starts_with('#')) {
      throw CacheError("gap in n: expected n=" + std::to_string(n));
    }
    if (parse_u64(line.substr(0, comma), "n") != n) throw CacheError("gap in n: expected n=" + std::to_string(n));
    values[n] = parse_decimal(line.substr(comma + 1), n);
    pos = eol + 1;
  }
  const std::string_view data = text.substr(data_begin, pos - data_begin);
  const std::string_view trailer = text.substr(pos);
  if (!trailer.starts_with(kChecksumPrefix)) throw CacheError("missing checksum line (or extra data rows)");
  std::string_view hex = trailer.substr(kChecksumPrefix.size());
  if (hex.ends_with('\n')) hex.remove_suffix(1);
  if (hex != sha256_hex(data)) throw CacheError("checksum mismatch");
  return TauTable(algo, std::move(values));
}

void write_table(const TauTable& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::ios_base::failure("cannot open '" + path.string() + "' for writing");
  const std::string text = serialize_table(table);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw std::ios_base::failure("write to '" + path.string() + "' failed");
}

TauTable read_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_table(buf.str());
}

}  // namespace tau
