#include <doctest.h>

#include <filesystem>
#include <random>

#include "tau/cache.hpp"

using namespace tau;

TEST_CASE("sha256 of known strings") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("serialized layout") {
  const std::string text = serialize_table(tau_eta(3));
  const std::string data = "1,1\n2,-24\n3,252\n";
  CHECK(text == "#tau-table v=1 limit=3 algo=eta\n" + data + "#sha256=" + sha256_hex(data) + "\n");
}

TEST_CASE("round trip for every engine") {
  const std::uint64_t limit = 300;
  const auto sigma = sieve_sigma(limit, {1, 3, 5});
  const TauTable eta = tau_eta(limit);
  for (const TauTable& t : {eta, tau_niebur(limit, sigma), tau_eisenstein(limit, sigma),
                            tau_multiplicative(limit, harvest_prime_taus(eta))}) {
    CHECK(parse_table(serialize_table(t)) == t);
  }
}

TEST_CASE("file round trip") {
  const auto path = std::filesystem::temp_directory_path() / "tau_cache_test.csv";
  const TauTable t = tau_eta(500);
  write_table(t, path);
  CHECK(read_table(path) == t);
  std::filesystem::remove(path);
  CHECK_THROWS(read_table(path));
}

TEST_CASE("reader rejects corruption") {
  const std::string good = serialize_table(tau_eta(30));

  SUBCASE("flipped digit") {
    std::string bad = good;
    const auto pos = bad.find("4830");
    bad[pos] = '5';
    CHECK_THROWS_AS(parse_table(bad), CacheError);
  }
  SUBCASE("any single corrupted data byte") {
    std::mt19937 rng(3);
    const auto data_begin = good.find('\n') + 1;
    const auto data_end = good.find("#sha256");
    for (int i = 0; i < 200; ++i) {
      std::string bad = good;
      const std::size_t pos = data_begin + rng() % (data_end - data_begin);
      bad[pos] = bad[pos] == '7' ? '8' : '7';
      CHECK_THROWS_AS(parse_table(bad), CacheError);
    }
  }
  SUBCASE("header mismatch") {
    std::string bad = good;
    bad.replace(0, good.find('\n'), "#tau-table v=2 limit=30 algo=eta");
    CHECK_THROWS_AS(parse_table(bad), CacheError);
    std::string bad_algo = good;
    bad_algo.replace(0, good.find('\n'), "#tau-table v=1 limit=30 algo=fft");
    CHECK_THROWS_AS(parse_table(bad_algo), CacheError);
    std::string bad_limit = good;
    bad_limit.replace(0, good.find('\n'), "#tau-table v=1 limit=31 algo=eta");
    CHECK_THROWS_AS(parse_table(bad_limit), CacheError);
  }
  SUBCASE("gap in n") {
    std::string bad = good;
    const auto line = bad.find("\n7,");
    bad.replace(line + 1, 1, "8");
    CHECK_THROWS_AS(parse_table(bad), CacheError);
  }
  SUBCASE("missing checksum") {
    CHECK_THROWS_AS(parse_table(good.substr(0, good.find("#sha256"))), CacheError);
  }
  SUBCASE("empty input") { CHECK_THROWS_AS(parse_table(""), CacheError); }
}
