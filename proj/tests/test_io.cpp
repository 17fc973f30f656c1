#include <doctest.h>

#include <filesystem>

#include "rado/errors.hpp"
#include "rado/io.hpp"

using namespace rado;

TEST_CASE("io: pattern JSON round trip") {
  const std::string text =
      R"({"r": 2, "blocks": [{"color": 0, "len": "1"}, {"color": 1, "len": "3/2"}, {"color": 0, "len": "1/4"}]})";
  const BlockPattern p = parse_pattern(text);
  CHECK(p.size() == 3);
  CHECK(p.lengths()[1] == BigRational(3, 2));
  CHECK(pattern_from_json(pattern_to_json(p)) == p);
  CHECK(pattern_to_json(p).dump() ==
        R"({"r":2,"blocks":[{"color":0,"len":"1"},{"color":1,"len":"3/2"},{"color":0,"len":"1/4"}]})");
}

TEST_CASE("io: malformed patterns") {
  CHECK_THROWS_AS(parse_pattern("{"), ParseError);
  CHECK_THROWS_AS(parse_pattern(R"({"blocks": []})"), ParseError);
  CHECK_THROWS_AS(parse_pattern(R"({"r": 2, "blocks": [{"color": 0, "len": "x"}]})"), ParseError);
  CHECK_THROWS_AS(parse_pattern(R"({"r": 2, "blocks": [{"color": 0, "len": 1.5}]})"), ParseError);
  CHECK_THROWS_AS(parse_pattern(R"({"r": 2, "blocks": [{"color": 0, "len": "0"}]})"), InvalidArgument);
}

TEST_CASE("io: density rendering") {
  const json d = density_to_json(BigRational(47, 6238));
  CHECK(d["fraction"] == "47/6238");
  CHECK(d["reciprocal"] == "132.7234043");
  CHECK_FALSE(density_to_json(BigRational(0)).contains("reciprocal"));
}

TEST_CASE("io: scan CSV") {
  const std::string csv = scan_csv({{1, 0}, {11, 1}});
  CHECK(csv == "n,min_count,min_over_n2\n1,0,0\n11,1,0.008264462810\n");
}

TEST_CASE("io: files") {
  const auto path = std::filesystem::temp_directory_path() / "rado_io_test.txt";
  write_file(path, "0:3,1:2\n");
  CHECK(read_file(path) == "0:3,1:2\n");
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_file(path), IoError);
}
