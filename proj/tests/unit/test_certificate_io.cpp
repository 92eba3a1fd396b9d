#include <doctest.h>

#include <random>

#include "sasaki/certificate_io.hpp"
#include "sasaki/error.hpp"

using namespace sasaki;

TEST_CASE("reals use 17 significant digits") {
  CHECK(format_real(0.1) == "0.10000000000000001");
  CHECK(format_real(1.0) == "1");
  CHECK(format_real(-2.5e-9) == "-2.5000000000000001e-09");
}

TEST_CASE("serialize then parse is the identity, bit for bit") {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> g;
  for (int i = 0; i < 20; ++i) {
    const auto a = span({Vec3(g(rng), g(rng), g(rng))});
    const auto b = span({Vec3(g(rng), g(rng), g(rng))});
    const auto cert = collapse(a, b);
    const auto text = serialize_certificate(cert);
    const auto back = parse_certificate(text);
    CHECK(back == cert);
    CHECK(serialize_certificate(back) == text);
  }
  const auto refutation = refute_second_element(span({Vec3(1, 0, 0)}), span({Vec3(0, 1, 0)}));
  CHECK(parse_certificate(serialize_certificate(refutation)) == refutation);
}

TEST_CASE("generation is deterministic") {
  const auto a = span({Vec3(0.3, -0.2, 0.9)}), b = span({Vec3(0.1, 0.8, 0.2)});
  CHECK(serialize_certificate(collapse(a, b)) == serialize_certificate(collapse(a, b)));
}

TEST_CASE("schema and shape are enforced") {
  const auto text = serialize_certificate(collapse(span({Vec3(1, 0, 0)}), span({Vec3(1, 1, 0)})));
  CHECK_THROWS_AS(parse_certificate("{"), Error);
  CHECK_THROWS_AS(parse_certificate("[]"), Error);
  std::string wrong = text;
  wrong.replace(wrong.find("/1"), 2, "/9");
  CHECK_THROWS_AS(parse_certificate(wrong), Error);
  std::string missing = text;
  missing.replace(missing.find("\"final\""), 7, "\"finis\"");
  CHECK_THROWS_AS(parse_certificate(missing), Error);
}
