#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "sasaki/error.hpp"
#include "sasaki/subspace.hpp"

using namespace sasaki;

namespace {

const Vec3 e1(1, 0, 0), e2(0, 1, 0), e3(0, 0, 1);
constexpr double kPi = std::numbers::pi;

Subspace3 random_subspace(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::uniform_int_distribution<int> dim(0, 3);
  const int d = dim(rng);
  std::vector<Vec3> vs;
  for (int i = 0; i < d; ++i) vs.emplace_back(g(rng), g(rng), g(rng));
  return span(vs);
}

}  // namespace

TEST_CASE("span and project") {
  const auto x = span({e1});
  CHECK(x.dim() == 1);
  CHECK((project(x, Vec3(2, -3, 5)) - Vec3(2, 0, 0)).norm() < 1e-15);
  CHECK(span({e1, e2, e1 + e2}).dim() == 2);
  CHECK(span({e1, e2, e3}).dim() == 3);
  CHECK(span(std::span<const Vec3>{}).dim() == 0);
  CHECK_THROWS_AS(span({Vec3::Zero()}), Error);
  try {
    span({Vec3::Zero(), Vec3::Zero()});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateInput);
  }
}

TEST_CASE("rank threshold ignores noise below 1e-9 relative") {
  CHECK(span({e1, e1 + 1e-12 * e2}).dim() == 1);
  CHECK(span({e1, e1 + 1e-6 * e2}).dim() == 2);
}

TEST_CASE("lattice operations") {
  const auto xy = span({e1, e2}), yz = span({e2, e3});
  CHECK(same_sub(meet_sub(xy, yz), span({e2})));
  const auto j = join_sub(span({e1}), span({e2}));
  CHECK(j.dim() == 2);
  CHECK(same_sub(j, xy));
  CHECK(same_sub(ortho_sub(xy), span({e3})));
  CHECK(leq_sub(span({e1}), xy));
  CHECK_FALSE(leq_sub(span({e3}), xy));
  CHECK(same_sub(meet_sub(span({e1}), span({e2})), Subspace3::zero()));
  CHECK(same_sub(join_sub(xy, span({e3})), Subspace3::whole()));
}

TEST_CASE("sasaki_sub examples") {
  const auto a = span({e1});
  CHECK(same_sub(sasaki_sub(a, a), a));
  const auto b = span({(e1 + e2).normalized()});
  CHECK(same_sub(sasaki_sub(a, b), span({e1 + e2})));
  CHECK((project(b, e1) - 0.5 * (e1 + e2)).norm() < 1e-15);
  CHECK(sasaki_sub(a, span({e2})).dim() == 0);
  CHECK(sasaki_sub(span({e1, e2}), span({e3})).dim() == 0);
}

TEST_CASE("angle between atoms") {
  CHECK(angle_atoms(span({e1}), span({e1})) == doctest::Approx(0.0));
  CHECK(angle_atoms(span({e1}), span({e2})) == doctest::Approx(kPi / 2));
  const Vec3 sixty(std::cos(kPi / 3), std::sin(kPi / 3), 0);
  CHECK(angle_atoms(span({e1}), span({sixty})) == doctest::Approx(kPi / 3).epsilon(1e-12));
  CHECK(angle_atoms(span({e1}), span({-sixty})) == doctest::Approx(kPi / 3).epsilon(1e-12));
  CHECK_THROWS_AS(angle_atoms(span({e1, e2}), span({e1})), Error);
}

TEST_CASE("angle is symmetric and separates atoms") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  for (int i = 0; i < 200; ++i) {
    const auto a = span({Vec3(g(rng), g(rng), g(rng))});
    const auto b = span({Vec3(g(rng), g(rng), g(rng))});
    const double ab = angle_atoms(a, b);
    CHECK(ab == angle_atoms(b, a));
    CHECK(ab >= 0.0);
    CHECK(ab <= kPi / 2);
    CHECK(angle_atoms(a, a) < 1e-12);
  }
}

TEST_CASE("projector laws and dual Sasaki computation on random pairs") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 500; ++i) {
    const auto a = random_subspace(rng), b = random_subspace(rng);
    CHECK(satisfies_projector_laws(a));
    CHECK(satisfies_projector_laws(ortho_sub(a)));
    CHECK(satisfies_projector_laws(join_sub(a, b)));
    CHECK(satisfies_projector_laws(meet_sub(a, b)));

    const auto by_projection = sasaki_sub(a, b);
    const auto by_lattice = meet_sub(b, join_sub(a, ortho_sub(b)));
    CAPTURE(a.dim());
    CAPTURE(b.dim());
    CHECK(satisfies_projector_laws(by_projection));
    CHECK(same_sub(by_projection, by_lattice));
    CHECK(leq_sub(by_projection, b));
  }
}

TEST_CASE("orthomodular law holds numerically") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 300; ++i) {
    const auto x = random_subspace(rng), z = random_subspace(rng);
    const auto y = join_sub(x, z);  // x <= y
    REQUIRE(leq_sub(x, y));
    CHECK(same_sub(join_sub(x, meet_sub(y, ortho_sub(x))), y));
  }
}

TEST_CASE("from_projector validates") {
  CHECK_NOTHROW(Subspace3::from_projector(span({e1, e2}).projector(), 2));
  CHECK_THROWS_AS(Subspace3::from_projector(span({e1, e2}).projector(), 1), Error);
  Mat3 not_idempotent = Mat3::Identity() * 0.5;
  CHECK_THROWS_AS(Subspace3::from_projector(not_idempotent, 1), Error);
}

TEST_CASE("direction fixes the sign") {
  const auto a = span({Vec3(-1, 0.2, 0)});
  const Vec3 d = a.direction();
  CHECK(d[0] > 0);
  CHECK(std::abs(d.norm() - 1.0) < 1e-15);
  CHECK_THROWS_AS(span({e1, e2}).direction(), Error);
}
