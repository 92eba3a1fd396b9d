#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "sasaki/collapse.hpp"
#include "sasaki/error.hpp"
#include "sasaki/schedule.hpp"

using namespace sasaki;

namespace {

constexpr double kPi = std::numbers::pi;
const Vec3 e1(1, 0, 0), e2(0, 1, 0), e3(0, 0, 1);

Vec3 random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  return Vec3(g(rng), g(rng), g(rng)).normalized();
}

Subspace3 ray(const Vec3& v) { return span({v}); }

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Format;
}

}  // namespace

TEST_CASE("induction step from theta_1 reaches orthogonal atoms") {
  const double t1 = schedule_theta(1);
  const auto a = ray(e1), b = ray(Vec3(std::cos(t1), std::sin(t1), 0));
  const auto r = induction_step(a, b, 1);
  CHECK(std::abs(angle_atoms(r.first, r.second) - kPi / 2) <= 1e-8);
  // both planes lie above a, results are projections of b
  for (const auto* step : {&r.first_step, &r.second_step}) {
    const auto plane = span({step->plane[0], step->plane[1]});
    CHECK(leq_sub(a, plane));
    CHECK(same_sub(sasaki_sub(b, plane), ray(step->result)));
    CHECK(step->parent == 1);
    CHECK(step->witness == 0);
  }
}

TEST_CASE("induction step at 60 degrees lands on theta_1") {
  const auto a = ray(e1), b = ray(Vec3(0.5, std::sqrt(3.0) / 2, 0));
  const auto r = induction_step(a, b, 2);
  CHECK(std::abs(angle_atoms(r.first, r.second) - std::acos(1.0 / 3)) <= 1e-9);
}

TEST_CASE("induction step errors") {
  const auto a = ray(e1);
  CHECK(kind_of([&] { induction_step(a, a, 1); }) == ErrorKind::DegeneratePair);
  CHECK(kind_of([&] { induction_step(a, ray(Vec3(1, 0.1, 0)), 1); }) == ErrorKind::AngleTooSmall);
  CHECK(kind_of([&] { induction_step(a, ray(e2), 0); }) == ErrorKind::NegativeIndex);
  CHECK(kind_of([&] { induction_step(span({e1, e2}), ray(e2), 1); }) == ErrorKind::NotAnAtom);
}

TEST_CASE("collapse of orthogonal atoms has no rounds") {
  const auto cert = collapse(ray(e1), ray(e2));
  CHECK(cert.rounds.empty());
  REQUIRE(cert.final_pair.has_value());
  CHECK(*cert.final_pair == std::pair<std::size_t, std::size_t>{0, 1});
  const auto report = verify_certificate(cert);
  CHECK(report.accepted);
  CHECK(report.bottom_depth == 1);
}

TEST_CASE("collapse at 60 degrees takes two rounds") {
  const auto cert = collapse(ray(e1), ray(Vec3(0.5, std::sqrt(3.0) / 2, 0)));
  CHECK(cert.rounds.size() == 2);
  const auto report = verify_certificate(cert);
  CHECK(report.accepted);
  CHECK(report.bottom_depth == 3);
  CHECK(report.final_abs_dot <= 1e-7);
}

TEST_CASE("collapse at 45 degrees takes five rounds") {
  const auto cert = collapse(ray(e1), ray(Vec3(1, 1, 0)));
  CHECK(cert.rounds.size() == 5);
  CHECK(verify_certificate(cert).accepted);
}

TEST_CASE("collapse refuses equal atoms") {
  CHECK(kind_of([] { collapse(ray(e1), ray(-e1)); }) == ErrorKind::DegeneratePair);
}

TEST_CASE("collapse refuses schedules beyond the round limit") {
  CollapseOptions opts;
  opts.max_rounds = 10;
  CHECK(kind_of([&] { collapse(ray(e1), ray(Vec3(1, 0.05, 0)), opts); }) == ErrorKind::TooManyRounds);
}

TEST_CASE("random pairs: round count, schedule, depth, final orthogonality") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const Vec3 u = random_unit(rng), v = random_unit(rng);
    const auto a = ray(u), b = ray(v);
    const auto n = schedule_n_min(angle_atoms(a, b));
    const auto cert = collapse(a, b);
    CAPTURE(i);
    REQUIRE(static_cast<std::int64_t>(cert.rounds.size()) == n);
    // round k ends at theta(n - k)
    for (std::size_t k = 1; k <= cert.rounds.size(); ++k) {
      const std::size_t first = 2 * k, second = 2 * k + 1;
      CHECK(std::abs(certificate_item_angle(cert, first, second) - schedule_theta(n - std::int64_t(k))) <= 1e-8);
    }
    const auto report = verify_certificate(cert);
    CHECK(report.accepted);
    CHECK(report.bottom_depth == static_cast<std::size_t>(n) + 1);
    CHECK(report.final_abs_dot <= 1e-7);
  }
}

TEST_CASE("small starting angles stay accurate") {
  // about 1600 rounds
  const auto cert = collapse(ray(e1), ray(Vec3(1, 0.05, 0)));
  const auto report = verify_certificate(cert);
  CHECK(report.accepted);
  CHECK(report.final_abs_dot <= 1e-9);
}

TEST_CASE("long schedules do not drift off the reachable interval") {
  std::mt19937_64 rng(140);
  std::uniform_real_distribution<double> angle(0.01, 0.05);
  for (int i = 0; i < 10; ++i) {
    const Vec3 u = random_unit(rng);
    Vec3 w = u.cross(random_unit(rng)).normalized();
    const double t = angle(rng);
    const Vec3 v = std::cos(t) * u + std::sin(t) * w;
    CAPTURE(t);
    const auto cert = collapse(ray(u), ray(v));
    CHECK(static_cast<std::int64_t>(cert.rounds.size()) == schedule_n_min(angle_atoms(ray(u), ray(v))));
    const auto report = verify_certificate(cert);
    CHECK(report.accepted);
    CHECK(report.final_abs_dot <= 1e-9);
  }
}

TEST_CASE("verifier rejects targeted corruptions") {
  const auto good = collapse(ray(e1), ray(Vec3(1, 1, 0.3)));
  REQUIRE(good.rounds.size() >= 2);
  REQUIRE(verify_certificate(good).accepted);

  SUBCASE("perturbed result atom") {
    auto bad = good;
    bad.rounds[1].first.result += Vec3(1e-3, 0, 0);
    const auto r = verify_certificate(bad);
    CHECK_FALSE(r.accepted);
    CHECK(r.failed == CertificateCheck::Projection);
  }
  SUBCASE("plane omits its witness") {
    auto bad = good;
    bad.rounds[0].second.plane = {e2, e3};
    const auto r = verify_certificate(bad);
    CHECK_FALSE(r.accepted);
    CHECK(r.failed == CertificateCheck::Membership);
  }
  SUBCASE("wrong witness index") {
    auto bad = good;
    bad.rounds[1].first.witness = bad.rounds[1].first.parent;
    const auto r = verify_certificate(bad);
    CHECK_FALSE(r.accepted);
    CHECK(r.failed == CertificateCheck::Membership);
  }
  SUBCASE("witness from the future") {
    auto bad = good;
    bad.rounds[0].first.witness = 7;
    const auto r = verify_certificate(bad);
    CHECK_FALSE(r.accepted);
    CHECK(r.failed == CertificateCheck::Membership);
  }
  SUBCASE("non-orthogonal final pair") {
    auto bad = good;
    bad.final_pair = std::pair<std::size_t, std::size_t>{0, 1};
    const auto r = verify_certificate(bad);
    CHECK_FALSE(r.accepted);
    CHECK(r.failed == CertificateCheck::Final);
  }
  SUBCASE("non-unit initial atom") {
    auto bad = good;
    bad.initial_atoms[1] *= 2.0;
    const auto r = verify_certificate(bad);
    CHECK_FALSE(r.accepted);
    CHECK(r.failed == CertificateCheck::Initial);
  }
  SUBCASE("basis not orthonormal") {
    auto bad = good;
    bad.basis[2] = bad.basis[1];
    CHECK(verify_certificate(bad).failed == CertificateCheck::Initial);
  }
  SUBCASE("bad tolerance") {
    auto bad = good;
    bad.tolerance = -1;
    CHECK(verify_certificate(bad).failed == CertificateCheck::Structure);
  }
}

TEST_CASE("refute_second_element") {
  const auto a = ray(e1);

  SUBCASE("orthogonal subspace gives a one-step certificate") {
    const auto cert = refute_second_element(a, span({e2, e3}));
    CHECK(cert.rounds.empty());
    REQUIRE(cert.premise.has_value());
    CHECK_FALSE(cert.premise->result.has_value());
    const auto r = verify_certificate(cert);
    CHECK(r.accepted);
    CHECK(r.bottom_depth == 1);
  }
  SUBCASE("atom already below") {
    CHECK(kind_of([&] { refute_second_element(a, a); }) == ErrorKind::AlreadyAbove);
    CHECK(kind_of([&] { refute_second_element(a, span({e1, e2})); }) == ErrorKind::AlreadyAbove);
  }
  SUBCASE("tilted plane projects to a ray at 45 degrees") {
    const auto e = span({Vec3(1, 1, 0).normalized(), e3});
    const auto cert = refute_second_element(a, e);
    REQUIRE(cert.initial_atoms.size() == 2);
    CHECK(same_sub(ray(cert.initial_atoms[1]), ray(Vec3(1, 1, 0))));
    CHECK(cert.rounds.size() == 5);
    const auto r = verify_certificate(cert);
    CHECK(r.accepted);
    CHECK(r.bottom_depth == 7);
  }
  SUBCASE("zero subspace") {
    CHECK(verify_certificate(refute_second_element(a, Subspace3::zero())).accepted);
  }
  SUBCASE("forged premise result is rejected") {
    auto cert = refute_second_element(a, span({Vec3(1, 1, 0).normalized(), e3}));
    cert.premise->subspace = {Vec3(1, 2, 0).normalized(), e3};
    const auto r = verify_certificate(cert);
    CHECK_FALSE(r.accepted);
    CHECK(r.failed == CertificateCheck::Projection);
  }
}

TEST_CASE("refutation on random pairs") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> dim(0, 2);
  int done = 0;
  while (done < 50) {
    const auto a = ray(random_unit(rng));
    std::vector<Vec3> vs;
    for (int k = dim(rng); k > 0; --k) vs.push_back(random_unit(rng));
    const auto e = span(vs);
    if (leq_sub(a, e)) continue;
    CHECK(verify_certificate(refute_second_element(a, e)).accepted);
    ++done;
  }
}
