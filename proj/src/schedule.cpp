#include "sasaki/schedule.hpp"

#include <cmath>
#include <numbers>

#include "sasaki/error.hpp"

namespace sasaki {

namespace {

constexpr double kBoundarySlack = 1e-12;

void check_index(std::int64_t n) {
  if (n < 0) throw Error(ErrorKind::NegativeIndex, "schedule index must be non-negative");
}

}  // namespace

Rational schedule_c(std::int64_t n) {
  check_index(n);
  return Rational(n, n + 2);
}

Rational schedule_c_recurrence(std::int64_t n) {
  check_index(n);
  Rational c(0);
  for (std::int64_t k = 0; k < n; ++k) c = (Rational(1) + c) / (Rational(3) - c);
  return c;
}

double schedule_theta(std::int64_t n) {
  check_index(n);
  if (n == 0) return std::numbers::pi / 2;
  // arccos(1 - 2/(n+2)) = 2 asin(sqrt(1/(n+2))), accurate for large n
  return 2.0 * std::asin(std::sqrt(1.0 / static_cast<double>(n + 2)));
}

std::int64_t schedule_n_min(double angle) {
  if (!(angle > 0.0 && angle <= std::numbers::pi / 2 + kBoundarySlack)) {
    throw Error(ErrorKind::ThetaOutOfRange, "angle must lie in (0, pi/2]");
  }
  const double c = std::cos(angle);
  const double estimate = std::ceil(2.0 * c / (1.0 - c));
  if (!(estimate < 9.0e15)) throw Error(ErrorKind::TooManyRounds, "angle too small for the schedule");
  auto n = static_cast<std::int64_t>(std::max(0.0, estimate));
  while (n > 0 && schedule_theta(n - 1) <= angle + kBoundarySlack) --n;
  while (schedule_theta(n) > angle + kBoundarySlack) ++n;
  return n;
}

}  // namespace sasaki
