#include "sasaki/lemma.hpp"

#include <cmath>
#include <numbers>

#include "sasaki/error.hpp"

namespace sasaki {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTargetSlack = 1e-9;

void check_theta(double theta) {
  if (!(theta > 0.0 && theta < kPi / 2)) {
    throw Error(ErrorKind::ThetaOutOfRange, "theta must lie strictly between 0 and pi/2");
  }
}

// cos^2 t + sin^2 t cos^2 phi
double norm_sq(double c2, double s2, double phi) {
  const double cp = std::cos(phi);
  return c2 + s2 * cp * cp;
}

}  // namespace

double cosine_floor(double x) { return (3.0 * x - 1.0) / (x + 1.0); }

double cosine_floor_inverse(double y) { return (1.0 + y) / (3.0 - y); }

Vec3 v_phi(double theta, double phi) {
  check_theta(theta);
  const double c = std::cos(theta), s = std::sin(theta);
  const double cp = std::cos(phi), sp = std::sin(phi);
  return Vec3(c, s * cp * cp, s * cp * sp) / std::sqrt(c * c + s * s * cp * cp);
}

double pair_dot(double theta, double phi, double psi) {
  check_theta(theta);
  const double c = std::cos(theta), s = std::sin(theta);
  const double c2 = c * c, s2 = s * s;
  // products formed symmetrically so that swapping phi and psi is exact
  const double cc = std::cos(phi) * std::cos(psi);
  const double ss = std::sin(phi) * std::sin(psi);
  const double num = c2 + s2 * (cc * cc + cc * ss);
  return num / std::sqrt(norm_sq(c2, s2, phi) * norm_sq(c2, s2, psi));
}

Interval lemma_interval(double theta) {
  check_theta(theta);
  return {cosine_floor(std::cos(theta)), 1.0};
}

double extremal_phi(double theta) {
  check_theta(theta);
  const double c = std::cos(theta);
  return std::acos(std::sqrt(c / (1.0 + c)));
}

std::vector<CriticalPoint> lemma_extrema(double theta) {
  check_theta(theta);
  using K = CriticalPoint::Kind;
  const double star = extremal_phi(theta);
  std::vector<CriticalPoint> out;
  auto add = [&](K kind, double phi, double psi) {
    out.push_back({kind, phi, psi, pair_dot(theta, phi, psi)});
  };
  add(K::Diagonal, 0.0, 0.0);
  add(K::SinZero, kPi, -kPi);
  add(K::CosZero, kPi / 2, -kPi / 2);
  add(K::QuarticRoot, star, -star);
  add(K::QuarticRoot, kPi - star, -(kPi - star));
  return out;
}

std::pair<double, double> solve_pair(double theta, double target) {
  const Interval range = lemma_interval(theta);
  if (!(target >= range.lo - kTargetSlack && target <= range.hi + kTargetSlack)) {
    throw Error(ErrorKind::TargetOutOfRange, "target inner product outside the reachable interval");
  }
  auto g = [&](double phi) { return pair_dot(theta, phi, -phi); };

  // g(0) = 1 and g(star) = range.lo; g decreases in between.
  double lo = 0.0, hi = extremal_phi(theta);
  if (target >= g(lo)) return {lo, -lo};
  if (target <= g(hi)) return {hi, -hi};
  for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (g(mid) > target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double phi = std::abs(g(lo) - target) <= std::abs(g(hi) - target) ? lo : hi;
  return {phi, -phi};
}

LemmaScan scan_pair_dot(double theta, int grid, bool refine) {
  check_theta(theta);
  if (grid < 1) throw Error(ErrorKind::DegenerateInput, "grid must be positive");
  const double step = 2 * kPi / grid;

  LemmaScan r{2.0, -2.0, 0, 0, 0, 0};
  auto visit = [&](double phi, double psi) {
    const double d = pair_dot(theta, phi, psi);
    if (d < r.min) {
      r.min = d;
      r.argmin_phi = phi;
      r.argmin_psi = psi;
    }
    if (d > r.max) {
      r.max = d;
      r.argmax_phi = phi;
      r.argmax_psi = psi;
    }
  };
  for (int i = 0; i <= grid; ++i) {
    for (int j = 0; j <= grid; ++j) visit(i * step, j * step);
  }
  if (!refine) return r;

  // Zoom around the incumbents: 21 x 21 local grids, shrinking 10x per level.
  constexpr int kLocal = 10;
  for (double half = step; half > 1e-10; half /= 10) {
    const double cphi_min = r.argmin_phi, cpsi_min = r.argmin_psi;
    const double cphi_max = r.argmax_phi, cpsi_max = r.argmax_psi;
    for (int i = -kLocal; i <= kLocal; ++i) {
      for (int j = -kLocal; j <= kLocal; ++j) {
        const double di = half * i / kLocal, dj = half * j / kLocal;
        visit(cphi_min + di, cpsi_min + dj);
        visit(cphi_max + di, cpsi_max + dj);
      }
    }
  }
  return r;
}

}  // namespace sasaki
