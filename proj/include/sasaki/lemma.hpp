#pragma once

// Geometry of projecting one ray onto a rotating family of planes.
//
// In a basis e1, e2, e3 take u = e1 and v = (cos t, sin t, 0) with
// 0 < t < pi/2. For a real phi let w_phi = (0, cos phi, sin phi) and
// E_phi = span{u, w_phi}. v_phi is the normalized projection of v onto E_phi:
//
//   v_phi = (cos t, sin t cos^2 phi, sin t cos phi sin phi)
//           / sqrt(cos^2 t + sin^2 t cos^2 phi)
//
// As (phi, psi) ranges over [0, 2pi]^2 the inner product v_phi . v_psi covers
// exactly [floor(cos t), 1] with floor(x) = (3x - 1)/(x + 1). The minimum is
// reached at phi = -psi = arccos sqrt(cos t / (1 + cos t)).

#include <utility>
#include <vector>

#include "sasaki/subspace.hpp"

namespace sasaki {

struct Interval {
  double lo;
  double hi;
};

// (3x - 1)/(x + 1). Strictly increasing on [0, 1] with value < x below 1.
double cosine_floor(double x);
// Inverse of cosine_floor: (1 + y)/(3 - y).
double cosine_floor_inverse(double y);

// Throw Error(ThetaOutOfRange) unless 0 < theta < pi/2.
Vec3 v_phi(double theta, double phi);
double pair_dot(double theta, double phi, double psi);
Interval lemma_interval(double theta);
// arccos sqrt(cos theta / (1 + cos theta)), where the minimum is attained.
double extremal_phi(double theta);

struct CriticalPoint {
  enum class Kind {
    Diagonal,     // phi = psi: the maximum 1
    SinZero,      // phi = -psi, sin phi = 0
    CosZero,      // phi = -psi, cos phi = 0
    QuarticRoot,  // phi = -psi, sin^2 t cos^4 phi + 2 cos^2 t cos^2 phi - cos^2 t = 0
  };
  Kind kind;
  double phi;
  double psi;
  double value;
};

// One representative per critical class. Quartic roots are reported for both
// phi* and pi - phi*.
std::vector<CriticalPoint> lemma_extrema(double theta);

// (phi, psi) with pair_dot(theta, phi, psi) = target, searched on psi = -phi
// by bisection over [0, extremal_phi(theta)]. Targets within 1e-9 outside
// lemma_interval(theta) are clamped; further out throws
// Error(TargetOutOfRange).
std::pair<double, double> solve_pair(double theta, double target);

struct LemmaScan {
  double min;
  double max;
  double argmin_phi, argmin_psi;
  double argmax_phi, argmax_psi;
};

// Evaluates pair_dot on the (grid + 1)^2 lattice covering [0, 2pi]^2, then
// refines the best cells by successively finer local grids.
LemmaScan scan_pair_dot(double theta, int grid, bool refine = true);

}  // namespace sasaki
