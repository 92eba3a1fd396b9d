#pragma once

// Closed subspaces of real 3-space, represented by their orthogonal
// projectors. Together with ortho_sub / meet_sub / join_sub this is the
// Hilbert lattice of R^3; sasaki_sub is the Sasaki projection realized as
// "project A onto B".

#include <Eigen/Dense>
#include <span>
#include <vector>

namespace sasaki {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

struct Tolerances {
  double mat = 1e-9;   // projector equality / order, max-entry norm
  double rank = 1e-9;  // singular-value threshold
  double unit = 1e-9;  // | |v| - 1 | for unit vectors
  double orth = 1e-7;  // final orthogonality of a collapse
};

class Subspace3 {
 public:
  // The zero subspace.
  Subspace3() : projector_(Mat3::Zero()) {}

  // Validates the projector laws (symmetric, idempotent, trace = dim) within
  // tol.mat; throws Error(DegenerateInput) otherwise.
  static Subspace3 from_projector(const Mat3& projector, int dim, const Tolerances& tol = {});
  static Subspace3 zero() { return Subspace3(); }
  static Subspace3 whole() { return Subspace3(Mat3::Identity(), 3); }

  const Mat3& projector() const noexcept { return projector_; }
  int dim() const noexcept { return dim_; }
  bool is_atom() const noexcept { return dim_ == 1; }

  // Orthonormal basis as columns (3 x dim).
  Eigen::Matrix<double, 3, Eigen::Dynamic> basis() const;
  // Unit vector spanning an atom; throws Error(NotAnAtom) otherwise. The
  // sign is fixed so that the largest-magnitude coordinate is positive.
  Vec3 direction() const;

 private:
  friend Subspace3 range_of(const Eigen::Matrix<double, 3, Eigen::Dynamic>& m, double threshold);
  friend Subspace3 ortho_sub(const Subspace3& e);
  Subspace3(Mat3 projector, int dim) : projector_(std::move(projector)), dim_(dim) {}

  Mat3 projector_;
  int dim_ = 0;
};

// Column space of m, keeping singular directions with sigma > threshold.
Subspace3 range_of(const Eigen::Matrix<double, 3, Eigen::Dynamic>& m, double threshold);

// Linear hull; rank is decided relative to the largest singular value. An
// empty list gives the zero subspace; a non-empty list of zero vectors throws
// Error(DegenerateInput).
Subspace3 span(std::span<const Vec3> vectors, const Tolerances& tol = {});
Subspace3 span(std::initializer_list<Vec3> vectors, const Tolerances& tol = {});

Vec3 project(const Subspace3& e, const Vec3& v);
Subspace3 ortho_sub(const Subspace3& e);
Subspace3 join_sub(const Subspace3& e, const Subspace3& f, const Tolerances& tol = {});
// Computed as (e' \/ f')'.
Subspace3 meet_sub(const Subspace3& e, const Subspace3& f, const Tolerances& tol = {});
bool leq_sub(const Subspace3& e, const Subspace3& f, const Tolerances& tol = {});
bool same_sub(const Subspace3& e, const Subspace3& f, const Tolerances& tol = {});

// A & B: the span of the images of A under orthogonal projection onto B.
Subspace3 sasaki_sub(const Subspace3& a, const Subspace3& b, const Tolerances& tol = {});

// Angle in [0, pi/2] between two atoms, arccos(|u.v| / (|u| |v|)), computed
// through atan2 for accuracy near 0 and pi/2. Throws Error(NotAnAtom).
double angle_atoms(const Subspace3& a, const Subspace3& b);

// Projector laws within tol.mat.
bool satisfies_projector_laws(const Subspace3& e, const Tolerances& tol = {});

}  // namespace sasaki
