#include "sasaki/subspace.hpp"

#include <algorithm>
#include <cmath>

#include "sasaki/error.hpp"

namespace sasaki {

using Mat3X = Eigen::Matrix<double, 3, Eigen::Dynamic>;

Subspace3 Subspace3::from_projector(const Mat3& projector, int dim, const Tolerances& tol) {
  if (dim < 0 || dim > 3) throw Error(ErrorKind::DegenerateInput, "subspace dimension must be 0..3");
  Subspace3 s(projector, dim);
  if (!projector.allFinite() || !satisfies_projector_laws(s, tol)) {
    throw Error(ErrorKind::DegenerateInput, "matrix is not an orthogonal projector of the given rank");
  }
  return s;
}

Mat3X Subspace3::basis() const {
  if (dim_ == 0) return Mat3X(3, 0);
  Eigen::SelfAdjointEigenSolver<Mat3> eig(projector_);
  // eigenvalues ascending; the top `dim_` belong to the range
  return eig.eigenvectors().rightCols(dim_);
}

Vec3 Subspace3::direction() const {
  if (dim_ != 1) throw Error(ErrorKind::NotAnAtom, "subspace is not one-dimensional");
  Vec3 u = basis().col(0).normalized();
  Eigen::Index k = 0;
  u.cwiseAbs().maxCoeff(&k);
  return u[k] < 0 ? Vec3(-u) : u;
}

Subspace3 range_of(const Mat3X& m, double threshold) {
  if (m.cols() == 0) return Subspace3();
  Eigen::JacobiSVD<Mat3X> svd(m, Eigen::ComputeFullU);
  const auto& sigma = svd.singularValues();
  int rank = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma[i] > threshold) ++rank;
  }
  if (rank == 0) return Subspace3();
  const Mat3X u = svd.matrixU().leftCols(rank);
  Mat3 p = u * u.transpose();
  p = 0.5 * (p + p.transpose()).eval();
  return Subspace3(p, rank);
}

Subspace3 span(std::span<const Vec3> vectors, const Tolerances& tol) {
  if (vectors.empty()) return Subspace3();
  Mat3X m(3, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (!vectors[i].allFinite()) throw Error(ErrorKind::DegenerateInput, "non-finite vector");
    m.col(static_cast<Eigen::Index>(i)) = vectors[i];
  }
  const double largest = m.jacobiSvd().singularValues()[0];
  if (!(largest > 0.0)) throw Error(ErrorKind::DegenerateInput, "spanning set is all zero");
  return range_of(m, tol.rank * largest);
}

Subspace3 span(std::initializer_list<Vec3> vectors, const Tolerances& tol) {
  return span(std::span<const Vec3>(vectors.begin(), vectors.size()), tol);
}

Vec3 project(const Subspace3& e, const Vec3& v) { return e.projector() * v; }

Subspace3 ortho_sub(const Subspace3& e) {
  return Subspace3(Mat3::Identity() - e.projector(), 3 - e.dim());
}

Subspace3 join_sub(const Subspace3& e, const Subspace3& f, const Tolerances& tol) {
  Mat3X m(3, 6);
  m << e.projector(), f.projector();
  return range_of(m, tol.rank);
}

Subspace3 meet_sub(const Subspace3& e, const Subspace3& f, const Tolerances& tol) {
  return ortho_sub(join_sub(ortho_sub(e), ortho_sub(f), tol));
}

bool leq_sub(const Subspace3& e, const Subspace3& f, const Tolerances& tol) {
  const Mat3 diff = f.projector() * e.projector() - e.projector();
  return diff.cwiseAbs().maxCoeff() <= tol.mat;
}

bool same_sub(const Subspace3& e, const Subspace3& f, const Tolerances& tol) {
  return e.dim() == f.dim() && (e.projector() - f.projector()).cwiseAbs().maxCoeff() <= tol.mat;
}

Subspace3 sasaki_sub(const Subspace3& a, const Subspace3& b, const Tolerances& tol) {
  // P_B P_A has the same column space as { P_B u : u in A }.
  return range_of(b.projector() * a.projector(), tol.rank);
}

double angle_atoms(const Subspace3& a, const Subspace3& b) {
  const Vec3 u = a.direction();
  const Vec3 v = b.direction();
  return std::atan2(u.cross(v).norm(), std::abs(u.dot(v)));
}

bool satisfies_projector_laws(const Subspace3& e, const Tolerances& tol) {
  const Mat3& p = e.projector();
  const double asym = (p - p.transpose()).cwiseAbs().maxCoeff();
  const double idem = (p * p - p).cwiseAbs().maxCoeff();
  const double trace = std::abs(p.trace() - e.dim());
  return asym <= tol.mat && idem <= tol.mat && trace <= tol.mat;
}

}  // namespace sasaki
