#include "sasaki/collapse.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "sasaki/error.hpp"
#include "sasaki/lemma.hpp"
#include "sasaki/schedule.hpp"

namespace sasaki {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

struct Frame {
  Vec3 e1, e2, e3;
  double angle;  // between e1 and the (sign-fixed) second ray
  Vec3 v;        // second ray, oriented so that e1 . v >= 0
};

// e1 = u, e2 along the part of v orthogonal to u, e3 = u x v normalized.
Frame frame_for(const Vec3& u_in, const Vec3& v_in, double zero_angle) {
  Frame f;
  f.e1 = u_in.normalized();
  f.v = v_in.normalized();
  if (f.e1.dot(f.v) < 0) f.v = -f.v;
  const Vec3 cross = f.e1.cross(f.v);
  f.angle = std::atan2(cross.norm(), f.e1.dot(f.v));
  if (f.angle < zero_angle) throw Error(ErrorKind::DegeneratePair, "atoms coincide");
  f.e3 = cross.normalized();
  f.e2 = f.e3.cross(f.e1);
  return f;
}

// Intermediate rounds aim slightly below c(k): the schedule is tight, so a pair
// that lands even an ulp above c(k) pins the next round to the extremal point,
// and that error grows by f'(c(k)) >= 1 every round. The last round aims at 0.
constexpr double kScheduleMargin = 1e-12;

double target_cosine(std::int64_t k) {
  if (k == 0) return 0.0;
  const Rational c = schedule_c(k);
  return static_cast<double>(c.numerator()) / static_cast<double>(c.denominator()) - kScheduleMargin;
}

// Projection of v onto span{e1, w} (e1, w orthonormal), normalized.
Vec3 project_onto_plane(const Vec3& v, const Vec3& e1, const Vec3& w) {
  return (v.dot(e1) * e1 + v.dot(w) * w).normalized();
}

CollapseStep make_step(const Frame& f, double phi, std::size_t parent, std::size_t witness) {
  const Vec3 w = std::cos(phi) * f.e2 + std::sin(phi) * f.e3;
  CollapseStep step;
  step.parent = parent;
  step.witness = witness;
  step.plane = {f.e1, w};
  step.phi = phi;
  step.result = project_onto_plane(f.v, f.e1, w);
  return step;
}

std::array<Vec3, 3> completed_basis(const Vec3& u) {
  const Vec3 e1 = u.normalized();
  const Vec3 e2 = e1.unitOrthogonal();
  return {e1, e2, e1.cross(e2)};
}

}  // namespace

const char* to_string(CertificateCheck check) {
  switch (check) {
    case CertificateCheck::None: return "none";
    case CertificateCheck::Structure: return "structure";
    case CertificateCheck::Initial: return "(i) initial atoms";
    case CertificateCheck::Membership: return "(ii) plane membership";
    case CertificateCheck::Projection: return "(iii) Sasaki projection";
    case CertificateCheck::Final: return "(iv) final orthogonality";
  }
  return "?";
}

InductionResult induction_step(const Subspace3& a, const Subspace3& b, std::int64_t n,
                               std::size_t a_index, std::size_t b_index,
                               const CollapseOptions& options) {
  if (n < 1) throw Error(ErrorKind::NegativeIndex, "induction step needs n >= 1");
  const Frame f = frame_for(a.direction(), b.direction(), options.zero_angle);
  if (f.angle < schedule_theta(n) - options.angle_tolerance) {
    throw Error(ErrorKind::AngleTooSmall, "atoms are closer than theta_n");
  }
  const double theta = std::min(f.angle, std::nextafter(kHalfPi, 0.0));
  const auto [alpha, beta] = solve_pair(theta, target_cosine(n - 1));

  InductionResult r{Subspace3(), Subspace3(), make_step(f, alpha, b_index, a_index),
                    make_step(f, beta, b_index, a_index)};
  r.first = span({r.first_step.result}, options.tol);
  r.second = span({r.second_step.result}, options.tol);
  return r;
}

CollapseCertificate collapse(const Subspace3& a, const Subspace3& b, const CollapseOptions& options) {
  const Frame f0 = frame_for(a.direction(), b.direction(), options.zero_angle);

  CollapseCertificate cert;
  cert.tolerance = options.tol.mat;
  cert.basis = {f0.e1, f0.e2, f0.e3};
  cert.initial_atoms = {f0.e1, f0.v};

  const std::int64_t rounds = schedule_n_min(std::min(f0.angle, kHalfPi));
  if (rounds > options.max_rounds) {
    throw Error(ErrorKind::TooManyRounds, "collapse would need " + std::to_string(rounds) +
                                              " rounds; limit is " + std::to_string(options.max_rounds));
  }
  cert.rounds.reserve(static_cast<std::size_t>(rounds));

  std::size_t cur_a = 0, cur_b = 1;
  Vec3 u = f0.e1, v = f0.v;
  for (std::int64_t k = rounds; k >= 1; --k) {
    // each round re-targets theta_{k-1} afresh, so errors do not accumulate
    const Frame f = frame_for(u, v, options.zero_angle);
    const double theta = std::min(f.angle, std::nextafter(kHalfPi, 0.0));
    const auto [alpha, beta] = solve_pair(theta, target_cosine(k - 1));
    CollapseRound round{make_step(f, alpha, cur_b, cur_a), make_step(f, beta, cur_b, cur_a)};
    const std::size_t next = cert.initial_atoms.size() + 2 * cert.rounds.size();
    u = round.first.result;
    v = round.second.result;
    cert.rounds.push_back(std::move(round));
    cur_a = next;
    cur_b = next + 1;
  }
  cert.final_pair = std::pair{cur_a, cur_b};
  return cert;
}

CollapseCertificate refute_second_element(const Subspace3& a, const Subspace3& e,
                                          const CollapseOptions& options) {
  const Vec3 u = a.direction();
  if (leq_sub(a, e, options.tol)) throw Error(ErrorKind::AlreadyAbove, "atom already lies in the subspace");

  std::vector<Vec3> e_vectors;
  const auto basis = e.basis();
  for (Eigen::Index i = 0; i < basis.cols(); ++i) e_vectors.push_back(basis.col(i));

  const Vec3 image = project(e, u);
  if (image.norm() <= options.tol.orth) {
    CollapseCertificate cert;
    cert.tolerance = options.tol.mat;
    cert.basis = completed_basis(u);
    cert.initial_atoms = {u};
    cert.premise = Premise{e_vectors, 0, std::nullopt};
    return cert;
  }
  const Subspace3 b = span({image}, options.tol);
  CollapseCertificate cert = collapse(a, b, options);
  cert.premise = Premise{std::move(e_vectors), 0, std::size_t{1}};
  return cert;
}

std::vector<Vec3> certificate_items(const CollapseCertificate& cert) {
  std::vector<Vec3> items = cert.initial_atoms;
  for (const auto& r : cert.rounds) {
    items.push_back(r.first.result);
    items.push_back(r.second.result);
  }
  return items;
}

double certificate_item_angle(const CollapseCertificate& cert, std::size_t i, std::size_t j) {
  const auto items = certificate_items(cert);
  if (i >= items.size() || j >= items.size()) throw Error(ErrorKind::Format, "item index out of range");
  const Vec3 u = items[i].normalized(), v = items[j].normalized();
  return std::atan2(u.cross(v).norm(), std::abs(u.dot(v)));
}

VerificationReport verify_certificate(const CollapseCertificate& cert, const Tolerances& tol) {
  VerificationReport report;
  report.rounds = cert.rounds.size();
  auto reject = [&](CertificateCheck check, const std::string& why) {
    report.accepted = false;
    report.failed = check;
    report.reason = why;
    return report;
  };
  auto finite = [](const Vec3& v) { return v.allFinite(); };

  if (!(cert.tolerance > 0.0 && std::isfinite(cert.tolerance))) {
    return reject(CertificateCheck::Structure, "tolerance must be a positive number");
  }
  const bool bottom_from_premise = cert.premise && !cert.premise->result;
  const std::size_t expected_initial = bottom_from_premise ? 1 : 2;
  if (cert.initial_atoms.size() != expected_initial) {
    return reject(CertificateCheck::Structure, "expected " + std::to_string(expected_initial) + " initial atoms");
  }
  if (bottom_from_premise && (!cert.rounds.empty() || cert.final_pair)) {
    return reject(CertificateCheck::Structure, "bottom premise certificate must not carry rounds");
  }
  if (!bottom_from_premise && !cert.final_pair) {
    return reject(CertificateCheck::Structure, "missing final pair");
  }

  // (i) initial atoms are unit rays and the basis is orthonormal
  for (std::size_t i = 0; i < cert.initial_atoms.size(); ++i) {
    const Vec3& v = cert.initial_atoms[i];
    if (!finite(v) || std::abs(v.norm() - 1.0) > tol.unit) {
      return reject(CertificateCheck::Initial, "initial atom " + std::to_string(i) + " is not a unit vector");
    }
  }
  Mat3 basis;
  basis << cert.basis[0], cert.basis[1], cert.basis[2];
  if (!basis.allFinite() || (basis.transpose() * basis - Mat3::Identity()).cwiseAbs().maxCoeff() > tol.unit) {
    return reject(CertificateCheck::Initial, "basis is not orthonormal");
  }
  if (std::abs(std::abs(cert.basis[0].dot(cert.initial_atoms[0])) - 1.0) > tol.unit) {
    return reject(CertificateCheck::Initial, "first basis vector does not span the first atom");
  }

  Tolerances cmp = tol;
  cmp.mat = cert.tolerance;

  // Established rays with the closure depth at which each appears.
  std::vector<Subspace3> atoms;
  std::vector<std::size_t> depth;
  for (const Vec3& v : cert.initial_atoms) {
    atoms.push_back(span({v}, cmp));
    depth.push_back(0);
  }

  if (cert.premise) {
    const Premise& p = cert.premise.value();
    if (p.source >= atoms.size()) return reject(CertificateCheck::Structure, "premise source out of range");
    for (const Vec3& v : p.subspace) {
      if (!finite(v)) return reject(CertificateCheck::Structure, "premise subspace is not finite");
    }
    const Subspace3 e = p.subspace.empty() ? Subspace3::zero() : span(p.subspace, cmp);
    if (leq_sub(atoms[p.source], e, cmp)) {
      return reject(CertificateCheck::Membership, "premise atom already lies in the premise subspace");
    }
    if (!p.result) {
      const double residual = project(e, cert.initial_atoms[p.source]).norm();
      report.final_abs_dot = residual;
      if (residual > tol.orth) {
        return reject(CertificateCheck::Final, "premise projection is not the zero subspace");
      }
      report.accepted = true;
      report.bottom_depth = 1;
      return report;
    }
    if (*p.result != 1 || p.source != 0) {
      return reject(CertificateCheck::Structure, "premise must derive item 1 from item 0");
    }
    const Subspace3 recomputed = sasaki_sub(atoms[0], e, cmp);
    if (!same_sub(recomputed, atoms[1], cmp)) {
      return reject(CertificateCheck::Projection, "item 1 is not the projection of item 0 onto the premise subspace");
    }
    depth[1] = 1;
  }

  auto replay = [&](const CollapseStep& s, std::size_t round, const char* which) -> std::optional<std::string> {
    const std::string where = "round " + std::to_string(round) + " " + which;
    const std::size_t known = atoms.size();
    if (s.parent >= known || s.witness >= known) {
      report.failed = CertificateCheck::Membership;
      return where + ": refers to an item not yet established";
    }
    if (!finite(s.plane[0]) || !finite(s.plane[1]) || !finite(s.result) || !std::isfinite(s.phi)) {
      report.failed = CertificateCheck::Structure;
      return where + ": non-finite entry";
    }
    Subspace3 plane;
    try {
      plane = span({s.plane[0], s.plane[1]}, cmp);
    } catch (const Error&) {
      report.failed = CertificateCheck::Membership;
      return where + ": plane vectors are zero";
    }
    if (plane.dim() != 2) {
      report.failed = CertificateCheck::Membership;
      return where + ": plane is not two-dimensional";
    }
    if (!leq_sub(atoms[s.witness], plane, cmp)) {
      report.failed = CertificateCheck::Membership;
      return where + ": plane does not contain its witness";
    }
    const Subspace3 recomputed = sasaki_sub(atoms[s.parent], plane, cmp);
    if (s.result.norm() == 0.0 || recomputed.dim() != 1 || !same_sub(recomputed, span({s.result}, cmp), cmp)) {
      report.failed = CertificateCheck::Projection;
      return where + ": result is not the Sasaki projection of its parent";
    }
    atoms.push_back(recomputed);
    depth.push_back(std::max(depth[s.parent], depth[s.witness]) + 1);
    return std::nullopt;
  };

  for (std::size_t r = 0; r < cert.rounds.size(); ++r) {
    for (const auto& [step, name] : {std::pair{&cert.rounds[r].first, "first"},
                                     std::pair{&cert.rounds[r].second, "second"}}) {
      if (auto why = replay(*step, r + 1, name)) {
        const auto check = report.failed;
        return reject(check, *why);
      }
    }
  }

  // (iv) the final pair is orthogonal and projects to bottom
  const auto [i, j] = *cert.final_pair;
  if (i >= atoms.size() || j >= atoms.size() || i == j) {
    return reject(CertificateCheck::Final, "final pair does not name two established items");
  }
  const Vec3 u = atoms[i].direction(), v = atoms[j].direction();
  report.final_abs_dot = std::abs(u.dot(v));
  if (report.final_abs_dot > tol.orth) {
    std::ostringstream os;
    os << "final pair is not orthogonal: |u.v| = " << report.final_abs_dot;
    return reject(CertificateCheck::Final, os.str());
  }
  Tolerances at_orth = cmp;
  at_orth.rank = tol.orth;
  if (sasaki_sub(atoms[i], atoms[j], at_orth).dim() != 0) {
    return reject(CertificateCheck::Final, "Sasaki projection of the final pair is not bottom");
  }
  report.accepted = true;
  report.bottom_depth = std::max(depth[i], depth[j]) + 1;
  return report;
}

}  // namespace sasaki
