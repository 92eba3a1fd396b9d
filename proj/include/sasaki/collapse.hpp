#pragma once

// Collapse certificates.
//
// Start from two distinct rays A and B of R^3 (premises: every Sasaki filter
// containing them contains A^ and B^). One round takes the current pair at
// angle >= theta_k, picks two planes E_alpha, E_beta through the first ray
// (so they lie above an established element) and projects the second ray
// onto each. The two projections form a new pair at exactly theta_{k-1}.
// After n_min rounds the pair is orthogonal and one more Sasaki step gives
// the zero subspace: bottom belongs to the closure, so no proper Sasaki
// filter contains both A and B.
//
// A certificate records every plane and result ray; verify_certificate
// replays it with fresh arithmetic and does not depend on the generator.
//
// Items of a certificate are indexed in order of appearance: the initial
// atoms first, then the two results of each round.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sasaki/subspace.hpp"

namespace sasaki {

struct CollapseStep {
  std::size_t parent = 0;       // item projected
  std::array<Vec3, 2> plane{};  // spanning vectors of the target plane
  std::size_t witness = 0;      // item lying inside the plane
  double phi = 0.0;             // plane parameter used by the generator
  Vec3 result = Vec3::Zero();   // unit vector spanning the projected ray

  friend bool operator==(const CollapseStep&, const CollapseStep&) = default;
};

struct CollapseRound {
  CollapseStep first;
  CollapseStep second;

  friend bool operator==(const CollapseRound&, const CollapseRound&) = default;
};

// Refutation premise: a subspace E in the filter together with item
// `source`. `result` is the item recording source & E, or empty when that
// projection is already the zero subspace.
struct Premise {
  std::vector<Vec3> subspace;
  std::size_t source = 0;
  std::optional<std::size_t> result;

  friend bool operator==(const Premise&, const Premise&) = default;
};

struct CollapseCertificate {
  double tolerance = 1e-9;
  std::array<Vec3, 3> basis{};
  std::vector<Vec3> initial_atoms;
  std::optional<Premise> premise;
  std::vector<CollapseRound> rounds;
  // Orthogonal pair whose Sasaki projection is bottom. Empty only when the
  // premise projection is bottom by itself.
  std::optional<std::pair<std::size_t, std::size_t>> final_pair;

  friend bool operator==(const CollapseCertificate&, const CollapseCertificate&) = default;
};

struct CollapseOptions {
  Tolerances tol{};
  double angle_tolerance = 1e-8;  // precondition slack and schedule check
  double zero_angle = 1e-12;      // below this two rays count as equal
  std::int64_t max_rounds = 1'000'000;
};

struct InductionResult {
  Subspace3 first;
  Subspace3 second;
  CollapseStep first_step;
  CollapseStep second_step;
};

// One round: from atoms a, b at angle >= theta_n produce a pair at theta_{n-1}.
// a_index / b_index are the item indices recorded in the steps.
// Errors: NegativeIndex (n < 1), DegeneratePair, AngleTooSmall, NotAnAtom.
InductionResult induction_step(const Subspace3& a, const Subspace3& b, std::int64_t n,
                               std::size_t a_index = 0, std::size_t b_index = 1,
                               const CollapseOptions& options = {});

// Full derivation of bottom from two distinct atoms.
// Errors: DegeneratePair, NotAnAtom, TooManyRounds.
CollapseCertificate collapse(const Subspace3& a, const Subspace3& b,
                             const CollapseOptions& options = {});

// Shows that a filter holding atom a and subspace e (with a not below e) is
// improper: a & e is an atom (or bottom) of the filter, then collapse.
// Errors: AlreadyAbove, NotAnAtom, TooManyRounds.
CollapseCertificate refute_second_element(const Subspace3& a, const Subspace3& e,
                                          const CollapseOptions& options = {});

enum class CertificateCheck {
  None,
  Structure,   // shape of the document
  Initial,     // (i) initial atoms are unit rays, basis orthonormal
  Membership,  // (ii) every plane lies above an established item
  Projection,  // (iii) every result is the recomputed Sasaki projection
  Final,       // (iv) final pair orthogonal, projection is bottom
};

const char* to_string(CertificateCheck check);

struct VerificationReport {
  bool accepted = false;
  CertificateCheck failed = CertificateCheck::None;
  std::string reason;
  std::size_t rounds = 0;
  // Number of closure steps after which bottom is derived.
  std::size_t bottom_depth = 0;
  double final_abs_dot = 0.0;
};

// Replays the certificate. `tol` supplies unit/orthogonality thresholds; the
// projection comparisons use the certificate's own tolerance.
VerificationReport verify_certificate(const CollapseCertificate& cert, const Tolerances& tol = {});

// Angle between items i and j (after replaying results as rays).
double certificate_item_angle(const CollapseCertificate& cert, std::size_t i, std::size_t j);
std::vector<Vec3> certificate_items(const CollapseCertificate& cert);

}  // namespace sasaki
