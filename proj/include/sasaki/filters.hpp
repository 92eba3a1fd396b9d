#pragma once

// Upward-closed subsets of a finite OML and Sasaki filters.
//
// A Sasaki filter is an upset F with x & y in F for all x, y in F. The
// closure operator iterates
//
//     step(S) = union { (x & y)^ : x, y in S }
//
// to its least fixpoint above S. step(S) contains S because x & x = x.

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "sasaki/oml.hpp"

namespace sasaki {

class UpSet {
 public:
  // Empty upset of `lattice`.
  explicit UpSet(FiniteOml lattice) : lattice_(std::move(lattice)) {}

  // Throws Error(NotUpwardClosed) when `members` is not upward-closed.
  static UpSet from_mask(const FiniteOml& lattice, Mask members);
  // Union of the principal upsets of `generators`.
  static UpSet generated_by(const FiniteOml& lattice, std::span<const Element> generators);

  const FiniteOml& lattice() const noexcept { return lattice_; }
  Mask mask() const noexcept { return mask_; }
  bool contains(Element x) const;
  bool empty() const noexcept { return mask_ == 0; }
  std::size_t size() const noexcept;
  std::vector<Element> members() const;
  // Member names sorted lexicographically.
  std::vector<std::string> member_names() const;

  bool subset_of(const UpSet& other) const;
  UpSet intersect(const UpSet& other) const;
  UpSet unite(const UpSet& other) const;

  friend bool operator==(const UpSet& a, const UpSet& b) {
    return a.lattice_.id() == b.lattice_.id() && a.mask_ == b.mask_;
  }

 private:
  UpSet(FiniteOml lattice, Mask mask) : lattice_(std::move(lattice)), mask_(mask) {}
  void check_same_lattice(const UpSet& other) const;

  FiniteOml lattice_;
  Mask mask_ = 0;
};

// An upset that is closed under the Sasaki projection. Constructed only by
// checking (as_sasaki_filter) or by closure, so the invariant always holds.
class SasakiFilter {
 public:
  const UpSet& upset() const noexcept { return set_; }
  const FiniteOml& lattice() const noexcept { return set_.lattice(); }
  bool contains(Element x) const { return set_.contains(x); }
  bool is_proper() const noexcept;

  friend bool operator==(const SasakiFilter&, const SasakiFilter&) = default;

 private:
  friend std::optional<SasakiFilter> as_sasaki_filter(const UpSet& s);
  friend SasakiFilter sasaki_closure(const UpSet& s);
  explicit SasakiFilter(UpSet s) : set_(std::move(s)) {}

  UpSet set_;
};

// Default refusal threshold for exhaustive enumeration.
inline constexpr std::size_t kDefaultEnumerationBound = 24;

UpSet up(const FiniteOml& lattice, Element x);

bool is_sasaki_filter(const UpSet& s);
// Non-empty and not the whole lattice.
bool is_proper(const UpSet& s);
std::optional<SasakiFilter> as_sasaki_filter(const UpSet& s);

// Upsets closed under meets of compatible pairs; equivalent to
// is_sasaki_filter on an orthomodular lattice.
bool is_stable_by_compatible_meet(const UpSet& s);

UpSet sasaki_step(const UpSet& s);
SasakiFilter sasaki_closure(const UpSet& s);
// Number of sasaki_step applications until the fixpoint is reached.
std::size_t sasaki_closure_depth(const UpSet& s);

// Every upset exactly once, in a fixed order. Throws Error(TooLarge) when the
// lattice has more than `bound` elements.
void for_each_upset(const FiniteOml& lattice, const std::function<void(const UpSet&)>& visit,
                    std::size_t bound = kDefaultEnumerationBound);
std::vector<UpSet> enumerate_upsets(const FiniteOml& lattice,
                                    std::size_t bound = kDefaultEnumerationBound);
std::vector<SasakiFilter> enumerate_sasaki_filters(const FiniteOml& lattice,
                                                   std::size_t bound = kDefaultEnumerationBound);

}  // namespace sasaki
