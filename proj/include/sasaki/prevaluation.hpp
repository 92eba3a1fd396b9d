#pragma once

// Two-valued labelings of a finite OML.
//
// A pre-valuation v : L -> {0, 1} satisfies
//   v(top) = 1,
//   x orthogonal to y  =>  v(x \/ y) >= v(x) + v(y),
//   x compatible with y  =>  v(x /\ y) = v(x) * v(y).
// The set {x : v(x) = 1} of a pre-valuation is a proper Sasaki filter and
// every proper Sasaki filter arises this way.
//
// A valuation (two-valued measure) additionally has v(x \/ y) = v(x) + v(y)
// for orthogonal x, y.
//
// Note: one could restate the definition with monotonicity in place of the
// orthogonal superadditivity. Read literally, that restatement accepts the
// constant-1 map, whose 1-set is the whole lattice and so not proper. The
// superadditive form is the one implemented here; monotone_presentation()
// checks the restated form with v(bottom) = 0 added, which is equivalent.

#include <optional>
#include <vector>

#include "sasaki/filters.hpp"

namespace sasaki {

class PreValuation {
 public:
  // Arbitrary 0/1 labeling; `ones` holds the elements mapped to 1. No law is
  // checked here; see is_prevaluation().
  PreValuation(FiniteOml lattice, Mask ones);

  const FiniteOml& lattice() const noexcept { return lattice_; }
  Mask ones() const noexcept { return ones_; }
  int value(Element x) const;

  friend bool operator==(const PreValuation& a, const PreValuation& b) {
    return a.lattice_.id() == b.lattice_.id() && a.ones_ == b.ones_;
  }

 private:
  FiniteOml lattice_;
  Mask ones_;
};

bool is_prevaluation(const PreValuation& v);
bool is_valuation(const PreValuation& v);
// v(top) = 1, v(bottom) = 0, monotone, multiplicative on compatible pairs.
bool monotone_presentation(const PreValuation& v);

// Throws Error(NotProper) for an improper filter.
PreValuation filter_to_prevaluation(const SasakiFilter& f);
// Throws Error(NotAPreValuation) when v fails the definition.
SasakiFilter prevaluation_to_filter(const PreValuation& v);

std::vector<PreValuation> enumerate_prevaluations(const FiniteOml& lattice,
                                                  std::size_t bound = kDefaultEnumerationBound);
std::vector<PreValuation> find_valuations(const FiniteOml& lattice,
                                          std::size_t bound = kDefaultEnumerationBound);

}  // namespace sasaki
