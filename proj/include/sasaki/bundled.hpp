#pragma once

// Small reference lattices used by the test suites and shipped as files
// under data/lattices/.

#include <string>
#include <vector>

#include "sasaki/oml.hpp"

namespace sasaki::bundled {

// Two-element chain 0 < 1.
RawOml chain2();
// Boolean algebra of all subsets of the first `atoms` letters a, b, c, ...
// Elements are named by their letters; the empty set is "0".
RawOml boolean(int atoms);
// MO_n: bottom "0", top "1", and n complementary pairs x, x' of pairwise
// incomparable atoms (x in a, b, c, ...).
RawOml mo(int pairs);
// The hexagon ortholattice 0 < a < b < 1, 0 < b' < a' < 1. Not orthomodular.
RawOml benzene();

struct Named {
  std::string name;
  RawOml raw;
};

// chain2, boolean4, boolean8, boolean16, mo2, mo3, mo4 (all orthomodular).
std::vector<Named> oml_suite();

}  // namespace sasaki::bundled
