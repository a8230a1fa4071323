#pragma once

#include <utility>
#include <vector>

#include "semreg/lattice.hpp"

namespace semreg {

/// One equivalence class of the Apery set: its residue, its elements,
/// the componentwise-minimum shift, and the exponent vectors
/// (x - shift)/alpha that generate the associated monomial ideal.
struct AperyClass {
  LatticePoint residue;
  std::vector<LatticePoint> elements;   // sorted lexicographically
  LatticePoint shift;
  Int shift_degree = 0;
  std::vector<LatticePoint> exponents;  // parallel to elements

  int size() const { return static_cast<int>(elements.size()); }
};

/// x in B with x - e_i not in B for every axis generator.
bool in_apery(const SemigroupPresentation& P, const LatticePoint& x);

/// The full Apery set of B with respect to A = <e_1..e_d>, enumerated
/// breadth-first by degree level. Level n candidates are sums of a level
/// n-1 member and a non-axis generator; levels above f - c need not be
/// searched. Verifies post hoc that all f residue classes are
/// represented and throws ConsistencyError otherwise.
std::vector<LatticePoint> apery_set(const SemigroupPresentation& P);

/// Partition of the Apery set into its f residue classes. Order: the
/// class of 0 first, then the singleton classes of the extras in input
/// order, then the remaining classes by residue, lexicographically.
std::vector<AperyClass> partition_classes(const SemigroupPresentation& P,
                                          const std::vector<LatticePoint>& apery);

/// Componentwise minimum shift and the integral exponent vectors
/// (x - shift)/alpha of a same-residue element list.
std::pair<LatticePoint, std::vector<LatticePoint>> shift_and_exponents(
    const std::vector<LatticePoint>& elements, const Int& alpha);

}  // namespace semreg
