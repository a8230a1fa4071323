#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "semreg/exact_linalg.hpp"
#include "semreg/lattice.hpp"

namespace semreg {

struct IdealCaps {
  std::size_t max_generators = 20;
  std::size_t max_lattice = std::size_t(1) << 20;
};

/// A monomial ideal in d variables, kept as its minimal exponent-vector
/// generators (a nonempty antichain under componentwise divisibility),
/// sorted lexicographically.
class MonomialIdeal {
 public:
  static MonomialIdeal minimalize(int dim, std::vector<LatticePoint> generators);

  int dim() const { return dim_; }
  const std::vector<LatticePoint>& generators() const { return generators_; }
  /// x^b lies in the ideal, i.e. b dominates some generator.
  bool contains(const LatticePoint& b) const;

 private:
  MonomialIdeal(int dim, std::vector<LatticePoint> generators)
      : dim_(dim), generators_(std::move(generators)) {}
  int dim_;
  std::vector<LatticePoint> generators_;
};

/// Nonzero graded Betti numbers of an ideal, keyed by homological index
/// and multidegree. Regularity is max(|b| - i) over the entries.
struct BettiTable {
  std::map<std::pair<int, std::vector<Int>>, Int> entries;
  Int regularity() const;
};

/// Regularity of a two-variable ideal via the ordered-generator formula:
/// deg m_1 for a principal ideal, otherwise max_i (b_i + c_{i+1}) - 1 for
/// generators y1^{b_i} y2^{c_i} with b_1 > ... > b_r.
Int regularity_bivariate(const MonomialIdeal& I);

/// Joins (componentwise maxima) of all nonempty generator subsets.
std::vector<LatticePoint> lcm_lattice(const MonomialIdeal& I, const IdealCaps& caps = {});

/// Betti numbers via upper Koszul simplicial complexes: beta_{i,b} is the
/// rank of the reduced homology H~_{i-1} of K^b = {S : x^{b-1_S} in I},
/// for b in the lcm lattice.
BettiTable betti_numbers(const MonomialIdeal& I, const FieldSpec& field = FieldSpec::rationals(),
                         const IdealCaps& caps = {});

Int regularity_general(const MonomialIdeal& I, const FieldSpec& field = FieldSpec::rationals(),
                       const IdealCaps& caps = {});

}  // namespace semreg
