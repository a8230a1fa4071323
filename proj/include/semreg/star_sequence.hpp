#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "semreg/apery.hpp"
#include "semreg/lattice.hpp"

namespace semreg {

/// A sequence of generators whose running subtraction from the base
/// point stays inside B. Full-length sequences (length = deg base) end
/// at 0 and are the members of Lambda_base.
struct StarSequence {
  LatticePoint base;
  std::vector<LatticePoint> steps;

  int length() const { return static_cast<int>(steps.size()); }
  /// base minus the first i steps; index 0 gives the base itself.
  LatticePoint partial_point(int i) const;
};

/// Every prefix remainder lies in B (and every step is a generator of P).
bool is_star_sequence(const SemigroupPresentation& P, const StarSequence& s);

StarSequence reversed(StarSequence s);

struct SequenceCaps {
  std::uint64_t max_sequences = 1'000'000;   // per Lambda_x enumeration
  std::uint64_t max_pairs = 10'000'000;      // per (lambda, nu) sweep
};

/// All full-length sequences of x (the set Lambda_x), in depth-first
/// order with generators tried in fixed input order. Lambda_0 is empty.
/// Throws CapExceededError carrying the partial count when more than
/// `cap` sequences exist.
std::vector<StarSequence> enumerate_full(const SemigroupPresentation& P, const LatticePoint& x,
                                         std::uint64_t cap = SequenceCaps{}.max_sequences);

/// The first `limit` members of Lambda_x in the same order; never throws
/// on overflow. Used for sampled (advisory) computations.
std::vector<StarSequence> sample_full(const SemigroupPresentation& P, const LatticePoint& x,
                                      std::uint64_t limit);

/// All index pairs (i, j) with partial points of lambda and nu
/// equivalent, sorted lexicographically. Requires full-length sequences.
std::vector<std::pair<int, int>> delta_set(const SemigroupPresentation& P,
                                           const StarSequence& lambda, const StarSequence& nu);

/// #Delta - 2.
inline Int delta_value(const std::vector<std::pair<int, int>>& delta) {
  return Int(delta.size()) - 2;
}

/// A witnessed violation of total order in Delta(lambda, nu):
/// x(lambda,i) ~ y(nu,k) and x(lambda,j) ~ y(nu,l) with i < j, l < k.
struct CrossCertificate {
  StarSequence lambda;
  StarSequence nu;
  int i = 0, j = 0, l = 0, k = 0;
  std::pair<int, int> height() const { return {j - i, k - l}; }
};

std::vector<CrossCertificate> find_crosses(const SemigroupPresentation& P,
                                           const StarSequence& lambda, const StarSequence& nu);
bool is_crossless(const SemigroupPresentation& P, const StarSequence& lambda,
                  const StarSequence& nu);
/// The cross maximizing j - i, ties broken by smallest i then smallest l.
std::optional<CrossCertificate> maximal_cross(const SemigroupPresentation& P,
                                              const StarSequence& lambda, const StarSequence& nu);

/// Whether some pair in Lambda_x x Lambda_y is crossless. Requires
/// x ~ y; throws CapExceededError when the search is capped before a
/// crossless pair is found.
bool are_crossless(const SemigroupPresentation& P, const LatticePoint& x, const LatticePoint& y,
                   const SequenceCaps& caps = {});

struct DeltaResult {
  std::optional<Int> exact;        // set iff the minimum is certified
  std::optional<Int> observed_min; // advisory upper bound otherwise
  bool capped = false;
  std::uint64_t pairs_considered = 0;
  std::optional<StarSequence> best_lambda;
  std::optional<StarSequence> best_nu;
};

/// Minimum of delta(lambda, nu) over Lambda_x x Lambda_y. The exact value
/// is reported only when the full enumeration completed within caps (or
/// the theoretical floor was reached); otherwise the minimum observed so
/// far is returned as an advisory bound.
DeltaResult delta_min(const SemigroupPresentation& P, const LatticePoint& x,
                      const LatticePoint& y, const SequenceCaps& caps = {});

struct GlueResult {
  StarSequence lambda;
  StarSequence nu;
  CrossCertificate cross;
};

/// Indices of a cross on a fixed sequence pair.
struct CrossIndices {
  int i = 0, j = 0, l = 0, k = 0;
};

/// Rearranges two crosses with j <= i' and k <= l' into a single cross of
/// height (j-i+j'-i', k-l+k'-l') on permuted sequences. The returned
/// certificate is re-validated before being handed back.
GlueResult glue_crosses(const SemigroupPresentation& P, const StarSequence& lambda,
                        const StarSequence& nu, const CrossIndices& first,
                        const CrossIndices& second);

/// For a crossed pair of sequences of two equivalent Apery-set elements,
/// produces a third element of their class distinct from both: reduce
/// x(lambda,j) + y(nu*, deg y - l) by a maximal sum of axis generators,
/// ties broken by the lexicographically largest reduction vector.
LatticePoint third_element(const SemigroupPresentation& P, const StarSequence& lambda,
                           const StarSequence& nu, const CrossIndices& cross);

/// No class element lies strictly between x and y in both coordinates.
/// Defined for d = 2 only.
bool is_adjacent(const AperyClass& cls, const LatticePoint& x, const LatticePoint& y);

enum class ConjectureScope { AllPairs, AdjacentOnly, Strong };
enum class PairVerdict { Holds, Violated, Indeterminate };

struct ConjecturePairResult {
  LatticePoint x, y;
  Int deg_h = 0;
  Int bound = 0;  // deg_h - 1
  PairVerdict verdict = PairVerdict::Indeterminate;
  std::optional<Int> delta_exact;
  std::optional<Int> delta_observed;
  bool capped = false;
  std::uint64_t pairs_considered = 0;
  std::optional<bool> adjacent;  // filled for d = 2
  std::optional<StarSequence> witness_lambda;
  std::optional<StarSequence> witness_nu;
};

struct ConjectureReport {
  ConjectureScope scope = ConjectureScope::AllPairs;
  std::vector<ConjecturePairResult> pairs;
  std::uint64_t holds = 0;
  std::uint64_t violations = 0;
  std::uint64_t indeterminate = 0;
};

/// Tests delta(x, y) <= deg h(x, y) - 1 over the distinct equivalent
/// pairs of the Apery set (per sequence pair in Strong scope; restricted
/// to adjacent pairs in AdjacentOnly scope, d = 2 only). Pairs hitting
/// enumeration caps are reported indeterminate, never as holding.
ConjectureReport check_conjecture(const SemigroupPresentation& P, ConjectureScope scope,
                                  const SequenceCaps& caps = {});

}  // namespace semreg
