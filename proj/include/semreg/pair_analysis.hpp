#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "semreg/star_sequence.hpp"

namespace semreg {

struct PairAnalysisOptions {
  SequenceCaps caps;
  std::size_t max_report_pairs = 8;  // per-sequence-pair detail entries
};

struct SequencePairReport {
  StarSequence lambda;
  StarSequence nu;
  std::vector<std::pair<int, int>> delta;
  Int delta_value = 0;
  bool crossless = true;
  std::optional<CrossCertificate> max_cross;
};

/// Full pairwise analysis of two equivalent Apery-set elements: the delta
/// invariants, crossings, the componentwise minimum, adjacency (d = 2),
/// and the resulting conjecture verdict for the pair.
struct PairAnalysis {
  LatticePoint x, y;
  bool x_in_apery = false;
  bool y_in_apery = false;
  bool equivalent = false;

  Int deg_x = 0, deg_y = 0;
  LatticePoint h;
  Int deg_h = 0;
  Int bound = 0;  // deg_h - 1

  std::uint64_t lambda_count = 0, nu_count = 0;
  bool lambda_capped = false, nu_capped = false;

  DeltaResult delta;
  std::optional<bool> crossless;  // absent when the search was capped
  bool crossless_capped = false;
  std::vector<SequencePairReport> pair_reports;
  std::optional<bool> adjacent;  // d = 2 and x != y only
  PairVerdict verdict = PairVerdict::Indeterminate;

  bool preconditions_ok() const { return x_in_apery && y_in_apery && equivalent; }
};

PairAnalysis analyze_pair(const SemigroupPresentation& P, const LatticePoint& x,
                          const LatticePoint& y, const PairAnalysisOptions& opts = {});

}  // namespace semreg
