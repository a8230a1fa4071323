#include "semreg/pair_analysis.hpp"

#include <algorithm>

#include "semreg/errors.hpp"

namespace semreg {

PairAnalysis analyze_pair(const SemigroupPresentation& P, const LatticePoint& x,
                          const LatticePoint& y, const PairAnalysisOptions& opts) {
  PairAnalysis r;
  r.x = x;
  r.y = y;
  r.x_in_apery = x.dim() == P.dim() && in_apery(P, x) && !x.is_zero();
  r.y_in_apery = y.dim() == P.dim() && in_apery(P, y) && !y.is_zero();
  r.equivalent = r.x_in_apery && r.y_in_apery && P.equivalent(x, y);
  if (!r.preconditions_ok()) return r;

  r.deg_x = P.integral_degree(x);
  r.deg_y = P.integral_degree(y);
  r.h = componentwise_min(x, y);
  r.deg_h = P.integral_degree(r.h);
  r.bound = r.deg_h - 1;

  auto probe = [&](const LatticePoint& p, std::uint64_t& count, bool& capped) {
    auto seqs = sample_full(P, p, opts.caps.max_sequences + 1);
    capped = seqs.size() > opts.caps.max_sequences;
    if (capped) seqs.pop_back();
    count = seqs.size();
    return seqs;
  };
  const auto lx = probe(x, r.lambda_count, r.lambda_capped);
  const auto ly = probe(y, r.nu_count, r.nu_capped);

  r.delta = delta_min(P, x, y, opts.caps);

  try {
    r.crossless = are_crossless(P, x, y, opts.caps);
  } catch (const CapExceededError&) {
    r.crossless_capped = true;
  }

  std::size_t emitted = 0;
  for (std::size_t a = 0; a < lx.size() && emitted < opts.max_report_pairs; ++a) {
    for (std::size_t b = 0; b < ly.size() && emitted < opts.max_report_pairs; ++b) {
      SequencePairReport pr;
      pr.lambda = lx[a];
      pr.nu = ly[b];
      pr.delta = delta_set(P, pr.lambda, pr.nu);
      pr.delta_value = delta_value(pr.delta);
      pr.crossless = is_crossless(P, pr.lambda, pr.nu);
      if (!pr.crossless) pr.max_cross = maximal_cross(P, pr.lambda, pr.nu);
      r.pair_reports.push_back(std::move(pr));
      ++emitted;
    }
  }

  if (P.dim() == 2 && x != y) {
    const auto classes = partition_classes(P, apery_set(P));
    const std::uint64_t code = P.residue_code(x);
    for (const auto& cls : classes) {
      if (P.residue_code(cls.residue) == code) {
        r.adjacent = is_adjacent(cls, x, y);
        break;
      }
    }
  }

  if (r.delta.exact) {
    r.verdict = *r.delta.exact <= r.bound ? PairVerdict::Holds : PairVerdict::Violated;
  } else {
    r.verdict = PairVerdict::Indeterminate;
  }
  return r;
}

}  // namespace semreg
