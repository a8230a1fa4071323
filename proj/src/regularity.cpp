#include "semreg/regularity.hpp"

#include <algorithm>
#include <stdexcept>

#include "semreg/errors.hpp"

namespace semreg {

std::string eg_case_name(EgCase c) {
  switch (c) {
    case EgCase::Dim2: return "dim-2";
    case EgCase::AllClassesAtMostTwo: return "all-classes-at-most-2";
    case EgCase::GammaClassAtMostTwo: return "gamma-class-at-most-2";
    case EgCase::Empirical: return "empirical";
  }
  return "unknown";
}

DecompositionReport decompose(const SemigroupPresentation& P, const DecomposeOptions& opts) {
  const ValidationReport v = P.validate();
  if (!v.valid()) {
    std::string msg = "invalid presentation:";
    for (const auto& issue : v.violations) msg += " " + issue.message + ";";
    throw std::invalid_argument(msg);
  }

  DecompositionReport report;
  report.d = P.dim();
  report.alpha = P.alpha();
  report.codim = P.codim();
  report.f = P.class_count();
  report.gcd_warning = v.gcd_warning();
  report.field = opts.field.name();

  const auto classes = partition_classes(P, apery_set(P));
  report.classes.reserve(classes.size());
  for (const auto& cls : classes) {
    ClassSummary summary{cls, MonomialIdeal::minimalize(P.dim(), cls.exponents), 0, 0};
    if (P.dim() == 2 && !opts.force_general) {
      summary.reg_ideal = regularity_bivariate(summary.ideal);
    } else {
      summary.reg_ideal = regularity_general(summary.ideal, opts.field, opts.ideal_caps);
    }
    summary.contribution = summary.reg_ideal + cls.shift_degree;
    report.classes.push_back(std::move(summary));
  }

  report.reg_kb = 0;
  for (const auto& c : report.classes) report.reg_kb = std::max(report.reg_kb, c.contribution);
  for (std::size_t t = 0; t < report.classes.size(); ++t) {
    if (report.classes[t].contribution == report.reg_kb) report.gamma.push_back(t);
  }

  report.eg_bound = report.f - report.codim;
  if (report.gcd_warning) {
    report.eg_status =
        "suppressed: generator coordinates are not relatively prime, so deg K[B] = f "
        "is not asserted";
  } else {
    report.eg_holds = report.reg_kb <= report.eg_bound;
    report.eg_margin = report.eg_bound - report.reg_kb;
    report.eg_status = "verified";
    if (P.dim() == 2 && !*report.eg_holds)
      throw ConsistencyError("regularity exceeds the degree bound on a monomial curve");
  }
  return report;
}

EgVerdict check_eisenbud_goto(const DecompositionReport& report) {
  EgVerdict verdict;
  verdict.holds = report.eg_holds;
  verdict.reg_kb = report.reg_kb;
  verdict.bound = report.eg_bound;
  verdict.margin = report.eg_margin;
  verdict.dim2 = report.d == 2;
  verdict.all_classes_at_most_two =
      std::all_of(report.classes.begin(), report.classes.end(),
                  [](const ClassSummary& c) { return c.apery.size() <= 2; });
  verdict.gamma_class_at_most_two =
      std::any_of(report.gamma.begin(), report.gamma.end(),
                  [&](std::size_t t) { return report.classes[t].apery.size() <= 2; });
  if (verdict.dim2) {
    verdict.proved_case = EgCase::Dim2;
  } else if (verdict.all_classes_at_most_two) {
    verdict.proved_case = EgCase::AllClassesAtMostTwo;
  } else if (verdict.gamma_class_at_most_two) {
    verdict.proved_case = EgCase::GammaClassAtMostTwo;
  } else {
    verdict.proved_case = EgCase::Empirical;
  }
  verdict.status = report.eg_status;
  if (verdict.proved_case == EgCase::Empirical && verdict.holds)
    verdict.status += "; unproved regime - empirical check only";
  return verdict;
}

EgVerdict check_eisenbud_goto(const SemigroupPresentation& P, const DecomposeOptions& opts) {
  return check_eisenbud_goto(decompose(P, opts));
}

GapReport gap_report(const SemigroupPresentation& P) {
  if (P.dim() != 2) throw std::invalid_argument("gap report is defined for d = 2 only");
  GapReport report;
  report.alpha = P.alpha();
  report.codim = P.codim();

  const long long a = static_cast<long long>(P.alpha());
  report.member.reserve(static_cast<std::size_t>(a) + 1);
  for (long long k = 0; k <= a; ++k) {
    report.member.push_back(P.contains(LatticePoint{k, a - k}));
  }

  for (long long k = 0; k <= a;) {
    if (report.member[static_cast<std::size_t>(k)]) {
      ++k;
      continue;
    }
    long long start = k;
    while (k <= a && !report.member[static_cast<std::size_t>(k)]) ++k;
    report.gaps.push_back({Int(start), Int(k - 1), Int(k - start)});
  }

  std::vector<Int> lengths;
  for (const auto& g : report.gaps) {
    lengths.push_back(g.length);
    report.gap_sum += g.length;
  }
  std::sort(lengths.rbegin(), lengths.rend());
  report.longest = lengths.empty() ? Int(0) : lengths[0];
  report.second_longest = lengths.size() < 2 ? Int(0) : lengths[1];
  report.lvovsky_bound = report.longest + report.second_longest + 1;

  report.hhs_applicable = report.member[1] && report.member[static_cast<std::size_t>(a) - 1];
  if (report.hhs_applicable) report.hhs_bound = report.longest + 1;

  report.deg_minus_codim = P.class_count() - P.codim();
  report.identity_holds = report.deg_minus_codim == report.gap_sum + 1;
  return report;
}

DegreeBoundReport degree_bound_check(const SemigroupPresentation& P) {
  DegreeBoundReport report;
  report.bound = P.class_count() - P.codim();
  report.witness = LatticePoint::zero(P.dim());
  for (const auto& x : apery_set(P)) {
    Int deg = P.integral_degree(x);
    if (deg > report.max_degree) {
      report.max_degree = deg;
      report.witness = x;
    }
  }
  report.holds = report.max_degree <= report.bound;
  return report;
}

}  // namespace semreg
