#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semreg/apery.hpp"
#include "semreg/lattice.hpp"
#include "semreg/monomial_ideal.hpp"

namespace semreg {

enum class EgCase { Dim2, AllClassesAtMostTwo, GammaClassAtMostTwo, Empirical };

std::string eg_case_name(EgCase c);

struct ClassSummary {
  AperyClass apery;
  MonomialIdeal ideal;
  Int reg_ideal = 0;
  Int contribution = 0;  // reg_ideal + shift degree
};

/// The decomposition of K[B] into shifted monomial ideals, one summand
/// per Apery class, with the regularity assembled as the maximum of
/// reg I_t + deg h_t.
struct DecompositionReport {
  int d = 0;
  Int alpha = 0;
  Int codim = 0;
  Int f = 0;  // class count; equals deg K[B] when the gcd condition holds
  bool gcd_warning = false;
  std::string field;
  std::vector<ClassSummary> classes;
  Int reg_kb = 0;
  std::vector<std::size_t> gamma;  // indices of classes attaining reg_kb
  Int eg_bound = 0;                // f - codim
  std::optional<bool> eg_holds;    // absent when suppressed by the gcd warning
  std::optional<Int> eg_margin;
  std::string eg_status;
};

struct DecomposeOptions {
  FieldSpec field;
  bool force_general = false;  // use the Betti path even for d = 2
  IdealCaps ideal_caps;
};

DecompositionReport decompose(const SemigroupPresentation& P, const DecomposeOptions& opts = {});

struct EgVerdict {
  std::optional<bool> holds;
  Int reg_kb = 0;
  Int bound = 0;
  std::optional<Int> margin;
  bool dim2 = false;
  bool all_classes_at_most_two = false;
  bool gamma_class_at_most_two = false;
  EgCase proved_case = EgCase::Empirical;
  std::string status;
};

EgVerdict check_eisenbud_goto(const DecompositionReport& report);
EgVerdict check_eisenbud_goto(const SemigroupPresentation& P, const DecomposeOptions& opts = {});

struct Gap {
  Int first = 0;  // first and last k with (k, alpha-k) outside B
  Int last = 0;
  Int length = 0;
};

/// Degree-one membership pattern on the segment from (alpha, 0) to
/// (0, alpha) and the induced gap bounds (d = 2 only).
struct GapReport {
  Int alpha = 0;
  Int codim = 0;
  std::vector<bool> member;  // index k = 0..alpha: (k, alpha-k) in B
  std::vector<Gap> gaps;
  Int longest = 0;
  Int second_longest = 0;
  Int lvovsky_bound = 0;  // longest + second longest + 1
  bool hhs_applicable = false;
  std::optional<Int> hhs_bound;  // longest + 1, when (1,a-1),(a-1,1) in B
  Int gap_sum = 0;
  Int deg_minus_codim = 0;
  bool identity_holds = false;  // deg - c == sum of gap lengths + 1
};

GapReport gap_report(const SemigroupPresentation& P);

struct DegreeBoundReport {
  Int max_degree = 0;
  LatticePoint witness;
  Int bound = 0;  // f - codim
  bool holds = false;
};

/// Prop-style degree bound over the Apery set: max deg x <= f - c.
DegreeBoundReport degree_bound_check(const SemigroupPresentation& P);

}  // namespace semreg
