#include "semreg/apery.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "semreg/errors.hpp"

namespace semreg {

bool in_apery(const SemigroupPresentation& P, const LatticePoint& x) {
  if (!P.contains(x)) return false;
  for (int i = 0; i < P.dim(); ++i) {
    if (P.contains(x - P.axis_generator(i))) return false;
  }
  return true;
}

namespace {

// candidate is known to be in B; only the e_i subtractions are tested
bool apery_filter(const SemigroupPresentation& P, const LatticePoint& x) {
  for (int i = 0; i < P.dim(); ++i) {
    LatticePoint y = x - P.axis_generator(i);
    if (y.is_nonnegative() && P.contains(y)) return false;
  }
  return true;
}

}  // namespace

std::vector<LatticePoint> apery_set(const SemigroupPresentation& P) {
  const Int f = P.class_count();
  const Int level_cap = f - P.codim();

  std::vector<LatticePoint> result;
  std::vector<LatticePoint> frontier;
  result.push_back(LatticePoint::zero(P.dim()));
  frontier.push_back(result.back());

  // Every Apery element of degree n is a degree n-1 Apery element plus a
  // non-axis generator: any full *-sequence of it starts with such a
  // generator and its tail point stays in the Apery set.
  for (Int level = 1; level <= level_cap && !frontier.empty(); ++level) {
    std::unordered_set<LatticePoint, LatticePointHash> candidates;
    for (const auto& y : frontier) {
      for (const auto& a : P.extras()) candidates.insert(y + a);
    }
    std::vector<LatticePoint> next;
    for (const auto& x : candidates) {
      if (apery_filter(P, x)) next.push_back(x);
    }
    std::sort(next.begin(), next.end());
    result.insert(result.end(), next.begin(), next.end());
    frontier = std::move(next);
  }

  std::unordered_set<std::uint64_t> residues;
  for (const auto& x : result) residues.insert(P.residue_code(x));
  if (Int(residues.size()) != f)
    throw ConsistencyError("Apery enumeration found " + std::to_string(residues.size()) +
                           " residue classes, expected " + f.str());

  std::sort(result.begin(), result.end());
  return result;
}

std::pair<LatticePoint, std::vector<LatticePoint>> shift_and_exponents(
    const std::vector<LatticePoint>& elements, const Int& alpha) {
  if (elements.empty()) throw std::invalid_argument("empty element list");
  LatticePoint shift = elements.front();
  for (const auto& x : elements) {
    if (x.dim() != shift.dim()) throw std::invalid_argument("dimension mismatch");
    shift = componentwise_min(shift, x);
  }
  std::vector<LatticePoint> exponents;
  exponents.reserve(elements.size());
  for (const auto& x : elements) {
    LatticePoint diff = x - shift;
    std::vector<Int> e(static_cast<std::size_t>(diff.dim()));
    for (int i = 0; i < diff.dim(); ++i) {
      if (diff[i] % alpha != 0)
        throw ConsistencyError("non-integral exponent for " + x.str() +
                               "; elements do not share a residue");
      e[static_cast<std::size_t>(i)] = diff[i] / alpha;
    }
    exponents.emplace_back(std::move(e));
  }
  return {shift, exponents};
}

std::vector<AperyClass> partition_classes(const SemigroupPresentation& P,
                                          const std::vector<LatticePoint>& apery) {
  std::unordered_map<std::uint64_t, std::vector<LatticePoint>> by_residue;
  for (const auto& x : apery) by_residue[P.residue_code(x)].push_back(x);

  std::vector<std::uint64_t> order;
  std::unordered_set<std::uint64_t> placed;
  const std::uint64_t zero_code = P.residue_code(LatticePoint::zero(P.dim()));
  order.push_back(zero_code);
  placed.insert(zero_code);
  for (const auto& a : P.extras()) {
    std::uint64_t code = P.residue_code(a);
    if (placed.insert(code).second) order.push_back(code);
  }
  std::map<LatticePoint, std::uint64_t> rest;  // residue-lexicographic tail
  for (const auto& [code, elems] : by_residue) {
    if (!placed.count(code)) rest.emplace(P.residue_point(elems.front()), code);
  }
  for (const auto& [res, code] : rest) order.push_back(code);

  std::vector<AperyClass> classes;
  classes.reserve(order.size());
  for (std::uint64_t code : order) {
    auto it = by_residue.find(code);
    if (it == by_residue.end())
      throw ConsistencyError("residue class without Apery representative");
    AperyClass cls;
    cls.elements = it->second;
    std::sort(cls.elements.begin(), cls.elements.end());
    cls.residue = P.residue_point(cls.elements.front());
    auto [shift, exps] = shift_and_exponents(cls.elements, P.alpha());
    cls.shift = std::move(shift);
    cls.exponents = std::move(exps);
    cls.shift_degree = P.integral_degree(cls.shift);
    classes.push_back(std::move(cls));
  }

  // the classes of 0 and of each extra are singletons
  for (std::size_t t = 0; t < 1 + P.extras().size() && t < classes.size(); ++t) {
    if (classes[t].size() != 1)
      throw ConsistencyError("expected singleton class for a degree <= 1 element");
  }
  if (Int(classes.size()) != P.class_count())
    throw ConsistencyError("class count mismatch in partition");
  return classes;
}

}  // namespace semreg
