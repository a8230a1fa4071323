#include "semreg/star_sequence.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "semreg/errors.hpp"

namespace semreg {

LatticePoint StarSequence::partial_point(int i) const {
  if (i < 0 || i > length()) throw std::out_of_range("sequence index out of range");
  LatticePoint p = base;
  for (int t = 0; t < i; ++t) p -= steps[static_cast<std::size_t>(t)];
  return p;
}

bool is_star_sequence(const SemigroupPresentation& P, const StarSequence& s) {
  const auto& gens = P.generators();
  LatticePoint rem = s.base;
  if (!P.contains(rem)) return false;
  for (const auto& step : s.steps) {
    if (std::find(gens.begin(), gens.end(), step) == gens.end()) return false;
    rem -= step;
    if (!rem.is_nonnegative() || !P.contains(rem)) return false;
  }
  return true;
}

StarSequence reversed(StarSequence s) {
  std::reverse(s.steps.begin(), s.steps.end());
  return s;
}

namespace {

constexpr int kMaxSequenceDegree = 10'000;

// Depth-first walk over Lambda_x; emit returns false to stop early.
void dfs_full(const SemigroupPresentation& P, const LatticePoint& x,
              const std::function<bool(const std::vector<LatticePoint>&)>& emit) {
  if (x.is_zero()) return;  // Lambda_0 is empty
  if (!P.contains(x))
    throw std::invalid_argument("base point " + x.str() + " is not in the semigroup");
  const Int deg = P.integral_degree(x);
  if (deg > kMaxSequenceDegree)
    throw TooLargeError("degree " + deg.str() + " too large for sequence enumeration");
  const int n = static_cast<int>(deg);

  std::vector<LatticePoint> steps;
  steps.reserve(static_cast<std::size_t>(n));
  std::function<bool(const LatticePoint&, int)> rec = [&](const LatticePoint& rem,
                                                          int depth) -> bool {
    if (depth == n) {
      if (!rem.is_zero()) throw ConsistencyError("full-length remainder is nonzero");
      return emit(steps);
    }
    for (const auto& g : P.generators()) {
      LatticePoint next = rem - g;
      if (!next.is_nonnegative() || !P.contains(next)) continue;
      steps.push_back(g);
      const bool go_on = rec(next, depth + 1);
      steps.pop_back();
      if (!go_on) return false;
    }
    return true;
  };
  rec(x, 0);
}

struct CappedList {
  std::vector<StarSequence> seqs;
  bool capped = false;
};

CappedList enumerate_capped(const SemigroupPresentation& P, const LatticePoint& x,
                            std::uint64_t cap) {
  CappedList out;
  const std::uint64_t probe =
      cap < std::numeric_limits<std::uint64_t>::max() ? cap + 1 : cap;
  out.seqs = sample_full(P, x, probe);
  if (out.seqs.size() > cap) {
    out.seqs.pop_back();
    out.capped = true;
  }
  return out;
}

// residue codes of the partial points x(lambda, 0..n)
std::vector<std::uint64_t> partial_codes(const SemigroupPresentation& P,
                                         const StarSequence& s) {
  std::vector<std::uint64_t> codes;
  codes.reserve(static_cast<std::size_t>(s.length()) + 1);
  LatticePoint rem = s.base;
  codes.push_back(P.residue_code(rem));
  for (const auto& step : s.steps) {
    rem -= step;
    codes.push_back(P.residue_code(rem));
  }
  return codes;
}

struct Profile {
  std::vector<std::uint64_t> codes;
  std::unordered_map<std::uint64_t, std::vector<int>> index;
};

Profile make_profile(const SemigroupPresentation& P, const StarSequence& s) {
  Profile p;
  p.codes = partial_codes(P, s);
  for (int j = 0; j < static_cast<int>(p.codes.size()); ++j)
    p.index[p.codes[static_cast<std::size_t>(j)]].push_back(j);
  return p;
}

Int delta_count(const Profile& lambda, const Profile& nu) {
  std::size_t matches = 0;
  for (std::uint64_t code : lambda.codes) {
    auto it = nu.index.find(code);
    if (it != nu.index.end()) matches += it->second.size();
  }
  return Int(matches) - 2;
}

void require_full_length(const SemigroupPresentation& P, const StarSequence& s,
                         const char* role) {
  if (s.base.is_zero() || !P.contains(s.base))
    throw std::invalid_argument(std::string(role) + " base must be a nonzero semigroup element");
  if (Int(s.length()) != P.integral_degree(s.base))
    throw std::invalid_argument(std::string(role) + " must have full length deg(base)");
}

}  // namespace

std::vector<StarSequence> enumerate_full(const SemigroupPresentation& P, const LatticePoint& x,
                                         std::uint64_t cap) {
  if (cap < 1) throw std::invalid_argument("cap must be at least 1");
  std::vector<StarSequence> out;
  dfs_full(P, x, [&](const std::vector<LatticePoint>& steps) {
    if (out.size() == cap)
      throw CapExceededError("Lambda enumeration exceeded the cap of " + std::to_string(cap),
                             out.size());
    out.push_back(StarSequence{x, steps});
    return true;
  });
  return out;
}

std::vector<StarSequence> sample_full(const SemigroupPresentation& P, const LatticePoint& x,
                                      std::uint64_t limit) {
  std::vector<StarSequence> out;
  if (limit == 0) return out;
  dfs_full(P, x, [&](const std::vector<LatticePoint>& steps) {
    out.push_back(StarSequence{x, steps});
    return out.size() < limit;
  });
  return out;
}

std::vector<std::pair<int, int>> delta_set(const SemigroupPresentation& P,
                                           const StarSequence& lambda, const StarSequence& nu) {
  require_full_length(P, lambda, "lambda");
  require_full_length(P, nu, "nu");
  const auto lcodes = partial_codes(P, lambda);
  const Profile nprof = make_profile(P, nu);
  std::vector<std::pair<int, int>> delta;
  for (int i = 0; i < static_cast<int>(lcodes.size()); ++i) {
    auto it = nprof.index.find(lcodes[static_cast<std::size_t>(i)]);
    if (it == nprof.index.end()) continue;
    for (int j : it->second) delta.emplace_back(i, j);
  }
  return delta;  // lexicographically sorted by construction
}

std::vector<CrossCertificate> find_crosses(const SemigroupPresentation& P,
                                           const StarSequence& lambda, const StarSequence& nu) {
  const auto delta = delta_set(P, lambda, nu);
  std::vector<CrossCertificate> out;
  for (std::size_t a = 0; a < delta.size(); ++a) {
    for (std::size_t b = a + 1; b < delta.size(); ++b) {
      const auto& [i1, j1] = delta[a];
      const auto& [i2, j2] = delta[b];
      if (i1 < i2 && j1 > j2) out.push_back({lambda, nu, i1, i2, j2, j1});
    }
  }
  std::sort(out.begin(), out.end(), [](const CrossCertificate& a, const CrossCertificate& b) {
    return std::tie(a.i, a.j, a.l, a.k) < std::tie(b.i, b.j, b.l, b.k);
  });
  return out;
}

bool is_crossless(const SemigroupPresentation& P, const StarSequence& lambda,
                  const StarSequence& nu) {
  const auto delta = delta_set(P, lambda, nu);
  for (std::size_t a = 0; a < delta.size(); ++a)
    for (std::size_t b = a + 1; b < delta.size(); ++b)
      if (delta[a].first < delta[b].first && delta[a].second > delta[b].second) return false;
  return true;
}

std::optional<CrossCertificate> maximal_cross(const SemigroupPresentation& P,
                                              const StarSequence& lambda,
                                              const StarSequence& nu) {
  std::optional<CrossCertificate> best;
  for (const auto& c : find_crosses(P, lambda, nu)) {
    if (!best) {
      best = c;
      continue;
    }
    const int span = c.j - c.i, best_span = best->j - best->i;
    if (std::tuple(-span, c.i, c.l) < std::tuple(-best_span, best->i, best->l)) best = c;
  }
  return best;
}

bool are_crossless(const SemigroupPresentation& P, const LatticePoint& x, const LatticePoint& y,
                   const SequenceCaps& caps) {
  if (!P.equivalent(x, y)) throw std::invalid_argument("points are not equivalent");
  const CappedList lx = enumerate_capped(P, x, caps.max_sequences);
  const CappedList ly = enumerate_capped(P, y, caps.max_sequences);
  std::uint64_t pairs = 0;
  bool pair_capped = lx.capped || ly.capped;
  for (const auto& lambda : lx.seqs) {
    for (const auto& nu : ly.seqs) {
      if (pairs >= caps.max_pairs) {
        pair_capped = true;
        break;
      }
      ++pairs;
      if (is_crossless(P, lambda, nu)) return true;
    }
    if (pairs >= caps.max_pairs) break;
  }
  if (pair_capped)
    throw CapExceededError("crossless search capped before finding a crossless pair", pairs);
  return false;
}

DeltaResult delta_min(const SemigroupPresentation& P, const LatticePoint& x,
                      const LatticePoint& y, const SequenceCaps& caps) {
  DeltaResult result;
  const CappedList lx = enumerate_capped(P, x, caps.max_sequences);
  const CappedList ly = enumerate_capped(P, y, caps.max_sequences);
  if (lx.seqs.empty() || ly.seqs.empty())
    throw std::invalid_argument("delta requires nonzero points of the semigroup");
  result.capped = lx.capped || ly.capped;

  std::vector<Profile> nprofiles;
  nprofiles.reserve(ly.seqs.size());
  for (const auto& nu : ly.seqs) nprofiles.push_back(make_profile(P, nu));

  // delta is bounded below by 0 for equivalent points (the two corner
  // pairs are always matched) and by -2 otherwise
  const Int floor_value = P.equivalent(x, y) ? Int(0) : Int(-2);

  std::optional<Int> best;
  bool done_all = true;
  for (std::size_t a = 0; a < lx.seqs.size() && (!best || *best != floor_value); ++a) {
    const Profile lprof = make_profile(P, lx.seqs[a]);
    for (std::size_t b = 0; b < ly.seqs.size(); ++b) {
      if (result.pairs_considered >= caps.max_pairs) {
        result.capped = true;
        done_all = false;
        break;
      }
      ++result.pairs_considered;
      Int d = delta_count(lprof, nprofiles[b]);
      if (!best || d < *best) {
        best = d;
        result.best_lambda = lx.seqs[a];
        result.best_nu = ly.seqs[b];
        if (d == floor_value) break;
      }
    }
    if (result.pairs_considered >= caps.max_pairs) break;
  }

  result.observed_min = best;
  if (best && *best == floor_value) {
    result.exact = best;  // the theoretical floor certifies the minimum
  } else if (!result.capped && done_all) {
    result.exact = best;
  }
  return result;
}

GlueResult glue_crosses(const SemigroupPresentation& P, const StarSequence& lambda,
                        const StarSequence& nu, const CrossIndices& first,
                        const CrossIndices& second) {
  require_full_length(P, lambda, "lambda");
  require_full_length(P, nu, "nu");
  const int n = lambda.length(), m = nu.length();
  const auto lcodes = partial_codes(P, lambda);
  const auto ncodes = partial_codes(P, nu);
  auto check_cross = [&](const CrossIndices& c, const char* which) {
    if (!(0 <= c.i && c.i < c.j && c.j <= n && 0 <= c.l && c.l < c.k && c.k <= m))
      throw std::invalid_argument(std::string(which) + " cross has invalid indices");
    if (lcodes[static_cast<std::size_t>(c.i)] != ncodes[static_cast<std::size_t>(c.k)] ||
        lcodes[static_cast<std::size_t>(c.j)] != ncodes[static_cast<std::size_t>(c.l)])
      throw std::invalid_argument(std::string(which) + " tuple is not a cross of the sequences");
  };
  check_cross(first, "first");
  check_cross(second, "second");
  if (!(first.j <= second.i && first.k <= second.l))
    throw std::invalid_argument("crosses do not satisfy j <= i' and k <= l'");

  auto splice = [](const std::vector<LatticePoint>& steps, int lo1, int hi1, int lo2, int hi2,
                   int lo3, int hi3, int lo4, int hi4) {
    std::vector<LatticePoint> out;
    out.reserve(steps.size());
    auto push = [&](int lo, int hi) {
      for (int t = lo; t < hi; ++t) out.push_back(steps[static_cast<std::size_t>(t)]);
    };
    push(lo1, hi1);
    push(lo2, hi2);
    push(lo3, hi3);
    push(lo4, hi4);
    return out;
  };

  // (b_{j+1..j'}, b_{i+1..j}, b_{1..i}, b_{j'+1..n}) in 1-based terms
  GlueResult result;
  result.lambda = StarSequence{
      lambda.base, splice(lambda.steps, first.j, second.j, first.i, first.j, 0, first.i,
                          second.j, n)};
  result.nu = StarSequence{
      nu.base, splice(nu.steps, first.k, second.k, first.l, first.k, 0, first.l, second.k, m)};
  result.cross = CrossCertificate{result.lambda, result.nu, second.i - first.j,
                                  second.j - first.i, second.l - first.k, second.k - first.l};

  if (!is_star_sequence(P, result.lambda) || !is_star_sequence(P, result.nu))
    throw ConsistencyError("glued sequences are not valid");
  const auto lcodes2 = partial_codes(P, result.lambda);
  const auto ncodes2 = partial_codes(P, result.nu);
  const auto& c = result.cross;
  if (lcodes2[static_cast<std::size_t>(c.i)] != ncodes2[static_cast<std::size_t>(c.k)] ||
      lcodes2[static_cast<std::size_t>(c.j)] != ncodes2[static_cast<std::size_t>(c.l)])
    throw ConsistencyError("glued certificate failed validation");
  return result;
}

LatticePoint third_element(const SemigroupPresentation& P, const StarSequence& lambda,
                           const StarSequence& nu, const CrossIndices& cross) {
  require_full_length(P, lambda, "lambda");
  require_full_length(P, nu, "nu");
  const LatticePoint& x = lambda.base;
  const LatticePoint& y = nu.base;
  if (!in_apery(P, x) || !in_apery(P, y))
    throw std::invalid_argument("both base points must lie in the Apery set");
  if (!P.equivalent(x, y)) throw std::invalid_argument("base points are not equivalent");
  const auto lcodes = partial_codes(P, lambda);
  const auto ncodes = partial_codes(P, nu);
  if (!(0 <= cross.i && cross.i < cross.j && cross.j <= lambda.length() && 0 <= cross.l &&
        cross.l < cross.k && cross.k <= nu.length()) ||
      lcodes[static_cast<std::size_t>(cross.i)] != ncodes[static_cast<std::size_t>(cross.k)] ||
      lcodes[static_cast<std::size_t>(cross.j)] != ncodes[static_cast<std::size_t>(cross.l)])
    throw std::invalid_argument("tuple is not a cross of the sequences");

  // z' = x(lambda, j) + y(nu*, deg y - l), then strip a maximal sum of
  // axis generators, preferring lexicographically larger reductions
  const LatticePoint zp = lambda.partial_point(cross.j) +
                          reversed(nu).partial_point(nu.length() - cross.l);
  const int d = P.dim();
  std::vector<Int> limit(static_cast<std::size_t>(d));
  Int total_limit = 0;
  for (int u = 0; u < d; ++u) {
    limit[static_cast<std::size_t>(u)] = zp[u] / P.alpha();
    total_limit += limit[static_cast<std::size_t>(u)];
  }

  std::vector<Int> reduction(static_cast<std::size_t>(d));
  std::optional<LatticePoint> found;
  std::function<bool(int, const Int&)> search = [&](int u, const Int& remaining) -> bool {
    if (u == d) {
      if (remaining != 0) return false;
      LatticePoint z = zp;
      for (int v = 0; v < d; ++v) z[v] -= reduction[static_cast<std::size_t>(v)] * P.alpha();
      if (P.contains(z)) {
        found = z;
        return true;
      }
      return false;
    }
    Int tail = 0;
    for (int v = u + 1; v < d; ++v) tail += limit[static_cast<std::size_t>(v)];
    Int hi = std::min(limit[static_cast<std::size_t>(u)], remaining);
    Int lo = remaining - tail;
    if (lo < 0) lo = 0;
    for (Int next = hi; next >= lo; --next) {  // lexicographically largest first
      reduction[static_cast<std::size_t>(u)] = next;
      if (search(u + 1, remaining - next)) return true;
    }
    return false;
  };

  for (Int s = total_limit; s >= 0; --s) {
    if (search(0, s)) break;
  }
  if (!found) throw ConsistencyError("no axis reduction found");  // s = 0 always succeeds

  const LatticePoint& z = *found;
  if (!in_apery(P, z) || !P.equivalent(z, x) || z == x || z == y)
    throw ConsistencyError("constructed element failed its postconditions");
  return z;
}

bool is_adjacent(const AperyClass& cls, const LatticePoint& x, const LatticePoint& y) {
  if (x.dim() != 2 || y.dim() != 2)
    throw std::invalid_argument("adjacency is defined for d = 2 only");
  if (x == y) throw std::invalid_argument("adjacency requires distinct elements");
  const auto& elems = cls.elements;
  if (std::find(elems.begin(), elems.end(), x) == elems.end() ||
      std::find(elems.begin(), elems.end(), y) == elems.end())
    throw std::invalid_argument("points must belong to the class");
  int i;
  if (x[0] > y[0] && x[1] < y[1]) {
    i = 0;
  } else if (x[1] > y[1] && x[0] < y[0]) {
    i = 1;
  } else {
    throw ConsistencyError("class elements must be incomparable");
  }
  const int j = 1 - i;
  for (const auto& z : elems) {
    if (z == x || z == y) continue;
    if (x[i] > z[i] && z[i] > y[i] && x[j] < z[j] && z[j] < y[j]) return false;
  }
  return true;
}

ConjectureReport check_conjecture(const SemigroupPresentation& P, ConjectureScope scope,
                                  const SequenceCaps& caps) {
  if (scope == ConjectureScope::AdjacentOnly && P.dim() != 2)
    throw std::invalid_argument("adjacent-only scope is defined for d = 2 only");

  ConjectureReport report;
  report.scope = scope;
  const auto classes = partition_classes(P, apery_set(P));

  for (const auto& cls : classes) {
    if (cls.size() < 2) continue;

    // Lambda lists are shared between the pairs of one class
    std::vector<std::optional<CappedList>> lists(cls.elements.size());
    std::vector<std::vector<Profile>> profiles(cls.elements.size());
    auto sequences_of = [&](std::size_t idx) -> const CappedList& {
      if (!lists[idx]) {
        lists[idx] = enumerate_capped(P, cls.elements[idx], caps.max_sequences);
        auto& prof = profiles[idx];
        prof.reserve(lists[idx]->seqs.size());
        for (const auto& s : lists[idx]->seqs) prof.push_back(make_profile(P, s));
      }
      return *lists[idx];
    };

    for (std::size_t a = 0; a < cls.elements.size(); ++a) {
      for (std::size_t b = a + 1; b < cls.elements.size(); ++b) {
        const LatticePoint& x = cls.elements[a];
        const LatticePoint& y = cls.elements[b];
        const bool adjacent = P.dim() == 2 ? is_adjacent(cls, x, y) : false;
        if (scope == ConjectureScope::AdjacentOnly && !adjacent) continue;

        ConjecturePairResult pr;
        pr.x = x;
        pr.y = y;
        if (P.dim() == 2) pr.adjacent = adjacent;
        pr.deg_h = P.integral_degree(componentwise_min(x, y));
        pr.bound = pr.deg_h - 1;

        const CappedList& lx = sequences_of(a);
        const CappedList& ly = sequences_of(b);
        bool capped = lx.capped || ly.capped;
        std::optional<Int> min_delta;
        std::optional<Int> max_delta;
        std::size_t wit_min_a = 0, wit_min_b = 0, wit_max_a = 0, wit_max_b = 0;
        bool done_all = true;
        bool floor_reached = false;  // delta >= 0 for equivalent Apery pairs
        bool strong_violation = false;
        for (std::size_t ia = 0; ia < lx.seqs.size() && !strong_violation && !floor_reached;
             ++ia) {
          for (std::size_t ib = 0; ib < ly.seqs.size(); ++ib) {
            if (pr.pairs_considered >= caps.max_pairs) {
              capped = true;
              done_all = false;
              break;
            }
            ++pr.pairs_considered;
            Int dv = delta_count(profiles[a][ia], profiles[b][ib]);
            if (!min_delta || dv < *min_delta) {
              min_delta = dv;
              wit_min_a = ia;
              wit_min_b = ib;
            }
            if (!max_delta || dv > *max_delta) {
              max_delta = dv;
              wit_max_a = ia;
              wit_max_b = ib;
            }
            if (scope == ConjectureScope::Strong && dv > pr.bound) {
              strong_violation = true;
              break;
            }
            if (scope != ConjectureScope::Strong && dv == 0) {
              floor_reached = true;  // certifies the minimum regardless of caps
              break;
            }
          }
        }

        if (scope == ConjectureScope::Strong) {
          pr.delta_observed = max_delta;
          if (strong_violation) {
            pr.verdict = PairVerdict::Violated;
            pr.witness_lambda = lx.seqs[wit_max_a];
            pr.witness_nu = ly.seqs[wit_max_b];
          } else if (!capped && done_all) {
            pr.verdict = PairVerdict::Holds;
          } else {
            pr.verdict = PairVerdict::Indeterminate;
          }
          if (!capped && done_all) pr.delta_exact = min_delta;
        } else {
          pr.delta_observed = min_delta;
          if (floor_reached || (!capped && done_all)) {
            pr.delta_exact = min_delta;
            if (*min_delta <= pr.bound) {
              pr.verdict = PairVerdict::Holds;
            } else {
              pr.verdict = PairVerdict::Violated;
              pr.witness_lambda = lx.seqs[wit_min_a];
              pr.witness_nu = ly.seqs[wit_min_b];
            }
          } else {
            pr.verdict = PairVerdict::Indeterminate;
          }
        }
        pr.capped = (capped || !done_all) && !floor_reached;

        switch (pr.verdict) {
          case PairVerdict::Holds: ++report.holds; break;
          case PairVerdict::Violated: ++report.violations; break;
          case PairVerdict::Indeterminate: ++report.indeterminate; break;
        }
        report.pairs.push_back(std::move(pr));
      }
    }
  }
  return report;
}

}  // namespace semreg
