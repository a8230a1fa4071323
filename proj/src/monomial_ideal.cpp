#include "semreg/monomial_ideal.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "semreg/errors.hpp"

namespace semreg {

MonomialIdeal MonomialIdeal::minimalize(int dim, std::vector<LatticePoint> generators) {
  if (generators.empty()) throw std::invalid_argument("empty generator list");
  for (const auto& g : generators) {
    if (g.dim() != dim) throw std::invalid_argument("generator has wrong dimension");
    if (!g.is_nonnegative()) throw std::invalid_argument("negative exponent in " + g.str());
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  std::vector<LatticePoint> minimal;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < generators.size() && !dominated; ++j) {
      if (i != j && dominates(generators[i], generators[j])) dominated = true;
    }
    if (!dominated) minimal.push_back(generators[i]);
  }
  return MonomialIdeal(dim, std::move(minimal));
}

bool MonomialIdeal::contains(const LatticePoint& b) const {
  for (const auto& g : generators_)
    if (dominates(b, g)) return true;
  return false;
}

Int BettiTable::regularity() const {
  if (entries.empty()) throw ConsistencyError("empty Betti table");
  bool first = true;
  Int best = 0;
  for (const auto& [key, rank] : entries) {
    Int total = -Int(key.first);
    for (const Int& c : key.second) total += c;
    if (first || total > best) best = total;
    first = false;
  }
  return best;
}

Int regularity_bivariate(const MonomialIdeal& I) {
  if (I.dim() != 2) throw std::invalid_argument("bivariate regularity needs dim = 2");
  std::vector<LatticePoint> gens = I.generators();
  // b_1 > ... > b_r >= 0 forces 0 <= c_1 < ... < c_r on an antichain
  std::sort(gens.begin(), gens.end(),
            [](const LatticePoint& a, const LatticePoint& b) { return a[0] > b[0]; });
  if (gens.size() == 1) return gens[0][0] + gens[0][1];
  Int best = 0;
  bool first = true;
  for (std::size_t i = 0; i + 1 < gens.size(); ++i) {
    Int v = gens[i][0] + gens[i + 1][1];
    if (first || v > best) best = v;
    first = false;
  }
  return best - 1;
}

std::vector<LatticePoint> lcm_lattice(const MonomialIdeal& I, const IdealCaps& caps) {
  if (I.generators().size() > caps.max_generators)
    throw TooLargeError("ideal has " + std::to_string(I.generators().size()) +
                        " generators, above the cap of " + std::to_string(caps.max_generators));
  std::set<LatticePoint> lattice;
  for (const auto& g : I.generators()) {
    std::vector<LatticePoint> additions;
    additions.push_back(g);
    for (const auto& s : lattice) {
      std::vector<Int> join(static_cast<std::size_t>(I.dim()));
      for (int k = 0; k < I.dim(); ++k)
        join[static_cast<std::size_t>(k)] = std::max(g[k], s[k]);
      additions.emplace_back(std::move(join));
    }
    for (auto& a : additions) lattice.insert(std::move(a));
    if (lattice.size() > caps.max_lattice)
      throw TooLargeError("lcm lattice exceeds the cap of " + std::to_string(caps.max_lattice));
  }
  return {lattice.begin(), lattice.end()};
}

namespace {

// faces of the upper Koszul complex K^b, grouped by cardinality;
// faces[s] lists the vertex sets of size s as sorted index vectors
std::vector<std::vector<std::vector<int>>> koszul_complex(const MonomialIdeal& I,
                                                          const LatticePoint& b) {
  const int d = I.dim();
  std::vector<std::vector<std::vector<int>>> faces(static_cast<std::size_t>(d) + 1);
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    std::vector<Int> shifted(b.coords());
    std::vector<int> vertices;
    bool feasible = true;
    for (int v = 0; v < d; ++v) {
      if (mask & (1u << v)) {
        vertices.push_back(v);
        if (--shifted[static_cast<std::size_t>(v)] < 0) {
          feasible = false;
          break;
        }
      }
    }
    if (!feasible) continue;
    if (I.contains(LatticePoint(std::move(shifted))))
      faces[vertices.size()].push_back(std::move(vertices));
  }
  for (auto& level : faces) std::sort(level.begin(), level.end());
  return faces;
}

// boundary matrix from cardinality-s faces to cardinality s-1 faces
IntMatrix boundary_matrix(const std::vector<std::vector<int>>& lower,
                          const std::vector<std::vector<int>>& upper) {
  IntMatrix m(lower.size(), std::vector<Int>(upper.size()));
  std::map<std::vector<int>, std::size_t> row_of;
  for (std::size_t r = 0; r < lower.size(); ++r) row_of[lower[r]] = r;
  for (std::size_t c = 0; c < upper.size(); ++c) {
    const auto& face = upper[c];
    for (std::size_t pos = 0; pos < face.size(); ++pos) {
      std::vector<int> sub;
      sub.reserve(face.size() - 1);
      for (std::size_t t = 0; t < face.size(); ++t)
        if (t != pos) sub.push_back(face[t]);
      auto it = row_of.find(sub);
      if (it == row_of.end()) throw ConsistencyError("complex not downward closed");
      m[it->second][c] = (pos % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

}  // namespace

BettiTable betti_numbers(const MonomialIdeal& I, const FieldSpec& field, const IdealCaps& caps) {
  BettiTable table;
  for (const auto& b : lcm_lattice(I, caps)) {
    auto faces = koszul_complex(I, b);
    if (faces[0].empty()) throw ConsistencyError("lattice join outside the ideal");
    const int d = I.dim();
    std::vector<int> rank_boundary(static_cast<std::size_t>(d) + 2, 0);
    for (int s = 1; s <= d; ++s) {
      if (faces[static_cast<std::size_t>(s)].empty()) break;
      rank_boundary[static_cast<std::size_t>(s)] =
          matrix_rank(boundary_matrix(faces[static_cast<std::size_t>(s) - 1],
                                      faces[static_cast<std::size_t>(s)]),
                      field);
    }
    for (int i = 0; i <= d; ++i) {
      Int betti = Int(faces[static_cast<std::size_t>(i)].size()) -
                  rank_boundary[static_cast<std::size_t>(i)] -
                  rank_boundary[static_cast<std::size_t>(i) + 1];
      if (betti > 0) table.entries[{i, b.coords()}] = betti;
    }
  }
  return table;
}

Int regularity_general(const MonomialIdeal& I, const FieldSpec& field, const IdealCaps& caps) {
  return betti_numbers(I, field, caps).regularity();
}

}  // namespace semreg
