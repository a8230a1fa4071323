#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semreg/lattice.hpp"

namespace semreg {

using IntMatrix = std::vector<std::vector<Int>>;

/// Coefficient field for homology ranks: the rationals (default) or a
/// prime field.
struct FieldSpec {
  enum class Kind { Rationals, PrimeField };
  Kind kind = Kind::Rationals;
  std::uint64_t prime = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime_field(std::uint64_t p);
  /// "q" or "fp:P"; inverse of parse().
  std::string name() const;
  static FieldSpec parse(const std::string& text);
};

/// Rank over Q, by fraction-free (Bareiss) elimination on integers.
int rational_rank(IntMatrix m);
/// Rank over F_p.
int prime_rank(const IntMatrix& m, std::uint64_t p);

int matrix_rank(IntMatrix m, const FieldSpec& field);

}  // namespace semreg
