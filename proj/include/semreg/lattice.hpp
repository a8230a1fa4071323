#pragma once

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/functional/hash.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace semreg {

// One integer type throughout; intermediate values in exact rank
// computations can exceed 64 bits even when the points themselves do not.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A point of Z^d. The same type carries semigroup elements, residues,
/// shifts, exponent vectors, and (possibly negative) differences.
class LatticePoint {
 public:
  LatticePoint() = default;
  explicit LatticePoint(std::vector<Int> coords) : coords_(std::move(coords)) {}
  LatticePoint(std::initializer_list<long long> coords) {
    coords_.reserve(coords.size());
    for (long long c : coords) coords_.emplace_back(c);
  }

  static LatticePoint zero(int dim) {
    return LatticePoint(std::vector<Int>(static_cast<std::size_t>(dim)));
  }
  /// alpha * e_{index} (0-based index).
  static LatticePoint axis(int dim, int index, const Int& value);

  int dim() const { return static_cast<int>(coords_.size()); }
  const Int& operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  Int& operator[](int i) { return coords_[static_cast<std::size_t>(i)]; }
  const std::vector<Int>& coords() const { return coords_; }

  Int coordinate_sum() const;
  bool is_nonnegative() const;
  bool is_zero() const;

  LatticePoint& operator+=(const LatticePoint& o);
  LatticePoint& operator-=(const LatticePoint& o);

  friend LatticePoint operator+(LatticePoint a, const LatticePoint& b) { return a += b; }
  friend LatticePoint operator-(LatticePoint a, const LatticePoint& b) { return a -= b; }
  friend bool operator==(const LatticePoint& a, const LatticePoint& b) {
    return a.coords_ == b.coords_;
  }
  friend bool operator!=(const LatticePoint& a, const LatticePoint& b) { return !(a == b); }
  /// Lexicographic order; used only to fix deterministic output orders.
  friend bool operator<(const LatticePoint& a, const LatticePoint& b) {
    return a.coords_ < b.coords_;
  }

  std::string str() const;

 private:
  std::vector<Int> coords_;
};

struct LatticePointHash {
  std::size_t operator()(const LatticePoint& p) const {
    std::size_t h = 0;
    for (const Int& c : p.coords()) boost::hash_combine(h, c);
    return h;
  }
};

/// a >= b componentwise.
bool dominates(const LatticePoint& a, const LatticePoint& b);
LatticePoint componentwise_min(const LatticePoint& a, const LatticePoint& b);

/// (sum of coordinates) / alpha as an exact rational.
Rational degree(const LatticePoint& x, const Int& alpha);
/// Componentwise value mod alpha, normalized into [0, alpha).
LatticePoint residue(const LatticePoint& x, const Int& alpha);

struct ValidationIssue {
  std::string code;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> violations;
  std::vector<ValidationIssue> warnings;

  bool valid() const { return violations.empty(); }
  bool gcd_warning() const;
};

/// Generating data of a homogeneous simplicial affine semigroup
/// B = <e_1, ..., e_d, a_1, ..., a_c>, where e_i = alpha * (i-th unit
/// vector) and the extras a_j have nonnegative coordinates summing to
/// alpha. Construction never validates; call validate() and check the
/// report before trusting any computation.
///
/// Membership queries are memoized; the cache is shared between copies
/// and is safe for concurrent use.
class SemigroupPresentation {
 public:
  SemigroupPresentation(int d, Int alpha, std::vector<LatticePoint> extras);

  int dim() const { return d_; }
  const Int& alpha() const { return alpha_; }
  int codim() const { return static_cast<int>(extras_.size()); }
  const std::vector<LatticePoint>& extras() const { return extras_; }
  /// e_1, ..., e_d followed by a_1, ..., a_c.
  const std::vector<LatticePoint>& generators() const { return generators_; }
  const LatticePoint& axis_generator(int i) const {
    return generators_[static_cast<std::size_t>(i)];
  }

  ValidationReport validate() const;

  /// Membership in B. Degree-descending memoized search: x lies in B iff
  /// x is in A = <e_1..e_d> (all coordinates divisible by alpha), or some
  /// extra a satisfies x - a >= 0 and x - a in B. Non-integer degree is
  /// immediately false.
  bool contains(const LatticePoint& x) const;

  /// Number of equivalence classes f: the order of the subgroup of
  /// (Z/alpha)^d generated by the residues of the extras.
  Int class_count() const;

  LatticePoint residue_point(const LatticePoint& x) const { return residue(x, alpha_); }
  /// Injective encoding of residue_point(x) into 64 bits.
  std::uint64_t residue_code(const LatticePoint& x) const;
  bool equivalent(const LatticePoint& x, const LatticePoint& y) const;

  /// Coordinate sum divided by alpha; throws if x has non-integer degree.
  Int integral_degree(const LatticePoint& x) const;

 private:
  struct State;

  bool member_impl(const LatticePoint& x) const;

  int d_ = 0;
  Int alpha_ = 0;
  std::vector<LatticePoint> extras_;
  std::vector<LatticePoint> generators_;
  bool codes_ok_ = false;
  std::shared_ptr<State> state_;
};

}  // namespace semreg
