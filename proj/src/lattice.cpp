#include "semreg/lattice.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include <boost/integer/common_factor.hpp>

#include "semreg/errors.hpp"

namespace semreg {

LatticePoint LatticePoint::axis(int dim, int index, const Int& value) {
  LatticePoint p = zero(dim);
  p[index] = value;
  return p;
}

Int LatticePoint::coordinate_sum() const {
  Int s = 0;
  for (const Int& c : coords_) s += c;
  return s;
}

bool LatticePoint::is_nonnegative() const {
  for (const Int& c : coords_)
    if (c < 0) return false;
  return true;
}

bool LatticePoint::is_zero() const {
  for (const Int& c : coords_)
    if (c != 0) return false;
  return true;
}

LatticePoint& LatticePoint::operator+=(const LatticePoint& o) {
  if (coords_.size() != o.coords_.size())
    throw std::invalid_argument("lattice points of different dimension");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

LatticePoint& LatticePoint::operator-=(const LatticePoint& o) {
  if (coords_.size() != o.coords_.size())
    throw std::invalid_argument("lattice points of different dimension");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

std::string LatticePoint::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ',';
    os << coords_[i];
  }
  os << ')';
  return os.str();
}

bool dominates(const LatticePoint& a, const LatticePoint& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  for (int i = 0; i < a.dim(); ++i)
    if (a[i] < b[i]) return false;
  return true;
}

LatticePoint componentwise_min(const LatticePoint& a, const LatticePoint& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  std::vector<Int> m(static_cast<std::size_t>(a.dim()));
  for (int i = 0; i < a.dim(); ++i) m[static_cast<std::size_t>(i)] = std::min(a[i], b[i]);
  return LatticePoint(std::move(m));
}

Rational degree(const LatticePoint& x, const Int& alpha) {
  if (alpha <= 0) throw std::invalid_argument("alpha must be positive");
  return Rational(x.coordinate_sum(), alpha);
}

LatticePoint residue(const LatticePoint& x, const Int& alpha) {
  if (alpha <= 0) throw std::invalid_argument("alpha must be positive");
  std::vector<Int> r(x.coords());
  for (Int& c : r) {
    c %= alpha;
    if (c < 0) c += alpha;
  }
  return LatticePoint(std::move(r));
}

bool ValidationReport::gcd_warning() const {
  for (const auto& w : warnings)
    if (w.code == "gcd") return true;
  return false;
}

struct SemigroupPresentation::State {
  std::unordered_map<LatticePoint, bool, LatticePointHash> memo;
  mutable std::shared_mutex memo_mutex;
  std::once_flag class_count_flag;
  Int class_count = 0;
};

SemigroupPresentation::SemigroupPresentation(int d, Int alpha,
                                             std::vector<LatticePoint> extras)
    : d_(d), alpha_(std::move(alpha)), extras_(std::move(extras)),
      state_(std::make_shared<State>()) {
  generators_.reserve(static_cast<std::size_t>(d_) + extras_.size());
  for (int i = 0; i < d_; ++i) generators_.push_back(LatticePoint::axis(d_, i, alpha_));
  for (const auto& a : extras_) generators_.push_back(a);
  if (d_ >= 1 && alpha_ >= 1) {
    // residue codes fit in 64 bits only when alpha^d does
    Int bound = 1;
    for (int i = 0; i < d_; ++i) bound *= alpha_;
    codes_ok_ = bound < (Int(1) << 62);
  }
}

ValidationReport SemigroupPresentation::validate() const {
  ValidationReport r;
  if (d_ < 2)
    r.violations.push_back({"dimension", "ambient dimension d must be at least 2"});
  if (alpha_ < 1)
    r.violations.push_back({"alpha", "alpha must be a positive integer"});
  if (extras_.empty())
    r.violations.push_back({"codim", "at least one non-axis generator is required (c >= 1)"});
  if (d_ < 1 || alpha_ < 1) return r;

  bool shapes_ok = true;
  for (std::size_t i = 0; i < extras_.size(); ++i) {
    const LatticePoint& a = extras_[i];
    const std::string tag = "generator " + std::to_string(i + 1);
    if (a.dim() != d_) {
      r.violations.push_back({"dimension", tag + " has wrong dimension"});
      shapes_ok = false;
      continue;
    }
    if (!a.is_nonnegative()) {
      r.violations.push_back({"negative-coordinate", tag + " " + a.str() + " has a negative coordinate"});
      shapes_ok = false;
      continue;
    }
    if (a.coordinate_sum() != alpha_) {
      r.violations.push_back({"degree", tag + " " + a.str() + " has coordinate sum != alpha"});
      shapes_ok = false;
      continue;
    }
    for (int k = 0; k < d_; ++k) {
      if (a[k] == alpha_) {
        r.violations.push_back({"axis-generator", tag + " " + a.str() + " equals an axis generator"});
        break;
      }
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (extras_[j] == a) {
        r.violations.push_back({"duplicate", tag + " " + a.str() + " is repeated"});
        break;
      }
    }
  }

  if (shapes_ok && !extras_.empty()) {
    // relative primality of all generator coordinates (equivalently,
    // including alpha); violation leaves every computation well defined,
    // so it is a warning only
    Int g = alpha_;
    for (const auto& a : extras_)
      for (const Int& c : a.coords()) g = boost::integer::gcd(g, c);
    if (g > 1)
      r.warnings.push_back({"gcd", "generator coordinates share the common factor " + g.str()});
  }
  return r;
}

bool SemigroupPresentation::contains(const LatticePoint& x) const {
  if (x.dim() != d_) throw std::invalid_argument("point has wrong dimension");
  if (!x.is_nonnegative()) return false;
  if (x.coordinate_sum() % alpha_ != 0) return false;
  return member_impl(x);
}

bool SemigroupPresentation::member_impl(const LatticePoint& x) const {
  bool in_A = true;
  for (const Int& c : x.coords()) {
    if (c % alpha_ != 0) {
      in_A = false;
      break;
    }
  }
  if (in_A) return true;

  {
    std::shared_lock lock(state_->memo_mutex);
    auto it = state_->memo.find(x);
    if (it != state_->memo.end()) return it->second;
  }

  bool result = false;
  for (const auto& a : extras_) {
    LatticePoint y = x - a;
    if (y.is_nonnegative() && member_impl(y)) {
      result = true;
      break;
    }
  }

  {
    std::unique_lock lock(state_->memo_mutex);
    state_->memo.emplace(x, result);
  }
  return result;
}

Int SemigroupPresentation::class_count() const {
  std::call_once(state_->class_count_flag, [this] {
    std::unordered_set<std::uint64_t> seen;
    std::queue<LatticePoint> todo;
    LatticePoint z = LatticePoint::zero(d_);
    seen.insert(residue_code(z));
    todo.push(z);
    std::vector<LatticePoint> gens;
    gens.reserve(extras_.size());
    for (const auto& a : extras_) gens.push_back(residue_point(a));
    while (!todo.empty()) {
      LatticePoint v = todo.front();
      todo.pop();
      for (const auto& g : gens) {
        LatticePoint w = residue_point(v + g);
        if (seen.insert(residue_code(w)).second) todo.push(w);
      }
    }
    state_->class_count = Int(seen.size());
  });
  return state_->class_count;
}

std::uint64_t SemigroupPresentation::residue_code(const LatticePoint& x) const {
  if (!codes_ok_)
    throw TooLargeError("alpha^d exceeds the residue encoding range");
  const std::uint64_t a = static_cast<std::uint64_t>(alpha_);
  std::uint64_t code = 0;
  for (const Int& c : x.coords()) {
    Int r = c % alpha_;
    if (r < 0) r += alpha_;
    code = code * a + static_cast<std::uint64_t>(r);
  }
  return code;
}

bool SemigroupPresentation::equivalent(const LatticePoint& x, const LatticePoint& y) const {
  return residue_code(x) == residue_code(y);
}

Int SemigroupPresentation::integral_degree(const LatticePoint& x) const {
  Int s = x.coordinate_sum();
  if (s % alpha_ != 0)
    throw std::invalid_argument("point " + x.str() + " has non-integer degree");
  return s / alpha_;
}

}  // namespace semreg
