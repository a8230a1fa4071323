#include "semreg/exact_linalg.hpp"

#include <stdexcept>
#include <utility>

#include "semreg/errors.hpp"

namespace semreg {

namespace {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t i = 3; i * i <= n; i += 2)
    if (n % i == 0) return false;
  return true;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  unsigned __int128 result = 1, b = base % p;
  while (exp) {
    if (exp & 1) result = result * b % p;
    b = b * b % p;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

}  // namespace

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
  if (p >= (1ull << 31)) throw std::invalid_argument("prime too large");
  FieldSpec f;
  f.kind = Kind::PrimeField;
  f.prime = p;
  return f;
}

std::string FieldSpec::name() const {
  return kind == Kind::Rationals ? "q" : "fp:" + std::to_string(prime);
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.rfind("fp:", 0) == 0) {
    return prime_field(std::stoull(text.substr(3)));
  }
  throw std::invalid_argument("unknown field spec '" + text + "' (expected q or fp:P)");
}

int rational_rank(IntMatrix m) {
  if (m.empty() || m[0].empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  Int prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Int t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        if (t % prev != 0)
          throw ConsistencyError("inexact division in fraction-free elimination");
        m[i][j] = t / prev;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

int prime_rank(const IntMatrix& m, std::uint64_t p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
  if (m.empty() || m[0].empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
  const Int pi(p);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      Int v = m[i][j] % pi;
      if (v < 0) v += pi;
      a[i][j] = static_cast<std::uint64_t>(v);
    }
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const std::uint64_t inv = mod_pow(a[r][c], p - 2, p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      const std::uint64_t factor = static_cast<std::uint64_t>(
          (unsigned __int128)a[i][c] * inv % p);
      for (std::size_t j = c; j < cols; ++j) {
        unsigned __int128 sub = (unsigned __int128)factor * a[r][j] % p;
        a[i][j] = (a[i][j] + p - static_cast<std::uint64_t>(sub)) % p;
      }
    }
    ++r;
  }
  return static_cast<int>(r);
}

int matrix_rank(IntMatrix m, const FieldSpec& field) {
  if (field.kind == FieldSpec::Kind::Rationals) return rational_rank(std::move(m));
  return prime_rank(m, field.prime);
}

}  // namespace semreg
