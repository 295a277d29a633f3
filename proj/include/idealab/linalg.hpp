#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "idealab/arith.hpp"

namespace idealab {

// Coefficient field: the rationals (default) or a prime field F_p.
struct Field {
  bool rational = true;
  unsigned long p = 0;

  static Field rationals() { return Field{}; }
  static Field prime(unsigned long p) {
    if (p < 2) throw std::invalid_argument("field characteristic must be at least 2");
    for (unsigned long d = 2; d * d <= p; ++d)
      if (p % d == 0) throw std::invalid_argument("field characteristic must be prime");
    if (p > (1ul << 31)) throw std::invalid_argument("prime field characteristic too large");
    return Field{false, p};
  }
  // "q" or "fp:<p>"
  static Field parse(const std::string& s) {
    if (s == "q" || s == "Q") return rationals();
    if (s.rfind("fp:", 0) == 0) return prime(std::stoul(s.substr(3)));
    throw std::invalid_argument("unknown field spec '" + s + "' (expected q or fp:<p>)");
  }
  std::string str() const { return rational ? "q" : "fp:" + std::to_string(p); }
  bool operator==(const Field& o) const { return rational == o.rational && p == o.p; }
};

namespace detail {

inline long rankModP(std::vector<std::vector<long>> m, unsigned long p) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  const long lp = static_cast<long>(p);
  for (auto& row : m)
    for (auto& x : row) {
      x %= lp;
      if (x < 0) x += lp;
    }
  auto inverseMod = [&](long a) {
    long t = 0, newT = 1, r = lp, newR = a;
    while (newR != 0) {
      long q = r / newR;
      long tmp = t - q * newT;
      t = newT;
      newT = tmp;
      tmp = r - q * newR;
      r = newR;
      newR = tmp;
    }
    if (t < 0) t += lp;
    return t;
  };
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    const long inv = inverseMod(m[rank][col]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (m[i][col] == 0) continue;
      long f = static_cast<long>((static_cast<__int128>(m[i][col]) * inv) % lp);
      for (std::size_t j = col; j < cols; ++j) {
        __int128 v = static_cast<__int128>(m[i][j]) - static_cast<__int128>(f) * m[rank][j];
        long red = static_cast<long>(v % lp);
        if (red < 0) red += lp;
        m[i][j] = red;
      }
    }
    ++rank;
  }
  return static_cast<long>(rank);
}

// Fraction-free (Bareiss) elimination over Z; exact rank over Q.
inline long rankBareissInt(std::vector<std::vector<Int>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  Int prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    const Int& pivot = m[rank][col];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        Int num = m[i][j] * pivot - m[i][col] * m[rank][j];
        mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][col] = 0;
    }
    prev = pivot;
    ++rank;
  }
  return static_cast<long>(rank);
}

struct Int64Overflow {};

// Same elimination on machine words; throws Int64Overflow when an entry
// leaves the safe range, at which point the caller retries with Int.
inline long rankBareissLong(std::vector<std::vector<long>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  constexpr long kLimit = (1l << 62);
  long prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    const long pivot = m[rank][col];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        __int128 num = static_cast<__int128>(m[i][j]) * pivot -
                       static_cast<__int128>(m[i][col]) * m[rank][j];
        __int128 q = num / prev;  // exact by Bareiss
        if (q > kLimit || q < -kLimit) throw Int64Overflow{};
        m[i][j] = static_cast<long>(q);
      }
      m[i][col] = 0;
    }
    prev = pivot;
    ++rank;
  }
  return static_cast<long>(rank);
}

}  // namespace detail

inline long rankOverField(const std::vector<std::vector<Int>>& m, const Field& field) {
  if (field.rational) return detail::rankBareissInt(m);
  std::vector<std::vector<long>> red(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    red[i].reserve(m[i].size());
    for (const Int& x : m[i]) {
      Int r = x % static_cast<long>(field.p);
      red[i].push_back(toLong(r));
    }
  }
  return detail::rankModP(std::move(red), field.p);
}

// Fast path for small integer matrices (boundary maps, Koszul blocks).
inline long rankOverField(const std::vector<std::vector<long>>& m, const Field& field) {
  if (!field.rational) return detail::rankModP(m, field.p);
  try {
    return detail::rankBareissLong(m);
  } catch (const detail::Int64Overflow&) {
    std::vector<std::vector<Int>> big(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      big[i].reserve(m[i].size());
      for (long x : m[i]) big[i].emplace_back(x);
    }
    return detail::rankBareissInt(std::move(big));
  }
}

}  // namespace idealab
