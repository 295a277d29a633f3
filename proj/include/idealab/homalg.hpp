#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "idealab/linalg.hpp"
#include "idealab/modules.hpp"
#include "idealab/newton.hpp"
#include "idealab/simplicial.hpp"

namespace idealab {

// CS(alpha) = { i : alpha_i < 0 }.
inline VariableSet cosupport(const MultiDegree& alpha) {
  std::uint64_t bits = 0;
  if (alpha.arity() > 64) throw std::invalid_argument("cosupport limited to 64 variables");
  for (int i = 0; i < alpha.arity(); ++i)
    if (alpha[i] < 0) bits |= std::uint64_t(1) << i;
  return VariableSet(alpha.arity(), bits);
}

// Degree complex of Takayama's formula:
//   faces F in [n] \ CS(alpha) with x^alpha not in I * S_{F union CS(alpha)},
// where membership in the localized module means some generator g has
// g_i <= alpha_i for every i outside F union CS(alpha).
inline SimplicialComplex degreeComplex(const MonomialIdeal& I, const MultiDegree& alpha) {
  if (I.isZero() || I.isUnit())
    throw std::invalid_argument("degreeComplex requires a proper nonzero ideal");
  if (I.arity() != alpha.arity()) throw std::invalid_argument("degreeComplex: arity mismatch");
  const int n = I.arity();
  if (n > 24) throw std::invalid_argument("degreeComplex limited to 24 variables");
  const std::uint64_t cs = cosupport(alpha).bits();
  const std::uint64_t free = ((n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1)) & ~cs;
  // A generator g rules out F exactly when {i : g_i > alpha_i} \ CS <= F.
  std::vector<std::uint64_t> killers;
  for (const auto& g : I.generators()) {
    std::uint64_t need = 0;
    for (int i = 0; i < n; ++i)
      if (g[i] > alpha[i]) need |= std::uint64_t(1) << i;
    killers.push_back(need & ~cs);
  }
  std::vector<std::uint64_t> faces;
  std::uint64_t f = free;
  while (true) {  // all submasks of `free`, including 0
    bool killed = false;
    for (auto k : killers)
      if ((k & ~f) == 0) {
        killed = true;
        break;
      }
    if (!killed) faces.push_back(f);
    if (f == 0) break;
    f = (f - 1) & free;
  }
  return SimplicialComplex::fromFaces(n, faces);
}

// Takayama's degree-by-degree local cohomology dimension:
//   dim_K H_m^i(S/I)_alpha = rank H~_{i - |CS(alpha)| - 1}(degreeComplex(I, alpha)).
inline long takayamaRank(const MonomialIdeal& I, long i, const MultiDegree& alpha,
                         const Field& field) {
  long cs = cosupport(alpha).size();
  return reducedHomologyRank(degreeComplex(I, alpha), i - cs - 1, field);
}

// Multigraded Betti ranks: (homological index, multidegree) -> rank.
struct BettiTable {
  std::map<std::pair<long, std::vector<long>>, long> ranks;

  std::string toCsv() const {
    std::ostringstream os;
    std::size_t n = ranks.empty() ? 0 : ranks.begin()->first.second.size();
    os << "i";
    for (std::size_t j = 1; j <= n; ++j) os << ",a" << j;
    os << ",rank\n";
    for (const auto& [key, r] : ranks) {
      os << key.first;
      for (long a : key.second) os << "," << a;
      os << "," << r << "\n";
    }
    return os.str();
  }
};

struct DepthResult {
  long depth = 0;
  long pd = 0;
  BettiTable table;
};

namespace detail {

// Homology ranks of the Koszul complex tensored with M in one multidegree,
// from a 2^n table of basis values at alpha - e_F. The all-absent cube is
// zero and the all-present cube is the chain complex of a full simplex, so
// both are skipped by callers.
struct KoszulCube {
  int n;
  std::vector<char> active;  // indexed by subset mask

  bool allZero() const {
    for (char c : active)
      if (c) return false;
    return true;
  }
  bool allOne() const {
    for (char c : active)
      if (!c) return false;
    return true;
  }

  // rank of the boundary map from size-i subsets to size-(i-1) subsets
  long boundaryRank(long i, const Field& field) const {
    if (i < 1 || i > n) return 0;
    std::vector<std::uint32_t> cols, rows;
    for (std::uint32_t m = 0; m < active.size(); ++m) {
      if (!active[m]) continue;
      int pc = __builtin_popcount(m);
      if (pc == i) cols.push_back(m);
      else if (pc == i - 1) rows.push_back(m);
    }
    if (cols.empty() || rows.empty()) return 0;
    std::vector<std::vector<long>> mat(rows.size(), std::vector<long>(cols.size(), 0));
    for (std::size_t c = 0; c < cols.size(); ++c) {
      std::uint32_t fmask = cols[c];
      int pos = 0;
      for (std::uint32_t bits = fmask; bits != 0; bits &= bits - 1, ++pos) {
        std::uint32_t child = fmask ^ (bits & -bits);
        if (!active[child]) continue;
        auto it = std::lower_bound(rows.begin(), rows.end(), child);
        mat[static_cast<std::size_t>(it - rows.begin())][c] = (pos % 2 == 0) ? 1 : -1;
      }
    }
    return rankOverField(mat, field);
  }

  long dimAt(long i) const {
    long d = 0;
    for (std::uint32_t m = 0; m < active.size(); ++m)
      if (active[m] && __builtin_popcount(m) == i) ++d;
    return d;
  }
};

}  // namespace detail

// Homology of the Koszul complex on all n variables tensored with M, in one
// multidegree; H_i nonzero somewhere exactly up to pd(M). Works at any
// alpha, including outside the lcm box (used by the shell-bound checks).
inline long koszulHomologyRank(const MultigradedModule& M, long i, const MultiDegree& alpha,
                               const Field& field) {
  const int n = M.arity();
  if (n > 16) throw std::invalid_argument("koszul computations limited to 16 variables");
  if (i < 0 || i > n) return 0;
  detail::KoszulCube cube{n, std::vector<char>(std::size_t(1) << n, 0)};
  for (std::uint32_t fmask = 0; fmask < cube.active.size(); ++fmask) {
    MultiDegree beta = alpha;
    for (int j = 0; j < n; ++j)
      if ((fmask >> j) & 1u) beta[j] -= 1;
    cube.active[fmask] = M.basisAt(beta) ? 1 : 0;
  }
  if (cube.allZero() || cube.allOne()) return 0;
  return cube.dimAt(i) - cube.boundaryRank(i, field) - cube.boundaryRank(i + 1, field);
}

// depth and projective dimension via Koszul homology over the degree box
// [0, lcm], with depth = n - pd (Auslander-Buchsbaum).
inline DepthResult bettiDepth(const MultigradedModule& M, const Field& field) {
  if (M.isZero())
    throw std::invalid_argument("depth of the zero module is infinite by convention");
  const int n = M.arity();
  if (n > 16) throw std::invalid_argument("koszul computations limited to 16 variables");
  if (n == 0) {  // the module is a nonzero K-vector space
    DepthResult out;
    out.table.ranks[{0, {}}] = 1;
    return out;
  }
  std::vector<long> dims = M.degreeBound().toLongs();
  boxCellCount(dims, 20'000'000);
  auto strides = detail::gridStrides(dims);
  std::vector<char> basis = detail::basisGrid(M, dims, strides);

  DepthResult out;
  out.pd = -1;
  detail::KoszulCube cube{n, std::vector<char>(std::size_t(1) << n, 0)};
  std::size_t idx = 0;
  scanBox(dims, [&](const std::vector<long>& alpha) {
    const std::size_t at = idx++;
    for (std::uint32_t fmask = 0; fmask < cube.active.size(); ++fmask) {
      bool ok = true;
      std::size_t shifted = at;
      for (int j = 0; j < n && ok; ++j) {
        if (!((fmask >> j) & 1u)) continue;
        if (alpha[static_cast<std::size_t>(j)] == 0) ok = false;
        else shifted -= strides[static_cast<std::size_t>(j)];
      }
      cube.active[fmask] = (ok && basis[shifted]) ? 1 : 0;
    }
    if (cube.allZero() || cube.allOne()) return;
    long prevRank = cube.boundaryRank(1, field);
    long dim0 = cube.dimAt(0);
    if (dim0 - prevRank > 0) {
      out.table.ranks[{0, alpha}] = dim0 - prevRank;
      out.pd = std::max(out.pd, 0l);
    }
    for (long i = 1; i <= n; ++i) {
      long nextRank = cube.boundaryRank(i + 1, field);
      long h = cube.dimAt(i) - prevRank - nextRank;
      if (h > 0) {
        out.table.ranks[{i, alpha}] = h;
        out.pd = std::max(out.pd, i);
      }
      prevRank = nextRank;
    }
  });
  if (out.pd < 0)
    throw std::logic_error("no Koszul homology found for a nonzero module");
  out.depth = n - out.pd;
  return out;
}

enum class PowerVariant { Powers, Closures, SuccessiveQuotients, ClosureSuccessiveQuotients };

inline const char* powerVariantName(PowerVariant v) {
  switch (v) {
    case PowerVariant::Powers: return "powers";
    case PowerVariant::Closures: return "closures";
    case PowerVariant::SuccessiveQuotients: return "successiveQuotients";
    case PowerVariant::ClosureSuccessiveQuotients: return "closureSuccessiveQuotients";
  }
  return "?";
}

// depth(S/I^k), depth(S/closure(I^k)), depth(I^k/I^{k+1}) or the closure
// analogue, for k = 1..kmax; the successive-quotient variants start at k = 0
// with S/I resp. S/closure(I).
inline std::vector<long> depthSequence(const MonomialIdeal& I, long kmax, PowerVariant variant,
                                       const Field& field) {
  if (I.isZero() || I.isUnit())
    throw std::invalid_argument("depthSequence requires a proper nonzero ideal");
  if (kmax < 1) throw std::invalid_argument("depthSequence: kmax must be positive");
  std::vector<long> out;
  switch (variant) {
    case PowerVariant::Powers:
      for (long k = 1; k <= kmax; ++k)
        out.push_back(bettiDepth(MultigradedModule::quotientRing(power(I, k)), field).depth);
      break;
    case PowerVariant::Closures: {
      NewtonPolyhedron np(I);
      for (long k = 1; k <= kmax; ++k)
        out.push_back(
            bettiDepth(MultigradedModule::quotientRing(integralClosurePower(np, k)), field).depth);
      break;
    }
    case PowerVariant::SuccessiveQuotients: {
      out.push_back(bettiDepth(MultigradedModule::quotientRing(I), field).depth);
      for (long k = 1; k <= kmax; ++k)
        out.push_back(
            bettiDepth(MultigradedModule::idealQuotient(power(I, k), power(I, k + 1)), field).depth);
      break;
    }
    case PowerVariant::ClosureSuccessiveQuotients: {
      NewtonPolyhedron np(I);
      std::vector<MonomialIdeal> cl;
      for (long k = 1; k <= kmax + 1; ++k) cl.push_back(integralClosurePower(np, k));
      out.push_back(bettiDepth(MultigradedModule::quotientRing(cl[0]), field).depth);
      for (long k = 1; k <= kmax; ++k)
        out.push_back(bettiDepth(MultigradedModule::idealQuotient(
                                     cl[static_cast<std::size_t>(k - 1)], cl[static_cast<std::size_t>(k)]),
                                 field)
                          .depth);
      break;
    }
  }
  return out;
}

}  // namespace idealab
