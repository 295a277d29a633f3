#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "idealab/linalg.hpp"

namespace idealab {

// Simplicial complex on vertex set {0, ..., n-1}, stored by facets (vertex
// bitmasks). Two degenerate values are distinct and both representable:
// the void complex (no faces at all) and the irrelevant complex {∅}.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  static SimplicialComplex voidComplex(int n) { return SimplicialComplex(n, {}); }
  static SimplicialComplex irrelevantComplex(int n) { return SimplicialComplex(n, {0}); }
  static SimplicialComplex fullSimplex(int n) {
    checkVertexCount(n);
    return SimplicialComplex(n, {n == 0 ? 0 : (std::uint64_t(1) << n) - 1});
  }
  static SimplicialComplex fromFacets(int n, std::vector<std::uint64_t> facets) {
    return fromFaces(n, facets);
  }
  // Keeps the maximal faces; any face list yields a canonical complex.
  static SimplicialComplex fromFaces(int n, const std::vector<std::uint64_t>& faces) {
    checkVertexCount(n);
    for (auto f : faces)
      if (n < 64 && (f >> n) != 0) throw std::invalid_argument("face outside vertex set");
    std::vector<std::uint64_t> maximal;
    for (auto f : faces) {
      bool dominated = false;
      for (auto g : faces)
        if (f != g && (f & ~g) == 0) {
          dominated = true;
          break;
        }
      if (!dominated) maximal.push_back(f);
    }
    std::sort(maximal.begin(), maximal.end());
    maximal.erase(std::unique(maximal.begin(), maximal.end()), maximal.end());
    return SimplicialComplex(n, std::move(maximal));
  }

  int vertexCount() const { return n_; }
  const std::vector<std::uint64_t>& facets() const { return facets_; }
  bool isVoid() const { return facets_.empty(); }

  bool isFace(std::uint64_t f) const {
    for (auto g : facets_)
      if ((f & ~g) == 0) return true;
    return false;
  }

  // -2 for the void complex, -1 for {∅}.
  int dimension() const {
    if (isVoid()) return -2;
    int d = -1;
    for (auto f : facets_) d = std::max(d, __builtin_popcountll(f) - 1);
    return d;
  }

  // All faces including the empty face (absent only on the void complex).
  std::vector<std::uint64_t> allFaces() const {
    std::unordered_set<std::uint64_t> seen;
    for (auto f : facets_) {
      if (__builtin_popcountll(f) > 25) throw std::runtime_error("complex too large to expand");
      // submask enumeration
      std::uint64_t s = f;
      while (true) {
        seen.insert(s);
        if (s == 0) break;
        s = (s - 1) & f;
      }
    }
    std::vector<std::uint64_t> faces(seen.begin(), seen.end());
    std::sort(faces.begin(), faces.end());
    return faces;
  }

  bool operator==(const SimplicialComplex& o) const {
    return n_ == o.n_ && facets_ == o.facets_;
  }
  bool operator!=(const SimplicialComplex& o) const { return !(*this == o); }

 private:
  SimplicialComplex(int n, std::vector<std::uint64_t> facets) : n_(n), facets_(std::move(facets)) {
    checkVertexCount(n);
    std::sort(facets_.begin(), facets_.end());
  }
  static void checkVertexCount(int n) {
    if (n < 0 || n > 63) throw std::invalid_argument("vertex count out of supported range");
  }
  int n_ = 0;
  std::vector<std::uint64_t> facets_;
};

// Rank of the i-th reduced homology over the field, via exact ranks of the
// augmented boundary matrices. The empty face sits in dimension -1, so
// H~_{-1}({∅}) has rank 1 and the void complex has no homology at all.
inline long reducedHomologyRank(const SimplicialComplex& cx, long i, const Field& field) {
  if (cx.isVoid()) return 0;
  const int dim = cx.dimension();
  if (i < -1 || i > dim) return 0;
  auto faces = cx.allFaces();
  // group faces by dimension: bucket d holds faces with popcount d+1
  std::vector<std::vector<std::uint64_t>> byDim(static_cast<std::size_t>(dim + 2));
  for (auto f : faces) byDim[static_cast<std::size_t>(__builtin_popcountll(f))].push_back(f);

  auto boundaryRank = [&](long d) -> long {
    // rank of ∂_d : C_d -> C_{d-1}
    if (d < 0 || d > dim) return 0;
    const auto& cols = byDim[static_cast<std::size_t>(d + 1)];
    const auto& rows = byDim[static_cast<std::size_t>(d)];
    if (cols.empty() || rows.empty()) return 0;
    std::vector<std::vector<long>> m(rows.size(), std::vector<long>(cols.size(), 0));
    for (std::size_t c = 0; c < cols.size(); ++c) {
      std::uint64_t face = cols[c];
      int pos = 0;
      for (std::uint64_t bits = face; bits != 0; bits &= bits - 1, ++pos) {
        std::uint64_t child = face ^ (bits & -bits);
        auto it = std::lower_bound(rows.begin(), rows.end(), child);
        m[static_cast<std::size_t>(it - rows.begin())][c] = (pos % 2 == 0) ? 1 : -1;
      }
    }
    return rankOverField(m, field);
  };

  const long dimCi = static_cast<long>(byDim[static_cast<std::size_t>(i + 1)].size());
  return dimCi - boundaryRank(i) - boundaryRank(i + 1);
}

}  // namespace idealab
