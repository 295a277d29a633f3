#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "json.hpp"

#include "idealab/modules.hpp"

namespace idealab {

// Finite poset of the characteristic-poset method: all exponent vectors in
// [0, g] whose monomials are K-basis elements of the module, with
// g = componentwise lcm of the participating generators. Interval partitions
// of this poset compute the Stanley depth.
class CharacteristicPoset {
 public:
  explicit CharacteristicPoset(const MultigradedModule& M) : module_(M) {
    cap_ = M.degreeBound().toLongs();
    boxCellCount(cap_, 5'000'000);
    strides_ = detail::gridStrides(cap_);
    members_ = detail::basisGrid(M, cap_, strides_);
    count_ = 0;
    for (char c : members_) count_ += c ? 1 : 0;
  }

  const MultigradedModule& module() const { return module_; }
  int arity() const { return static_cast<int>(cap_.size()); }
  const std::vector<long>& cap() const { return cap_; }
  const std::vector<std::size_t>& strides() const { return strides_; }
  std::size_t gridSize() const { return members_.size(); }
  std::size_t elementCount() const { return count_; }
  bool member(std::size_t idx) const { return members_[idx]; }

  std::size_t indexOf(const std::vector<long>& pt) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < cap_.size(); ++i)
      idx += static_cast<std::size_t>(pt[i]) * strides_[i];
    return idx;
  }
  std::vector<long> pointAt(std::size_t idx) const {
    std::vector<long> pt(cap_.size());
    for (std::size_t i = 0; i < cap_.size(); ++i) {
      pt[i] = static_cast<long>(idx / strides_[i]);
      idx %= strides_[i];
    }
    return pt;
  }

 private:
  MultigradedModule module_;
  std::vector<long> cap_;
  std::vector<std::size_t> strides_;
  std::vector<char> members_;
  std::size_t count_;
};

inline CharacteristicPoset characteristicPoset(ModuleKind kind, const MonomialIdeal& I,
                                               const std::optional<MonomialIdeal>& J = std::nullopt) {
  switch (kind) {
    case ModuleKind::QuotientRing: return CharacteristicPoset(MultigradedModule::quotientRing(I));
    case ModuleKind::Ideal: return CharacteristicPoset(MultigradedModule::ideal(I));
    case ModuleKind::IdealQuotient:
      if (!J) throw std::invalid_argument("idealQuotient poset needs a second ideal");
      return CharacteristicPoset(MultigradedModule::idealQuotient(I, *J));
  }
  throw std::invalid_argument("unknown module kind");
}

struct Interval {
  ExponentVector lower;
  ExponentVector upper;
};

struct IntervalPartition {
  std::vector<Interval> intervals;
  // min over intervals of the number of coordinates pinned at the cap
  long value(const ExponentVector& cap) const {
    long best = std::numeric_limits<long>::max();
    for (const auto& iv : intervals) {
      long caps = 0;
      for (int i = 0; i < cap.arity(); ++i)
        if (iv.upper[i] == cap[i]) ++caps;
      best = std::min(best, caps);
    }
    return best;
  }
};

enum class DecisionStatus { True, False, Undecided };

struct SearchBudget {
  unsigned long long maxNodes = 50'000'000ull;
};

struct DecisionResult {
  DecisionStatus status = DecisionStatus::Undecided;
  std::optional<IntervalPartition> certificate;
  unsigned long long nodes = 0;
};

namespace detail {

struct BudgetExhausted {};

struct Hash128 {
  std::size_t operator()(unsigned __int128 v) const {
    return static_cast<std::size_t>(static_cast<std::uint64_t>(v) ^
                                    static_cast<std::uint64_t>(v >> 64) * 0x9e3779b97f4a7c15ull);
  }
};

// Backtracking interval-partition search. Elements are processed in
// (total degree, lex) order, so the first uncovered element is always the
// lower corner of its interval. Candidate uppers are tried from the most
// capped coordinates and largest boxes downward: first the maximal valid
// boxes found by conflict-driven shrinking, then (rarely) everything else.
// Failed covered-states are memoized by 128-bit Zobrist hash.
//
// Box validity never scans cells. The basis sets of all three module kinds
// are cut out by upward-closed ideals, so "box inside the poset" reduces to
// a generator test, and "box disjoint from the covered region" is a box-vs-
// box test against the current partial partition.
class PartitionSearch {
 public:
  PartitionSearch(const CharacteristicPoset& poset, int k, const SearchBudget& budget)
      : P(poset), n(poset.arity()), k(k), cap(poset.cap()), strides(poset.strides()),
        covered(poset.gridSize(), 0), maxNodes(budget.maxNodes) {
    std::mt19937_64 rng(0x5d3a1e9cb1f08c47ull);  // fixed: hashes must be reproducible
    zobrist.resize(P.gridSize());
    for (auto& z : zobrist) {
      z = static_cast<unsigned __int128>(rng()) << 64;
      z |= rng();
    }
    for (std::size_t idx = 0; idx < P.gridSize(); ++idx)
      if (P.member(idx)) order.push_back(idx);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      long da = degreeOf(a), db = degreeOf(b);
      if (da != db) return da < db;
      return a < b;  // grid index order is lex order on points
    });
    // Generators of the upward-closed forbidden region inside [0, cap].
    const MultigradedModule& M = P.module();
    // Upward-closed posets digest maximal boxes greedily; posets with a
    // ceiling (quotient kinds) behave far better with minimal boxes first.
    pillarsFirst = M.kind() != ModuleKind::Ideal;
    auto addForbidden = [&](const MonomialIdeal& ideal) {
      for (const auto& g : ideal.generators()) {
        std::vector<long> v = g.toLongs();
        bool inside = true;
        for (int i = 0; i < n; ++i)
          if (v[static_cast<std::size_t>(i)] > cap[static_cast<std::size_t>(i)]) inside = false;
        if (inside) forbidden.push_back(std::move(v));
      }
    };
    if (M.kind() == ModuleKind::QuotientRing) addForbidden(M.top());
    if (M.kind() == ModuleKind::IdealQuotient) addForbidden(M.bottom());
  }

  DecisionResult run() {
    DecisionResult res;
    try {
      if (k <= 0) {
        res.status = DecisionStatus::True;
        res.certificate = singletons();
      } else if (dfs(0)) {
        res.status = DecisionStatus::True;
        IntervalPartition part;
        for (const auto& [a, b] : stack)
          part.intervals.push_back(
              Interval{ExponentVector::fromLongs(a), ExponentVector::fromLongs(b)});
        res.certificate = std::move(part);
      } else {
        res.status = DecisionStatus::False;
      }
    } catch (const BudgetExhausted&) {
      res.status = DecisionStatus::Undecided;
    }
    res.nodes = nodes;
    return res;
  }

 private:
  long degreeOf(std::size_t idx) const {
    long d = 0;
    for (std::size_t i = 0; i < strides.size(); ++i) {
      d += static_cast<long>(idx / strides[i]);
      idx %= strides[i];
    }
    return d;
  }

  IntervalPartition singletons() const {
    IntervalPartition part;
    for (std::size_t idx : order) {
      auto pt = P.pointAt(idx);
      part.intervals.push_back(
          Interval{ExponentVector::fromLongs(pt), ExponentVector::fromLongs(pt)});
    }
    return part;
  }

  void tick(unsigned long long cost = 1) {
    nodes += cost;
    if (nodes > maxNodes) throw BudgetExhausted{};
  }

  long capCount(const std::vector<long>& b) const {
    long c = 0;
    for (int i = 0; i < n; ++i)
      if (b[static_cast<std::size_t>(i)] == cap[static_cast<std::size_t>(i)]) ++c;
    return c;
  }

  std::uint64_t volume(const std::vector<long>& a, const std::vector<long>& b) const {
    std::uint64_t v = 1;
    for (int i = 0; i < n; ++i)
      v *= static_cast<std::uint64_t>(b[static_cast<std::size_t>(i)] - a[static_cast<std::size_t>(i)] + 1);
    return v;
  }

  // A cell of [a, b] outside the poset or inside the covered region, or
  // nullopt when the box is free. a itself is always a free poset element.
  std::optional<std::vector<long>> boxConflict(const std::vector<long>& a,
                                               const std::vector<long>& b) {
    tick();
    // forbidden upward sets: generator g clashes iff join(a, g) <= b
    for (const auto& g : forbidden) {
      std::vector<long> c(static_cast<std::size_t>(n));
      bool hit = true;
      for (int i = 0; i < n && hit; ++i) {
        c[static_cast<std::size_t>(i)] =
            std::max(a[static_cast<std::size_t>(i)], g[static_cast<std::size_t>(i)]);
        if (c[static_cast<std::size_t>(i)] > b[static_cast<std::size_t>(i)]) hit = false;
      }
      if (hit) return c;
    }
    // covered region: the stack boxes are pairwise disjoint
    for (const auto& [lo, hi] : stack) {
      std::vector<long> c(static_cast<std::size_t>(n));
      bool hit = true;
      for (int i = 0; i < n && hit; ++i) {
        long l = std::max(a[static_cast<std::size_t>(i)], lo[static_cast<std::size_t>(i)]);
        if (l > std::min(b[static_cast<std::size_t>(i)], hi[static_cast<std::size_t>(i)])) hit = false;
        c[static_cast<std::size_t>(i)] = l;
      }
      if (hit) return c;
    }
    return std::nullopt;
  }

  void coverBox(const std::vector<long>& a, const std::vector<long>& b, bool on) {
    std::vector<long> pt(a);
    while (true) {
      std::size_t idx = P.indexOf(pt);
      covered[idx] = on ? 1 : 0;
      stateHash ^= zobrist[idx];
      int i = n;
      bool done = true;
      while (i > 0) {
        --i;
        if (pt[static_cast<std::size_t>(i)] < b[static_cast<std::size_t>(i)]) {
          ++pt[static_cast<std::size_t>(i)];
          for (int j = i + 1; j < n; ++j) pt[static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(j)];
          done = false;
          break;
        }
      }
      if (done) return;
    }
  }

  // Maximal conflict-free boxes [a, b] with at least k capped coordinates,
  // most capped / largest first.
  std::vector<std::vector<long>> findCorners(const std::vector<long>& a) {
    std::vector<std::vector<long>> corners;
    std::unordered_set<std::size_t> seen;
    std::vector<std::vector<long>> work{cap};
    std::size_t explored = 0;
    while (!work.empty() && explored < kCornerBudget) {
      std::vector<long> b = std::move(work.back());
      work.pop_back();
      if (!seen.insert(P.indexOf(b)).second) continue;
      ++explored;
      if (capCount(b) < k) continue;
      auto conflict = boxConflict(a, b);
      if (!conflict) {
        corners.push_back(b);
        continue;
      }
      for (int i = 0; i < n; ++i) {
        if ((*conflict)[static_cast<std::size_t>(i)] <= a[static_cast<std::size_t>(i)]) continue;
        std::vector<long> shrunk(b);
        shrunk[static_cast<std::size_t>(i)] = (*conflict)[static_cast<std::size_t>(i)] - 1;
        work.push_back(std::move(shrunk));
      }
    }
    std::sort(corners.begin(), corners.end(), [&](const auto& x, const auto& y) {
      long cx = capCount(x), cy = capCount(y);
      if (cx != cy) return cx > cy;
      std::uint64_t vx = volume(a, x), vy = volume(a, y);
      if (vx != vy) return vx > vy;
      return P.indexOf(x) < P.indexOf(y);
    });
    return corners;
  }

  // Any valid k-good box [c, b] shrinks to a valid k-good pillar over c, so
  // an element is coverable as a lower corner iff one of its C(n, k)
  // pillars is conflict-free.
  bool hasValidPillar(const std::vector<long>& x) {
    std::vector<int> subset;
    bool found = false;
    auto rec = [&](auto&& self, int from, int need) -> void {
      if (found) return;
      if (need == 0) {
        std::vector<long> b(x);
        for (int i : subset) b[static_cast<std::size_t>(i)] = cap[static_cast<std::size_t>(i)];
        if (!boxConflict(x, b)) found = true;
        return;
      }
      for (int i = from; i + need <= n && !found; ++i) {
        subset.push_back(i);
        self(self, i + 1, need - 1);
        subset.pop_back();
      }
    };
    rec(rec, 0, k);
    return found;
  }

  // A minimal uncovered element other than the active one can never sit in
  // the interior of a later interval, so it must eventually serve as a
  // lower corner; if it has no valid pillar now it never will, and the
  // whole node is dead.
  bool strandedElsewhere(const std::vector<long>& a) {
    std::vector<std::vector<long>> minimals;
    for (std::size_t idx : order) {
      if (covered[idx]) continue;
      std::vector<long> pt = P.pointAt(idx);
      bool dominated = false;
      for (const auto& m : minimals) {
        bool below = true;
        for (int i = 0; i < n && below; ++i)
          below = m[static_cast<std::size_t>(i)] <= pt[static_cast<std::size_t>(i)];
        if (below) {
          dominated = true;
          break;
        }
      }
      if (dominated) continue;
      if (pt != a && !hasValidPillar(pt)) return true;
      minimals.push_back(std::move(pt));
    }
    return false;
  }

  // Minimal k-capped boxes: raise exactly the coordinates of one k-subset
  // to the cap and keep the rest at a. Small boxes interfere least with
  // later elements, which is what thin shell posets (I/J spanning several
  // power layers) need.
  std::vector<std::vector<long>> findPillars(const std::vector<long>& a) {
    std::vector<std::vector<long>> pillars;
    std::vector<int> subset;
    auto rec = [&](auto&& self, int from, int need) -> void {
      if (need == 0) {
        std::vector<long> b(a);
        for (int i : subset) b[static_cast<std::size_t>(i)] = cap[static_cast<std::size_t>(i)];
        pillars.push_back(std::move(b));
        return;
      }
      for (int i = from; i + need <= n; ++i) {
        subset.push_back(i);
        self(self, i + 1, need - 1);
        subset.pop_back();
      }
    };
    rec(rec, 0, k);
    std::sort(pillars.begin(), pillars.end(), [&](const auto& x, const auto& y) {
      std::uint64_t vx = volume(a, x), vy = volume(a, y);
      if (vx != vy) return vx < vy;
      return P.indexOf(x) < P.indexOf(y);
    });
    return pillars;
  }

  bool dfs(std::size_t pos) {
    while (pos < order.size() && covered[order[pos]]) ++pos;
    if (pos == order.size()) return true;
    tick();
    if (failed.count(stateHash)) return false;
    const std::vector<long> a = P.pointAt(order[pos]);
    if (!hasValidPillar(a)) {
      if (failed.size() < kMemoLimit) failed.insert(stateHash);
      return false;
    }

    bool sweepDone = false;
    auto tryUpper = [&](const std::vector<long>& b, bool prevalidated) -> bool {
      tick();
      if (!prevalidated && boxConflict(a, b)) return false;
      coverBox(a, b, true);
      stack.emplace_back(a, b);
      bool ok = dfs(pos);
      if (ok) return true;
      stack.pop_back();
      coverBox(a, b, false);
      return false;
    };
    // After the first failed branch, look for elements this node can no
    // longer save before trying siblings.
    auto deadNode = [&]() -> bool {
      if (sweepDone) return false;
      sweepDone = true;
      return strandedElsewhere(a);
    };

    std::unordered_set<std::size_t> skip;
    std::vector<std::vector<long>> pillars;
    if (pillarsFirst) {
      pillars = findPillars(a);
      for (const auto& b : pillars) {
        if (tryUpper(b, false)) return true;
        if (deadNode()) {
          if (failed.size() < kMemoLimit) failed.insert(stateHash);
          return false;
        }
        skip.insert(P.indexOf(b));
      }
    }

    auto corners = findCorners(a);
    for (const auto& b : corners) {
      if (skip.count(P.indexOf(b))) continue;
      if (tryUpper(b, true)) return true;
      if (deadNode()) {
        if (failed.size() < kMemoLimit) failed.insert(stateHash);
        return false;
      }
    }

    // Completeness pass: every remaining upper bound with enough caps.
    for (const auto& b : corners) skip.insert(P.indexOf(b));
    std::vector<std::pair<std::vector<long>, std::uint64_t>> rest;
    std::vector<long> span(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      span[static_cast<std::size_t>(i)] = cap[static_cast<std::size_t>(i)] - a[static_cast<std::size_t>(i)];
    scanBox(span, [&](const std::vector<long>& off) {
      std::vector<long> b(a);
      for (int i = 0; i < n; ++i) b[static_cast<std::size_t>(i)] += off[static_cast<std::size_t>(i)];
      if (capCount(b) < k) return;
      if (skip.count(P.indexOf(b))) return;
      rest.emplace_back(std::move(b), 0);
    });
    for (auto& [b, key] : rest)
      key = (static_cast<std::uint64_t>(capCount(b)) << 48) + volume(a, b);
    std::stable_sort(rest.begin(), rest.end(),
                     [](const auto& x, const auto& y) { return x.second > y.second; });
    for (const auto& [b, key] : rest) {
      (void)key;
      if (tryUpper(b, false)) return true;
      if (deadNode()) break;
    }

    if (failed.size() < kMemoLimit) failed.insert(stateHash);
    return false;
  }

  static constexpr std::size_t kCornerBudget = 4096;
  static constexpr std::size_t kMemoLimit = 1u << 21;

  const CharacteristicPoset& P;
  int n;
  int k;
  std::vector<long> cap;
  std::vector<std::size_t> strides;
  std::vector<char> covered;
  std::vector<std::size_t> order;
  std::vector<unsigned __int128> zobrist;
  unsigned __int128 stateHash = 0;
  std::unordered_set<unsigned __int128, Hash128> failed;
  std::vector<std::pair<std::vector<long>, std::vector<long>>> stack;
  std::vector<std::vector<long>> forbidden;
  bool pillarsFirst = false;
  unsigned long long nodes = 0;
  unsigned long long maxNodes;
};

}  // namespace detail

// Does the poset admit an interval partition whose every interval has at
// least k coordinates pinned at the cap? True comes with a certificate;
// exceeding the node budget yields Undecided, never a wrong answer.
inline DecisionResult sdepthDecision(const CharacteristicPoset& P, int k,
                                     const SearchBudget& budget = {}) {
  if (P.elementCount() == 0) {
    DecisionResult res;  // sdepth of the zero module is infinite
    res.status = DecisionStatus::True;
    res.certificate = IntervalPartition{};
    return res;
  }
  detail::PartitionSearch search(P, k, budget);
  return search.run();
}

struct SdepthResult {
  DecisionStatus status = DecisionStatus::Undecided;  // True = exact value established
  bool infinite = false;                              // zero module
  long value = 0;  // exact sdepth, or best proven lower bound when undecided
  std::optional<IntervalPartition> certificate;
  unsigned long long nodes = 0;
};

// Largest k with sdepthDecision(P, k) true, by ascending search; the
// decision is monotone in k.
inline SdepthResult sdepthExact(const CharacteristicPoset& P, const SearchBudget& budget = {}) {
  SdepthResult out;
  if (P.elementCount() == 0) {
    out.status = DecisionStatus::True;
    out.infinite = true;
    return out;
  }
  out.value = 0;
  for (int k = 1; k <= P.arity(); ++k) {
    DecisionResult d = sdepthDecision(P, k, budget);
    out.nodes += d.nodes;
    if (d.status == DecisionStatus::True) {
      out.value = k;
      out.certificate = std::move(d.certificate);
    } else if (d.status == DecisionStatus::False) {
      out.status = DecisionStatus::True;
      return out;
    } else {
      out.status = DecisionStatus::Undecided;
      return out;
    }
  }
  out.status = DecisionStatus::True;
  return out;
}

// Stanley decomposition as explicit spaces u K[Z].
struct StanleyDecomposition {
  std::vector<std::pair<ExponentVector, VariableSet>> spaces;
};

// Interval [a, b] with Z = {i : b_i = g_i} becomes the family of spaces
// x^e K[Z] with e running over [a, b] at the coordinates outside Z and
// pinned to a on Z. The single space x^a K[Z] covers the interval only when
// the off-Z coordinates do not move; the full family partitions exactly the
// monomials whose meet with g falls in [a, b].
inline StanleyDecomposition toDecomposition(const IntervalPartition& part,
                                            const ExponentVector& cap) {
  StanleyDecomposition D;
  const int n = cap.arity();
  for (const auto& iv : part.intervals) {
    std::uint64_t bits = 0;
    for (int i = 0; i < n; ++i)
      if (iv.upper[i] == cap[i]) bits |= std::uint64_t(1) << i;
    VariableSet Z(n, bits);
    std::vector<long> span(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
      if (!Z.contains(i)) span[static_cast<std::size_t>(i)] = toLong(iv.upper[i] - iv.lower[i]);
    scanBox(span, [&](const std::vector<long>& off) {
      ExponentVector e = iv.lower;
      for (int i = 0; i < n; ++i) e[i] += off[static_cast<std::size_t>(i)];
      D.spaces.emplace_back(std::move(e), Z);
    });
  }
  return D;
}

struct VerifyResult {
  bool valid = false;
  long value = 0;  // min |Z| over the spaces; LONG_MAX for the empty sum
  std::optional<ExponentVector> witness;
};

// Degree-by-degree check over the box [0, g+1]: every basis monomial of the
// module covered exactly once, no non-basis monomial covered at all.
inline VerifyResult verifyDecomposition(const MultigradedModule& M,
                                        const StanleyDecomposition& D) {
  VerifyResult out;
  std::vector<long> dims = M.degreeBound().toLongs();
  for (auto& d : dims) d += 1;
  boxCellCount(dims, 10'000'000);
  auto strides = detail::gridStrides(dims);
  std::vector<char> basis = detail::basisGrid(M, dims, strides);
  const int n = M.arity();
  std::vector<std::vector<long>> lowers;
  std::vector<std::uint64_t> zbits;
  for (const auto& [u, Z] : D.spaces) {
    if (u.arity() != n || Z.arity() != n)
      throw std::invalid_argument("verifyDecomposition: arity mismatch in a Stanley space");
    lowers.push_back(u.toLongs());
    zbits.push_back(Z.bits());
  }
  std::size_t idx = 0;
  bool ok = true;
  scanBox(dims, [&](const std::vector<long>& pt) {
    if (!ok) return;
    const std::size_t at = idx++;
    int covers = 0;
    for (std::size_t s = 0; s < lowers.size(); ++s) {
      bool in = true;
      for (int i = 0; i < n && in; ++i) {
        long d = pt[static_cast<std::size_t>(i)] - lowers[s][static_cast<std::size_t>(i)];
        if ((zbits[s] >> i) & 1u) in = d >= 0;
        else in = d == 0;
      }
      if (in) ++covers;
    }
    if (covers != (basis[at] ? 1 : 0)) {
      ok = false;
      out.witness = ExponentVector::fromLongs(pt);
    }
  });
  out.valid = ok;
  if (ok) {
    long best = std::numeric_limits<long>::max();
    for (const auto& [u, Z] : D.spaces) best = std::min(best, static_cast<long>(Z.size()));
    out.value = best;
  }
  return out;
}

inline VerifyResult verifyDecomposition(ModuleKind kind, const MonomialIdeal& I,
                                        const std::optional<MonomialIdeal>& J,
                                        const StanleyDecomposition& D) {
  switch (kind) {
    case ModuleKind::QuotientRing:
      return verifyDecomposition(MultigradedModule::quotientRing(I), D);
    case ModuleKind::Ideal: return verifyDecomposition(MultigradedModule::ideal(I), D);
    case ModuleKind::IdealQuotient:
      if (!J) throw std::invalid_argument("idealQuotient verification needs a second ideal");
      return verifyDecomposition(MultigradedModule::idealQuotient(I, *J), D);
  }
  throw std::invalid_argument("unknown module kind");
}

// Certificates on the wire: a JSON list of {"lower": [...], "upper": [...]}.
inline nlohmann::json certificateToJson(const IntervalPartition& part) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& iv : part.intervals) {
    nlohmann::json lo = nlohmann::json::array(), hi = nlohmann::json::array();
    for (int i = 0; i < iv.lower.arity(); ++i) lo.push_back(toLong(iv.lower[i]));
    for (int i = 0; i < iv.upper.arity(); ++i) hi.push_back(toLong(iv.upper[i]));
    arr.push_back({{"lower", lo}, {"upper", hi}});
  }
  return arr;
}

inline IntervalPartition certificateFromJson(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("certificate must be a JSON array of intervals");
  IntervalPartition part;
  for (const auto& item : j) {
    if (!item.contains("lower") || !item.contains("upper"))
      throw std::invalid_argument("certificate interval needs 'lower' and 'upper'");
    Interval iv;
    std::vector<long> lo = item["lower"].get<std::vector<long>>();
    std::vector<long> hi = item["upper"].get<std::vector<long>>();
    if (lo.size() != hi.size())
      throw std::invalid_argument("certificate interval arity mismatch");
    iv.lower = ExponentVector::fromLongs(lo);
    iv.upper = ExponentVector::fromLongs(hi);
    part.intervals.push_back(std::move(iv));
  }
  return part;
}

}  // namespace idealab
