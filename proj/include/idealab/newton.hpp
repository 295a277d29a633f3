#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "idealab/graphs.hpp"
#include "idealab/monomial.hpp"

namespace idealab {

namespace detail {

// One inequality sum(coeff[i] * x_i) + constant >= 0 with exact integer data.
struct FmRow {
  std::vector<Int> coeff;
  std::uint64_t history = 0;  // original inequalities this row descends from

  void normalize() {
    Int g = 0;
    for (const Int& c : coeff) g = gcdInt(g, c);
    if (g > 1)
      for (Int& c : coeff) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
};

// Exact Fourier-Motzkin elimination of the first `elimCount` variables.
// Imbert's acceleration: a derived row whose history touches more than
// 1 + #eliminated original rows is redundant and is dropped. Rows with equal
// coefficient vectors keep only the tightest constant.
inline std::vector<FmRow> fourierMotzkin(std::vector<FmRow> rows, std::size_t elimCount) {
  auto prune = [](std::vector<FmRow>& rs, std::size_t vars) {
    std::map<std::vector<Int>, std::size_t> best;  // coeffs (without constant) -> index
    std::vector<FmRow> kept;
    for (auto& r : rs) {
      r.normalize();
      std::vector<Int> key(r.coeff.begin(), r.coeff.end() - 1);
      bool allZero = true;
      for (const Int& c : key)
        if (c != 0) {
          allZero = false;
          break;
        }
      if (allZero) continue;  // 0 + const >= 0 carries no information here
      auto it = best.find(key);
      if (it == best.end()) {
        best.emplace(std::move(key), kept.size());
        kept.push_back(std::move(r));
      } else if (r.coeff.back() < kept[it->second].coeff.back()) {
        kept[it->second] = std::move(r);
      }
    }
    (void)vars;
    rs = std::move(kept);
  };

  for (std::size_t step = 0; step < elimCount; ++step) {
    std::vector<FmRow> pos, neg, rest;
    for (auto& r : rows) {
      int s = sgn(r.coeff[step]);
      if (s > 0)
        pos.push_back(std::move(r));
      else if (s < 0)
        neg.push_back(std::move(r));
      else
        rest.push_back(std::move(r));
    }
    for (const auto& p : pos)
      for (const auto& q : neg) {
        std::uint64_t hist = p.history | q.history;
        if (static_cast<std::size_t>(__builtin_popcountll(hist)) > step + 2) continue;
        FmRow r;
        r.history = hist;
        r.coeff.resize(p.coeff.size());
        // (-q_s) * p + p_s * q cancels variable `step`; both multipliers > 0
        Int a = -q.coeff[step];
        Int b = p.coeff[step];
        for (std::size_t i = 0; i < r.coeff.size(); ++i) r.coeff[i] = a * p.coeff[i] + b * q.coeff[i];
        rest.push_back(std::move(r));
      }
    prune(rest, rows.empty() ? 0 : rows[0].coeff.size());
    rows = std::move(rest);
  }
  return rows;
}

}  // namespace detail

struct NewtonFacet {
  std::vector<Int> coeff;  // over the n ambient coordinates
  Int constant;            // point q feasible iff sum(coeff[i] q_i) + constant >= 0
};

// Facet description of NP(I) = conv(G(I)) + R^n_{>=0}, computed once per
// ideal by exact Fourier-Motzkin elimination of the barycentric multipliers.
// Membership of a in the k-fold dilate is then a sign check per facet, with
// a machine-word fast path when every quantity is small.
class NewtonPolyhedron {
 public:
  explicit NewtonPolyhedron(const MonomialIdeal& I) : ideal_(I), arity_(I.arity()) {
    if (I.isZero()) throw std::invalid_argument("Newton polyhedron of the zero ideal is empty");
    const auto& gens = I.generators();
    const std::size_t m = gens.size();
    const std::size_t n = static_cast<std::size_t>(arity_);
    // variables: lambda_1..lambda_m, then q_1..q_n, then the constant column
    const std::size_t width = m + n + 1;
    std::vector<detail::FmRow> rows;
    std::size_t rowId = 0;
    auto blank = [&]() {
      detail::FmRow r;
      r.coeff.assign(width, Int(0));
      r.history = std::uint64_t(1) << rowId++;
      return r;
    };
    for (std::size_t j = 0; j < m; ++j) {  // lambda_j >= 0
      auto r = blank();
      r.coeff[j] = 1;
      rows.push_back(std::move(r));
    }
    {  // sum lambda = 1, as two inequalities
      auto r = blank();
      for (std::size_t j = 0; j < m; ++j) r.coeff[j] = 1;
      r.coeff[width - 1] = -1;
      rows.push_back(std::move(r));
      auto r2 = blank();
      for (std::size_t j = 0; j < m; ++j) r2.coeff[j] = -1;
      r2.coeff[width - 1] = 1;
      rows.push_back(std::move(r2));
    }
    for (std::size_t i = 0; i < n; ++i) {  // q_i - sum_j lambda_j g_{j,i} >= 0
      auto r = blank();
      for (std::size_t j = 0; j < m; ++j) r.coeff[j] = -gens[j][static_cast<int>(i)];
      r.coeff[m + i] = 1;
      rows.push_back(std::move(r));
    }
    if (rowId > 64) throw std::runtime_error("too many inequalities for Fourier-Motzkin history masks");
    auto reduced = detail::fourierMotzkin(std::move(rows), m);
    for (auto& r : reduced) {
      NewtonFacet f;
      f.coeff.assign(r.coeff.begin() + static_cast<long>(m), r.coeff.begin() + static_cast<long>(m + n));
      f.constant = r.coeff.back();
      facets_.push_back(std::move(f));
    }
    buildFastPath();
  }

  const MonomialIdeal& ideal() const { return ideal_; }
  int arity() const { return arity_; }
  const std::vector<NewtonFacet>& facets() const { return facets_; }

  // a in k * NP(I), i.e. x^a in the integral closure of I^k.
  bool containsScaled(const ExponentVector& a, long k) const {
    if (a.arity() != arity_) throw std::invalid_argument("arity mismatch");
    if (k < 1) throw std::invalid_argument("power must be positive");
    if (fast_) {
      bool small = true;
      long av[64];
      for (int i = 0; i < arity_; ++i) {
        const Int& x = a[i];
        if (!x.fits_slong_p()) {
          small = false;
          break;
        }
        av[i] = x.get_si();
        if (av[i] > kFastBound || av[i] < -kFastBound) {
          small = false;
          break;
        }
      }
      if (small && k <= kFastBound) {
        for (std::size_t f = 0; f < fastCoeff_.size(); ++f) {
          __int128 acc = static_cast<__int128>(fastConst_[f]) * k;
          const auto& row = fastCoeff_[f];
          for (int i = 0; i < arity_; ++i) acc += static_cast<__int128>(row[static_cast<std::size_t>(i)]) * av[i];
          if (acc < 0) return false;
        }
        return true;
      }
    }
    for (const auto& f : facets_) {
      Int acc = f.constant * k;
      for (int i = 0; i < arity_; ++i) acc += f.coeff[static_cast<std::size_t>(i)] * a[i];
      if (acc < 0) return false;
    }
    return true;
  }

 private:
  static constexpr long kFastBound = 1l << 30;

  void buildFastPath() {
    fast_ = true;
    for (const auto& f : facets_) {
      std::vector<long> row;
      for (const Int& c : f.coeff) {
        if (!c.fits_slong_p() || c.get_si() > kFastBound || c.get_si() < -kFastBound) {
          fast_ = false;
          return;
        }
        row.push_back(c.get_si());
      }
      if (!f.constant.fits_slong_p() || f.constant.get_si() > kFastBound ||
          f.constant.get_si() < -kFastBound) {
        fast_ = false;
        return;
      }
      fastCoeff_.push_back(std::move(row));
      fastConst_.push_back(f.constant.get_si());
    }
  }

  MonomialIdeal ideal_;
  int arity_ = 0;
  std::vector<NewtonFacet> facets_;
  bool fast_ = false;
  std::vector<std::vector<long>> fastCoeff_;
  std::vector<long> fastConst_;
};

// x^a in the integral closure of I^k: exact rational feasibility of
// sum(lambda_j) = k, lambda >= 0, sum(lambda_j g_j) <= a.
inline bool closureMembership(const MonomialIdeal& I, long k, const ExponentVector& a) {
  if (I.arity() != a.arity()) throw std::invalid_argument("closureMembership: arity mismatch");
  if (k < 1) throw std::invalid_argument("closureMembership: power must be positive");
  if (I.isZero()) return false;  // empty polyhedron; documented, not an error
  if (!a.isNonnegative()) return false;
  return NewtonPolyhedron(I).containsScaled(a, k);
}

// Minimal generators of the closure of I^k, from the lattice points of the
// k-fold dilate. Any point beyond k*cmax per coordinate is non-minimal, so
// the box [0, k*cmax] is enough.
inline MonomialIdeal integralClosurePower(const NewtonPolyhedron& np, long k) {
  if (k < 1) throw std::invalid_argument("integralClosurePower: power must be positive");
  const MonomialIdeal& I = np.ideal();
  const int n = I.arity();
  if (I.isUnit()) return I;
  std::vector<long> dims(static_cast<std::size_t>(n), 0);
  for (const auto& g : I.generators())
    for (int i = 0; i < n; ++i)
      dims[static_cast<std::size_t>(i)] = std::max(dims[static_cast<std::size_t>(i)], toLong(g[i]));
  for (auto& d : dims) {
    if (d > (1l << 40) / std::max(k, 1l)) throw std::overflow_error("closure box too large");
    d *= k;
  }
  const std::size_t cells = boxCellCount(dims, 20'000'000);
  std::vector<char> member(cells, 0);
  std::vector<std::size_t> strides(static_cast<std::size_t>(n), 1);
  for (int i = n - 2; i >= 0; --i)
    strides[static_cast<std::size_t>(i)] =
        strides[static_cast<std::size_t>(i + 1)] * (static_cast<std::size_t>(dims[static_cast<std::size_t>(i + 1)]) + 1);
  std::size_t idx = 0;
  scanBox(dims, [&](const std::vector<long>& pt) {
    member[idx++] = np.containsScaled(ExponentVector::fromLongs(pt), k) ? 1 : 0;
  });
  // minimal members: all downward neighbours are outside
  std::vector<ExponentVector> gens;
  idx = 0;
  scanBox(dims, [&](const std::vector<long>& pt) {
    std::size_t at = idx++;
    if (!member[at]) return;
    for (int i = 0; i < n; ++i) {
      if (pt[static_cast<std::size_t>(i)] == 0) continue;
      if (member[at - strides[static_cast<std::size_t>(i)]]) return;
    }
    gens.push_back(ExponentVector::fromLongs(pt));
  });
  return MonomialIdeal::fromGenerators(n, std::move(gens));
}

inline MonomialIdeal integralClosurePower(const MonomialIdeal& I, long k) {
  if (I.isZero()) throw std::invalid_argument("integralClosurePower: zero ideal");
  if (I.isUnit()) return I;
  return integralClosurePower(NewtonPolyhedron(I), k);
}

inline MonomialIdeal integralClosure(const MonomialIdeal& I) { return integralClosurePower(I, 1); }

namespace detail {

// Exhaustive search with pruning for sum(c_j) = t, sum(c_j g_j) <= u over
// nonnegative integers c. Entries of u far beyond anything reachable are
// clamped, which keeps the arithmetic in machine words without changing
// feasibility.
inline bool powerMembershipSearch(const std::vector<std::vector<long>>& gens, long t,
                                  std::vector<long> residual, std::size_t from,
                                  std::vector<long>* certificate) {
  if (t == 0) return true;
  if (from == gens.size()) return false;
  const auto& g = gens[from];
  long maxC = t;
  for (std::size_t i = 0; i < g.size() && maxC > 0; ++i)
    if (g[i] > 0) maxC = std::min(maxC, residual[i] / g[i]);
  for (long c = maxC; c >= 0; --c) {
    std::vector<long> next(residual);
    bool ok = true;
    for (std::size_t i = 0; i < g.size(); ++i) {
      next[i] -= c * g[i];
      if (next[i] < 0) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    if (powerMembershipSearch(gens, t - c, std::move(next), from + 1, certificate)) {
      if (certificate) (*certificate)[from] = c;
      return true;
    }
  }
  return false;
}

inline bool powerMembershipImpl(const MonomialIdeal& I, long t, const ExponentVector& u,
                                std::vector<long>* certificate) {
  if (I.arity() != u.arity()) throw std::invalid_argument("powerMembership: arity mismatch");
  if (t < 1) throw std::invalid_argument("powerMembership: power must be positive");
  if (I.isZero()) return false;
  if (!u.isNonnegative()) return false;
  const int n = I.arity();
  // clamp each residual entry to t * (max generator entry), the most any
  // feasible combination can consume
  std::vector<long> cmax(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<long>> gens;
  for (const auto& g : I.generators()) {
    gens.push_back(g.toLongs());
    for (int i = 0; i < n; ++i)
      cmax[static_cast<std::size_t>(i)] = std::max(cmax[static_cast<std::size_t>(i)], gens.back()[static_cast<std::size_t>(i)]);
  }
  std::vector<long> residual(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Int cap = Int(cmax[static_cast<std::size_t>(i)]) * t;
    residual[static_cast<std::size_t>(i)] = (u[i] >= cap) ? toLong(cap) : toLong(u[i]);
  }
  if (certificate) certificate->assign(gens.size(), 0);
  return powerMembershipSearch(gens, t, std::move(residual), 0, certificate);
}

}  // namespace detail

// x^u in I^t, decided by exhaustive integer search with pruning; this is the
// independent route against which the polyhedral side is checked.
inline bool powerMembership(const MonomialIdeal& I, long t, const ExponentVector& u) {
  return detail::powerMembershipImpl(I, t, u, nullptr);
}

// Least t with u^t in I^t, with the certifying multiset of generators.
struct WitnessReport {
  ExponentVector monomial;
  long t = 0;
  std::vector<ExponentVector> certificate;  // t generators, sum <= t * monomial
};

inline WitnessReport minimalPowerWitness(const MonomialIdeal& I, const ExponentVector& u, long cap) {
  if (cap < 1) throw std::invalid_argument("minimalPowerWitness: cap must be positive");
  if (!closureMembership(I, 1, u))
    throw std::invalid_argument("minimalPowerWitness: monomial is not integral over I");
  for (long t = 1; t <= cap; ++t) {
    std::vector<long> counts;
    if (detail::powerMembershipImpl(I, t, u.scaled(t), &counts)) {
      WitnessReport w;
      w.monomial = u;
      w.t = t;
      for (std::size_t j = 0; j < counts.size(); ++j)
        for (long c = 0; c < counts[j]; ++c) w.certificate.push_back(I.generators()[j]);
      return w;
    }
  }
  throw std::runtime_error("minimalPowerWitness: cap exceeded (no witness up to t = " +
                           std::to_string(cap) + ")");
}

// mu of the closure of I^(l-1) with l the analytic spread; the guaranteed
// witness cap for equigenerated ideals.
inline long defaultWitnessCap(const MonomialIdeal& I) {
  long ell = analyticSpreadEquigenerated(I);
  if (ell <= 1) return 1;
  return static_cast<long>(integralClosurePower(I, ell - 1).mu());
}

inline bool isNormalUpTo(const MonomialIdeal& I, long K) {
  if (I.isZero()) throw std::invalid_argument("isNormalUpTo: zero ideal");
  if (I.isUnit()) return true;
  NewtonPolyhedron np(I);
  for (long k = 1; k <= K; ++k)
    if (integralClosurePower(np, k) != power(I, k)) return false;
  return true;
}

// Least s with closure(I^k) = I^(k-s) * closure(I^s) for every k in
// [s, kmax]. s = kmax would hold vacuously, so a witness must be
// corroborated by at least one strictly larger power: absent when kmax is
// too small to certify any s.
inline std::optional<long> reductionWitness(const MonomialIdeal& I, long kmax) {
  if (I.isZero()) throw std::invalid_argument("reductionWitness: zero ideal");
  if (kmax < 1) throw std::invalid_argument("reductionWitness: kmax must be positive");
  if (I.isUnit()) return 1;
  NewtonPolyhedron np(I);
  std::vector<MonomialIdeal> closures;  // closures[k-1] = closure of I^k
  for (long k = 1; k <= kmax; ++k) closures.push_back(integralClosurePower(np, k));
  for (long s = 1; s < kmax; ++s) {
    bool ok = true;
    for (long k = s + 1; k <= kmax && ok; ++k)
      if (closures[static_cast<std::size_t>(k - 1)] !=
          multiply(power(I, k - s), closures[static_cast<std::size_t>(s - 1)]))
        ok = false;
    if (ok) return s;
  }
  return std::nullopt;
}

}  // namespace idealab
