#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "idealab/arith.hpp"

namespace idealab {

// A point of Z^n. Nonnegative points are monomial exponent vectors x^a;
// signed points show up as multidegrees of local cohomology.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(int arity) : e_(static_cast<std::size_t>(arity)) {
    if (arity < 0) throw std::invalid_argument("negative arity");
  }
  ExponentVector(std::initializer_list<long> xs) {
    e_.reserve(xs.size());
    for (long x : xs) e_.emplace_back(x);
  }
  static ExponentVector zero(int arity) { return ExponentVector(arity); }
  static ExponentVector fromLongs(const std::vector<long>& xs) {
    ExponentVector v;
    v.e_.reserve(xs.size());
    for (long x : xs) v.e_.emplace_back(x);
    return v;
  }

  int arity() const { return static_cast<int>(e_.size()); }
  const Int& operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
  Int& operator[](int i) { return e_[static_cast<std::size_t>(i)]; }

  bool isNonnegative() const {
    for (const Int& x : e_)
      if (x < 0) return false;
    return true;
  }
  bool isZero() const {
    for (const Int& x : e_)
      if (x != 0) return false;
    return true;
  }
  Int totalDegree() const {
    Int d = 0;
    for (const Int& x : e_) d += x;
    return d;
  }

  // Componentwise a <= b with both nonnegative: x^a divides x^b.
  bool divides(const ExponentVector& b) const {
    requireSameArity(b);
    for (int i = 0; i < arity(); ++i)
      if (e_[static_cast<std::size_t>(i)] > b[i]) return false;
    return true;
  }

  ExponentVector plus(const ExponentVector& b) const {
    requireSameArity(b);
    ExponentVector r(arity());
    for (int i = 0; i < arity(); ++i) r[i] = (*this)[i] + b[i];
    return r;
  }
  ExponentVector minus(const ExponentVector& b) const {
    requireSameArity(b);
    ExponentVector r(arity());
    for (int i = 0; i < arity(); ++i) r[i] = (*this)[i] - b[i];
    return r;
  }
  // max(a - b, 0) componentwise; this is g -> g / gcd(g, u) on monomials.
  ExponentVector saturatedMinus(const ExponentVector& b) const {
    requireSameArity(b);
    ExponentVector r(arity());
    for (int i = 0; i < arity(); ++i) {
      Int d = (*this)[i] - b[i];
      r[i] = d > 0 ? d : Int(0);
    }
    return r;
  }
  ExponentVector scaled(const Int& k) const {
    ExponentVector r(arity());
    for (int i = 0; i < arity(); ++i) r[i] = (*this)[i] * k;
    return r;
  }
  // Componentwise max: the exponent of lcm(x^a, x^b).
  static ExponentVector join(const ExponentVector& a, const ExponentVector& b) {
    a.requireSameArity(b);
    ExponentVector r(a.arity());
    for (int i = 0; i < a.arity(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
  }

  std::vector<long> toLongs() const {
    std::vector<long> r;
    r.reserve(e_.size());
    for (const Int& x : e_) r.push_back(toLong(x));
    return r;
  }

  bool operator==(const ExponentVector& o) const { return e_ == o.e_; }
  bool operator!=(const ExponentVector& o) const { return !(*this == o); }
  // Lexicographic on entries; the canonical generator order.
  bool operator<(const ExponentVector& o) const {
    return std::lexicographical_compare(e_.begin(), e_.end(), o.e_.begin(), o.e_.end());
  }

  std::string debugString() const {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < arity(); ++i) {
      if (i) os << ',';
      os << e_[static_cast<std::size_t>(i)].get_str();
    }
    os << ')';
    return os.str();
  }

 private:
  void requireSameArity(const ExponentVector& o) const {
    if (arity() != o.arity()) throw std::invalid_argument("arity mismatch between exponent vectors");
  }
  std::vector<Int> e_;
};

using MultiDegree = ExponentVector;

// Subset of the variables {0, ..., n-1}; carrier of monomial primes
// (x_{i_1}, ..., x_{i_r}) and localization sets.
class VariableSet {
 public:
  VariableSet() = default;
  VariableSet(int arity, std::uint64_t bits) : arity_(arity), bits_(bits) {
    if (arity < 0 || arity > 64) throw std::invalid_argument("VariableSet supports arity 0..64");
    if (arity < 64 && (bits >> arity) != 0) throw std::invalid_argument("VariableSet member out of range");
  }
  static VariableSet fromMembers(int arity, const std::vector<int>& members) {
    std::uint64_t b = 0;
    for (int m : members) {
      if (m < 0 || m >= arity) throw std::invalid_argument("VariableSet member out of range");
      b |= std::uint64_t(1) << m;
    }
    return VariableSet(arity, b);
  }
  static VariableSet all(int arity) {
    if (arity < 0 || arity > 64) throw std::invalid_argument("VariableSet supports arity 0..64");
    return VariableSet(arity, arity == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << arity) - 1);
  }

  int arity() const { return arity_; }
  std::uint64_t bits() const { return bits_; }
  bool contains(int i) const { return i >= 0 && i < arity_ && ((bits_ >> i) & 1u); }
  int size() const { return __builtin_popcountll(bits_); }
  bool empty() const { return bits_ == 0; }
  bool subsetOf(const VariableSet& o) const { return (bits_ & ~o.bits_) == 0; }

  std::vector<int> members() const {
    std::vector<int> r;
    for (int i = 0; i < arity_; ++i)
      if ((bits_ >> i) & 1u) r.push_back(i);
    return r;
  }

  bool operator==(const VariableSet& o) const { return arity_ == o.arity_ && bits_ == o.bits_; }
  bool operator<(const VariableSet& o) const {
    if (arity_ != o.arity_) return arity_ < o.arity_;
    return bits_ < o.bits_;
  }

 private:
  int arity_ = 0;
  std::uint64_t bits_ = 0;
};

// Monomial ideal in canonical form: a divisibility-minimal generator list,
// sorted lexicographically. Ideal equality is list equality. The zero ideal
// has no generators; the unit ideal has the single generator 1.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  static MonomialIdeal zero(int arity) {
    MonomialIdeal I;
    I.arity_ = arity;
    return I;
  }
  static MonomialIdeal unit(int arity) {
    MonomialIdeal I;
    I.arity_ = arity;
    I.gens_.push_back(ExponentVector::zero(arity));
    return I;
  }
  static MonomialIdeal fromGenerators(int arity, std::vector<ExponentVector> gens);

  int arity() const { return arity_; }
  const std::vector<ExponentVector>& generators() const { return gens_; }
  std::size_t mu() const { return gens_.size(); }
  bool isZero() const { return gens_.empty(); }
  bool isUnit() const { return gens_.size() == 1 && gens_[0].isZero(); }
  bool isProper() const { return !isUnit(); }

  ExponentVector lcmOfGenerators() const {
    ExponentVector g = ExponentVector::zero(arity_);
    for (const auto& v : gens_) g = ExponentVector::join(g, v);
    return g;
  }
  bool isSquarefree() const {
    for (const auto& g : gens_)
      for (int i = 0; i < arity_; ++i)
        if (g[i] > 1) return false;
    return true;
  }
  bool isEquigenerated() const {
    if (gens_.empty()) return false;
    Int d = gens_[0].totalDegree();
    for (const auto& g : gens_)
      if (g.totalDegree() != d) return false;
    return true;
  }

  bool operator==(const MonomialIdeal& o) const { return arity_ == o.arity_ && gens_ == o.gens_; }
  bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

 private:
  int arity_ = 0;
  std::vector<ExponentVector> gens_;
};

// Divisibility-minimal, lex-sorted sublist; mu(I) is its length.
inline MonomialIdeal minimalize(int arity, std::vector<ExponentVector> gens) {
  for (const auto& g : gens) {
    if (g.arity() != arity) throw std::invalid_argument("minimalize: arity mismatch among generators");
    if (!g.isNonnegative()) throw std::invalid_argument("minimalize: negative exponent in a generator");
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<ExponentVector> keep;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      if (j != i && gens[j].divides(gens[i])) redundant = true;
    if (!redundant) keep.push_back(gens[i]);
  }
  return MonomialIdeal::fromGenerators(arity, std::move(keep));
}

inline MonomialIdeal MonomialIdeal::fromGenerators(int arity, std::vector<ExponentVector> gens) {
  // Trust callers only with already-minimal lists; anything else should go
  // through minimalize(). We still sort and sanity-check cheaply.
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (const auto& g : gens)
    if (g.arity() != arity) throw std::invalid_argument("generator arity mismatch");
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (i != j && gens[j].divides(gens[i]))
        return minimalize(arity, std::move(gens));
  MonomialIdeal I;
  I.arity_ = arity;
  I.gens_ = std::move(gens);
  return I;
}

// True iff some minimal generator divides u.
inline bool contains(const MonomialIdeal& I, const ExponentVector& u) {
  if (I.arity() != u.arity()) throw std::invalid_argument("contains: arity mismatch");
  for (const auto& g : I.generators())
    if (g.divides(u)) return true;
  return false;
}

// J subseteq I as ideals.
inline bool containsIdeal(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.arity() != J.arity()) throw std::invalid_argument("containsIdeal: arity mismatch");
  for (const auto& g : J.generators())
    if (!contains(I, g)) return false;
  return true;
}

inline MonomialIdeal multiply(const MonomialIdeal& A, const MonomialIdeal& B) {
  if (A.arity() != B.arity()) throw std::invalid_argument("multiply: arity mismatch");
  if (A.isZero() || B.isZero()) return MonomialIdeal::zero(A.arity());
  std::vector<ExponentVector> prods;
  prods.reserve(A.mu() * B.mu());
  for (const auto& a : A.generators())
    for (const auto& b : B.generators()) prods.push_back(a.plus(b));
  return minimalize(A.arity(), std::move(prods));
}

// Minimalized ideal generated by all k-fold products of generators.
// power(I, 0) is the unit ideal.
inline MonomialIdeal power(const MonomialIdeal& I, long k) {
  if (k < 0) throw std::invalid_argument("power: negative exponent");
  if (k == 0) return MonomialIdeal::unit(I.arity());
  if (I.isZero()) return I;
  const auto& gens = I.generators();
  std::vector<ExponentVector> sums;
  // Multisets of size k over the generators, depth-first.
  std::size_t guard = 0;
  const std::size_t kMaxProducts = 5'000'000;
  auto rec = [&](auto&& self, std::size_t from, long remaining, const ExponentVector& acc) -> void {
    if (remaining == 0) {
      sums.push_back(acc);
      if (++guard > kMaxProducts) throw std::runtime_error("power: generator product explosion");
      return;
    }
    for (std::size_t j = from; j < gens.size(); ++j) self(self, j, remaining - 1, acc.plus(gens[j]));
  };
  rec(rec, 0, k, ExponentVector::zero(I.arity()));
  return minimalize(I.arity(), std::move(sums));
}

// (I : x^u), via g -> g / gcd(g, u) on each minimal generator.
inline MonomialIdeal colon(const MonomialIdeal& I, const ExponentVector& u) {
  if (I.arity() != u.arity()) throw std::invalid_argument("colon: arity mismatch");
  std::vector<ExponentVector> gens;
  gens.reserve(I.mu());
  for (const auto& g : I.generators()) gens.push_back(g.saturatedMinus(u));
  return minimalize(I.arity(), std::move(gens));
}

// Ideal moved to a ring with fewer variables; newToOld maps the new index
// back to the original one.
struct RelabeledIdeal {
  MonomialIdeal ideal;
  std::vector<int> newToOld;
};

// I with variable `var` eliminated: generators with zero exponent at `var`,
// re-labeled into an (arity-1)-variable ring. 0-based index.
inline RelabeledIdeal eliminate(const MonomialIdeal& I, int var) {
  const int n = I.arity();
  if (var < 0 || var >= n) throw std::invalid_argument("eliminate: variable index out of range");
  std::vector<int> newToOld;
  for (int i = 0; i < n; ++i)
    if (i != var) newToOld.push_back(i);
  std::vector<ExponentVector> gens;
  for (const auto& g : I.generators()) {
    if (g[var] != 0) continue;
    ExponentVector h(n - 1);
    for (int i = 0; i < n - 1; ++i) h[i] = g[newToOld[static_cast<std::size_t>(i)]];
    gens.push_back(std::move(h));
  }
  return RelabeledIdeal{minimalize(n - 1, std::move(gens)), std::move(newToOld)};
}

// Monomial localization I(P): kill exponents outside P, then move to the
// polynomial ring on the variables of P.
inline RelabeledIdeal localize(const MonomialIdeal& I, const VariableSet& P) {
  if (I.arity() != P.arity()) throw std::invalid_argument("localize: arity mismatch");
  if (P.empty()) throw std::invalid_argument("localize: empty variable set");
  std::vector<int> newToOld = P.members();
  const int m = static_cast<int>(newToOld.size());
  std::vector<ExponentVector> gens;
  for (const auto& g : I.generators()) {
    ExponentVector h(m);
    for (int i = 0; i < m; ++i) h[i] = g[newToOld[static_cast<std::size_t>(i)]];
    gens.push_back(std::move(h));
  }
  return RelabeledIdeal{minimalize(m, std::move(gens)), std::move(newToOld)};
}

namespace detail {
// Is the colon ideal a monomial prime, i.e. minimally generated by variables?
inline std::optional<VariableSet> asMonomialPrime(const MonomialIdeal& I) {
  if (I.isZero() || I.isUnit()) return std::nullopt;
  std::uint64_t bits = 0;
  for (const auto& g : I.generators()) {
    int var = -1;
    for (int i = 0; i < I.arity(); ++i) {
      if (g[i] == 0) continue;
      if (g[i] != 1 || var != -1) return std::nullopt;
      var = i;
    }
    if (var == -1) return std::nullopt;
    bits |= std::uint64_t(1) << var;
  }
  return VariableSet(I.arity(), bits);
}
}  // namespace detail

// Monomial primes P with P in Ass(S/I), by the witness method: scan all
// monomials u <= cap componentwise and keep the colons (I : u) that are
// generated by variables. The default cap is lcm(G(I)); tests validate it
// against the enlarged box lcm + (1,...,1).
inline std::vector<VariableSet> associatedPrimesWithCap(const MonomialIdeal& I,
                                                        const ExponentVector& cap) {
  if (I.isZero() || I.isUnit())
    throw std::invalid_argument("associatedPrimes: no associated primes defined here");
  std::vector<long> dims = cap.toLongs();
  boxCellCount(dims, 50'000'000);
  std::vector<VariableSet> found;
  scanBox(dims, [&](const std::vector<long>& pt) {
    ExponentVector u = ExponentVector::fromLongs(pt);
    if (contains(I, u)) return;  // colon would be the unit ideal
    auto prime = detail::asMonomialPrime(colon(I, u));
    if (prime) found.push_back(*prime);
  });
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

inline std::vector<VariableSet> associatedPrimes(const MonomialIdeal& I) {
  if (I.isZero() || I.isUnit())
    throw std::invalid_argument("associatedPrimes: no associated primes defined here");
  return associatedPrimesWithCap(I, I.lcmOfGenerators());
}

}  // namespace idealab
