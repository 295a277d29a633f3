#pragma once

#include <stdexcept>

#include "idealab/monomial.hpp"

namespace idealab {

// The three module shapes the workbench handles. Each has a monomial
// K-basis selected by a predicate on exponent vectors:
//   QuotientRing  S/I : x^b with x^b not in I
//   Ideal         I   : x^b with x^b in I
//   IdealQuotient I/J : x^b with x^b in I and not in J  (requires J <= I)
enum class ModuleKind { QuotientRing, Ideal, IdealQuotient };

class MultigradedModule {
 public:
  static MultigradedModule quotientRing(MonomialIdeal I) {
    MonomialIdeal zero = MonomialIdeal::zero(I.arity());
    return MultigradedModule(ModuleKind::QuotientRing, std::move(I), std::move(zero));
  }
  static MultigradedModule ideal(MonomialIdeal I) {
    MonomialIdeal zero = MonomialIdeal::zero(I.arity());
    return MultigradedModule(ModuleKind::Ideal, std::move(I), std::move(zero));
  }
  static MultigradedModule idealQuotient(MonomialIdeal I, MonomialIdeal J) {
    if (I.arity() != J.arity()) throw std::invalid_argument("idealQuotient: arity mismatch");
    if (!containsIdeal(I, J)) throw std::invalid_argument("idealQuotient: J is not contained in I");
    return MultigradedModule(ModuleKind::IdealQuotient, std::move(I), std::move(J));
  }

  ModuleKind kind() const { return kind_; }
  int arity() const { return I_.arity(); }
  const MonomialIdeal& top() const { return I_; }
  const MonomialIdeal& bottom() const { return J_; }

  bool isZero() const {
    switch (kind_) {
      case ModuleKind::QuotientRing: return I_.isUnit();
      case ModuleKind::Ideal: return I_.isZero();
      case ModuleKind::IdealQuotient: return I_ == J_;
    }
    return false;
  }

  bool basisAt(const ExponentVector& b) const {
    if (!b.isNonnegative()) return false;
    switch (kind_) {
      case ModuleKind::QuotientRing: return !contains(I_, b);
      case ModuleKind::Ideal: return contains(I_, b);
      case ModuleKind::IdealQuotient: return contains(I_, b) && !contains(J_, b);
    }
    return false;
  }

  // Componentwise lcm of all participating generators; Betti degrees and
  // characteristic posets live inside [0, bound].
  ExponentVector degreeBound() const {
    ExponentVector g = I_.lcmOfGenerators();
    if (kind_ == ModuleKind::IdealQuotient) g = ExponentVector::join(g, J_.lcmOfGenerators());
    return g;
  }

  std::string describe() const {
    switch (kind_) {
      case ModuleKind::QuotientRing: return "S/I";
      case ModuleKind::Ideal: return "I";
      case ModuleKind::IdealQuotient: return "I/J";
    }
    return "?";
  }

 private:
  MultigradedModule(ModuleKind kind, MonomialIdeal I, MonomialIdeal J)
      : kind_(kind), I_(std::move(I)), J_(std::move(J)) {}
  ModuleKind kind_;
  MonomialIdeal I_;
  MonomialIdeal J_;
};

namespace detail {

inline std::vector<std::size_t> gridStrides(const std::vector<long>& dims) {
  const int n = static_cast<int>(dims.size());
  std::vector<std::size_t> strides(static_cast<std::size_t>(n), 1);
  for (int i = n - 2; i >= 0; --i)
    strides[static_cast<std::size_t>(i)] =
        strides[static_cast<std::size_t>(i + 1)] *
        (static_cast<std::size_t>(dims[static_cast<std::size_t>(i + 1)]) + 1);
  return strides;
}

// x^b in I for every b in [0, dims], as a flat grid in scan order: upward
// closure of the generator marks; every downward neighbour precedes its cell.
inline std::vector<char> membershipGrid(const MonomialIdeal& I, const std::vector<long>& dims,
                                        const std::vector<std::size_t>& strides) {
  const std::size_t cells = boxCellCount(dims);
  std::vector<char> in(cells, 0);
  const int n = static_cast<int>(dims.size());
  for (const auto& g : I.generators()) {
    std::size_t idx = 0;
    bool inside = true;
    for (int i = 0; i < n && inside; ++i) {
      long e = toLong(g[i]);
      if (e > dims[static_cast<std::size_t>(i)]) inside = false;
      else idx += static_cast<std::size_t>(e) * strides[static_cast<std::size_t>(i)];
    }
    if (inside) in[idx] = 1;
  }
  std::size_t idx = 0;
  scanBox(dims, [&](const std::vector<long>& pt) {
    if (!in[idx]) {
      for (int i = 0; i < n; ++i)
        if (pt[static_cast<std::size_t>(i)] > 0 && in[idx - strides[static_cast<std::size_t>(i)]]) {
          in[idx] = 1;
          break;
        }
    }
    ++idx;
  });
  return in;
}

// K-basis indicator of M over [0, dims].
inline std::vector<char> basisGrid(const MultigradedModule& M, const std::vector<long>& dims,
                                   const std::vector<std::size_t>& strides) {
  std::vector<char> inTop = membershipGrid(M.top(), dims, strides);
  switch (M.kind()) {
    case ModuleKind::QuotientRing: {
      for (auto& c : inTop) c = !c;
      return inTop;
    }
    case ModuleKind::Ideal:
      return inTop;
    case ModuleKind::IdealQuotient: {
      std::vector<char> inBottom = membershipGrid(M.bottom(), dims, strides);
      for (std::size_t j = 0; j < inTop.size(); ++j) inTop[j] = inTop[j] && !inBottom[j];
      return inTop;
    }
  }
  return inTop;
}

}  // namespace detail

}  // namespace idealab
