#include "doctest.h"

#include "idealab/suites.hpp"
#include "oracles.hpp"

using namespace idealab;

// Localization of associated primes (exhaustive for small arity):
// Ass(S(P)/I(P)) = { Q in Ass(S/I) : Q <= P }.
TEST_CASE("associated primes localize") {
  std::vector<MonomialIdeal> corpus;
  for (int n = 1; n <= 4; ++n)
    for (const auto& I : allSquarefreeIdeals(n)) corpus.push_back(I);
  for (const auto& I : randomIdealCorpus(60, 4, 2, 101))
    if (!I.isUnit()) corpus.push_back(I);

  for (const auto& I : corpus) {
    auto primes = associatedPrimes(I);
    const int n = I.arity();
    for (std::uint64_t bits = 1; bits < (std::uint64_t(1) << n); ++bits) {
      VariableSet P(n, bits);
      auto local = localize(I, P);
      if (local.ideal.isZero() || local.ideal.isUnit()) {
        // localized away: no Q in Ass(S/I) should fit inside P
        bool any = false;
        for (const auto& Q : primes)
          if (Q.subsetOf(P)) any = true;
        CHECK(!any);
        continue;
      }
      auto localPrimes = associatedPrimes(local.ideal);
      // map the localized primes back to the ambient variables
      std::vector<VariableSet> mapped;
      for (const auto& Q : localPrimes) {
        std::uint64_t mbits = 0;
        for (int v : Q.members())
          mbits |= std::uint64_t(1) << local.newToOld[static_cast<std::size_t>(v)];
        mapped.emplace_back(n, mbits);
      }
      std::sort(mapped.begin(), mapped.end());
      std::vector<VariableSet> expected;
      for (const auto& Q : primes)
        if (Q.subsetOf(P)) expected.push_back(Q);
      CHECK(mapped == expected);
    }
  }
}

// The witness box [0, lcm] must find the same primes as the enlarged box
// [0, lcm + (1,...,1)]; the safety check behind the folklore bound.
TEST_CASE("associated prime witness box is validated against the enlarged box") {
  std::vector<MonomialIdeal> corpus = randomIdealCorpus(80, 3, 3, 202);
  for (int n = 1; n <= 3; ++n)
    for (const auto& I : allSquarefreeIdeals(n)) corpus.push_back(I);
  for (const auto& I : corpus) {
    if (I.isUnit() || I.isZero()) continue;
    ExponentVector big = I.lcmOfGenerators();
    for (int i = 0; i < big.arity(); ++i) big[i] += 1;
    CHECK(associatedPrimes(I) == associatedPrimesWithCap(I, big));
  }
}

// Power membership against independent integer enumeration (n <= 3, k <= 3).
TEST_CASE("power membership is consistent with generator-sum enumeration") {
  auto corpus = randomIdealCorpus(40, 3, 3, 303);
  std::mt19937_64 rng(404);
  for (const auto& I : corpus) {
    for (long k = 1; k <= 3; ++k) {
      auto Ik = power(I, k);
      for (int probe = 0; probe < 8; ++probe) {
        ExponentVector u(I.arity());
        for (int i = 0; i < I.arity(); ++i) u[i] = static_cast<long>(rng() % 12);
        CHECK(contains(Ik, u) == oracles::dominatesSumOfGenerators(I, k, u));
      }
    }
  }
}
