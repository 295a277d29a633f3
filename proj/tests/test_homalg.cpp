#include "doctest.h"

#include "idealab/graphs.hpp"
#include "idealab/homalg.hpp"

using namespace idealab;

namespace {
const Field kQ = Field::rationals();
}

TEST_CASE("cosupport") {
  CHECK(cosupport(MultiDegree{-1, 2, 0}) == VariableSet::fromMembers(3, {0}));
  CHECK(cosupport(MultiDegree{0, 0, 0}).empty());
  CHECK(cosupport(MultiDegree{-3, -1}) == VariableSet::all(2));
}

TEST_CASE("degree complexes") {
  auto I = minimalize(2, {ExponentVector{1, 1}});  // (xy)

  auto cx = degreeComplex(I, MultiDegree{0, 0});
  CHECK(cx.facets() == std::vector<std::uint64_t>{0b01, 0b10});  // faces {}, {1}, {2}

  // alpha >= 0 with x^alpha in I: the void complex
  CHECK(degreeComplex(I, MultiDegree{1, 1}).isVoid());
  CHECK(degreeComplex(I, MultiDegree{2, 3}).isVoid());

  // inverting both variables makes the generator a unit, so even the empty
  // face is excluded; one inversion leaves exactly the empty face
  CHECK(degreeComplex(I, MultiDegree{-1, -1}) == SimplicialComplex::voidComplex(2));
  CHECK(degreeComplex(I, MultiDegree{0, -1}) == SimplicialComplex::irrelevantComplex(2));

  // squarefree ideal at alpha = 0: the Stanley-Reisner complex
  Graph c5 = builtinGraph("C5");
  CHECK(degreeComplex(edgeIdeal(c5), MultiDegree{0, 0, 0, 0, 0}) == independenceComplex(c5));

  CHECK_THROWS(degreeComplex(MonomialIdeal::zero(2), MultiDegree{0, 0}));
  CHECK_THROWS(degreeComplex(MonomialIdeal::unit(2), MultiDegree{0, 0}));
}

TEST_CASE("takayamaRank") {
  // S/(x) = K concentrated in degree 0
  auto I1 = minimalize(1, {ExponentVector{1}});
  CHECK(takayamaRank(I1, 0, MultiDegree{0}, kQ) == 1);
  CHECK(takayamaRank(I1, 0, MultiDegree{1}, kQ) == 0);

  // homological index below |CS(alpha)| vanishes
  auto I = minimalize(2, {ExponentVector{1, 1}});
  CHECK(takayamaRank(I, 0, MultiDegree{-1, -1}, kQ) == 0);
  CHECK(takayamaRank(I, 1, MultiDegree{-1, -1}, kQ) == 0);

  // depth(S/(xy)) = 1 is witnessed at i = 1: H^1 is nonzero in degree (0,-1)
  CHECK(takayamaRank(I, 1, MultiDegree{0, -1}, kQ) == 1);
  CHECK(takayamaRank(I, 1, MultiDegree{-1, 0}, kQ) == 1);
  CHECK(takayamaRank(I, 1, MultiDegree{0, 0}, kQ) == 1);
  // ... and i = 0 is silent everywhere on a small scan
  for (long a = -1; a <= 1; ++a)
    for (long b = -1; b <= 1; ++b) CHECK(takayamaRank(I, 0, MultiDegree{a, b}, kQ) == 0);
}

TEST_CASE("bettiDepth ground truths") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<ExponentVector> vars;
    for (int i = 0; i < n; ++i) {
      ExponentVector e(n);
      e[i] = 1;
      vars.push_back(std::move(e));
    }
    auto res = bettiDepth(MultigradedModule::quotientRing(minimalize(n, vars)), kQ);
    CHECK(res.pd == n);
    CHECK(res.depth == 0);
  }

  auto c4 = bettiDepth(MultigradedModule::quotientRing(edgeIdeal(builtinGraph("C4"))), kQ);
  CHECK(c4.depth == 1);
  CHECK(c4.pd == 3);

  // the free module S
  auto s = bettiDepth(MultigradedModule::quotientRing(MonomialIdeal::zero(3)), kQ);
  CHECK(s.pd == 0);
  CHECK(s.depth == 3);

  // the residue field as a module over zero variables
  auto k0 = bettiDepth(MultigradedModule::quotientRing(MonomialIdeal::zero(0)), kQ);
  CHECK(k0.pd == 0);
  CHECK(k0.depth == 0);

  // an ideal as a module: pd(I) = pd(S/I) - 1
  auto asIdeal = bettiDepth(MultigradedModule::ideal(edgeIdeal(builtinGraph("C4"))), kQ);
  CHECK(asIdeal.pd == 2);
  CHECK(asIdeal.depth == 2);

  CHECK_THROWS_WITH_AS(
      bettiDepth(MultigradedModule::quotientRing(MonomialIdeal::unit(2)), kQ),
      doctest::Contains("zero module"), std::invalid_argument);
}

TEST_CASE("Betti table serialization") {
  auto res = bettiDepth(MultigradedModule::quotientRing(
                            minimalize(2, {ExponentVector{1, 0}, ExponentVector{0, 1}})),
                        kQ);
  CHECK(res.table.toCsv() == "i,a1,a2,rank\n0,0,0,1\n1,0,1,1\n1,1,0,1\n2,1,1,1\n");
}

TEST_CASE("koszulHomologyRank agrees with bettiDepth tables") {
  auto I = edgeIdeal(builtinGraph("C4"));
  auto M = MultigradedModule::quotientRing(I);
  auto res = bettiDepth(M, kQ);
  for (const auto& [key, rank] : res.table.ranks) {
    MultiDegree alpha = ExponentVector::fromLongs(key.second);
    CHECK(koszulHomologyRank(M, key.first, alpha, kQ) == rank);
  }
  // nothing lives outside the lcm box: sample the shell
  std::vector<long> bound = M.degreeBound().toLongs();
  for (int j = 0; j < M.arity(); ++j) {
    MultiDegree alpha = ExponentVector::fromLongs(bound);
    alpha[j] = bound[static_cast<std::size_t>(j)] + 1;
    for (long i = 0; i <= M.arity(); ++i) CHECK(koszulHomologyRank(M, i, alpha, kQ) == 0);
  }
}

TEST_CASE("depth sequences") {
  // principal ideal: every variant stays at n - 1
  auto principal = minimalize(2, {ExponentVector{1, 1}});
  for (auto variant : {PowerVariant::Powers, PowerVariant::Closures}) {
    auto seq = depthSequence(principal, 3, variant, kQ);
    for (long d : seq) CHECK(d == 1);
  }

  // C4 is normal, so powers and closures agree; the limit is p = 1
  auto ic4 = edgeIdeal(builtinGraph("C4"));
  CHECK(depthSequence(ic4, 3, PowerVariant::Closures, kQ) == std::vector<long>{1, 1, 1});
  CHECK(depthSequence(ic4, 3, PowerVariant::Powers, kQ) == std::vector<long>{1, 1, 1});

  // triangle: n - l(I) = 0
  auto ic3 = edgeIdeal(builtinGraph("C3"));
  auto seq3 = depthSequence(ic3, 3, PowerVariant::Closures, kQ);
  CHECK(seq3.back() == 0);

  // the successive-quotient variants start at k = 0 with S/I
  auto sq = depthSequence(ic4, 2, PowerVariant::SuccessiveQuotients, kQ);
  REQUIRE(sq.size() == 3);
  CHECK(sq[0] == 1);
  auto csq = depthSequence(ic4, 2, PowerVariant::ClosureSuccessiveQuotients, kQ);
  REQUIRE(csq.size() == 3);
  CHECK(csq[0] == sq[0]);

  CHECK_THROWS(depthSequence(MonomialIdeal::zero(2), 2, PowerVariant::Powers, kQ));
  CHECK_THROWS(depthSequence(MonomialIdeal::unit(2), 2, PowerVariant::Powers, kQ));
}

TEST_CASE("depth over prime fields") {
  auto I = edgeIdeal(builtinGraph("C4"));
  CHECK(bettiDepth(MultigradedModule::quotientRing(I), Field::prime(2)).depth == 1);
  CHECK(bettiDepth(MultigradedModule::quotientRing(I), Field::prime(3)).depth == 1);
}
