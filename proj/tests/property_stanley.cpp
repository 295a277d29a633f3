#include "doctest.h"

#include <atomic>
#include <mutex>
#include <thread>

#include "idealab/suites.hpp"
#include "oracles.hpp"

using namespace idealab;

namespace {

// Run a check over all labeled graphs on n vertices with a small worker
// pool; doctest assertions are not thread-safe, so failures are collected
// and asserted afterwards.
template <typename Fn>
std::vector<std::string> overGraphs(int nmin, int nmax, Fn&& check) {
  std::vector<Graph> graphs;
  for (int n = nmin; n <= nmax; ++n)
    forEachGraph(n, GraphClass::All, [&](const Graph& g, std::uint64_t) { graphs.push_back(g); });
  std::vector<std::string> failures;
  std::mutex mu;
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= graphs.size()) return;
      std::string err = check(graphs[i]);
      if (!err.empty()) {
        std::lock_guard<std::mutex> lock(mu);
        failures.push_back(err);
      }
    }
  };
  unsigned hw = std::thread::hardware_concurrency();
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < std::max(1u, hw); ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return failures;
}

std::string describeGraph(const Graph& g) {
  std::string s = "n=" + std::to_string(g.vertexCount()) + " edges=";
  for (auto [u, v] : g.edges()) s += std::to_string(u + 1) + "-" + std::to_string(v + 1) + " ";
  return s;
}

}  // namespace

// sdepth(S/closure(I^k)) >= p, sdepth(closure(I^k)) >= p + 1 for
// non-bipartite graphs, and sdepth(closure(I^k)/closure(I^{k+1})) >= p,
// on every graph with at most 6 vertices and k <= 2.
TEST_CASE("closure sdepth bounds on all graphs up to 6 vertices") {
  auto failures = overGraphs(1, 6, [&](const Graph& g) -> std::string {
    auto info = analyze(g);
    const int p = info.bipartiteCount();
    auto I = edgeIdeal(g);
    std::vector<MonomialIdeal> cl(4);  // cl[k] = closure(I^k), cl[0] unused
    if (I.isZero()) {
      for (int k = 1; k <= 3; ++k) cl[static_cast<std::size_t>(k)] = I;
    } else {
      NewtonPolyhedron np(I);
      for (int k = 1; k <= 3; ++k)
        cl[static_cast<std::size_t>(k)] = integralClosurePower(np, k);
    }
    for (long k = 1; k <= 2; ++k) {
      auto quo = sdepthDecision(
          CharacteristicPoset(MultigradedModule::quotientRing(cl[static_cast<std::size_t>(k)])), p);
      if (quo.status != DecisionStatus::True)
        return "quo failed: " + describeGraph(g) + "k=" + std::to_string(k);
      if (!info.isBipartite()) {
        auto ide = sdepthDecision(
            CharacteristicPoset(MultigradedModule::ideal(cl[static_cast<std::size_t>(k)])), p + 1);
        if (ide.status != DecisionStatus::True)
          return "ide failed: " + describeGraph(g) + "k=" + std::to_string(k);
      }
      auto two = sdepthDecision(
          CharacteristicPoset(MultigradedModule::idealQuotient(
              cl[static_cast<std::size_t>(k)], cl[static_cast<std::size_t>(k + 1)])),
          p);
      if (two.status != DecisionStatus::True)
        return "twoquo failed: " + describeGraph(g) + "k=" + std::to_string(k);
    }
    return "";
  });
  for (const auto& f : failures) FAIL_CHECK(f);
  CHECK(failures.empty());
}

// sdepth(I^t / I^s) >= p for 0 <= t < s <= 3 on graphs with up to 5 vertices.
TEST_CASE("powers-quotient sdepth bound on all graphs up to 5 vertices") {
  auto failures = overGraphs(1, 5, [&](const Graph& g) -> std::string {
    const int p = analyze(g).bipartiteCount();
    auto I = edgeIdeal(g);
    for (long t = 0; t < 3; ++t)
      for (long s = t + 1; s <= 3; ++s) {
        MultigradedModule M =
            t == 0 ? MultigradedModule::quotientRing(power(I, s))
                   : MultigradedModule::idealQuotient(power(I, t), power(I, s));
        auto res = sdepthDecision(CharacteristicPoset(M), p);
        if (res.status != DecisionStatus::True)
          return "stwoquo failed: " + describeGraph(g) + "t=" + std::to_string(t) +
                 " s=" + std::to_string(s);
      }
    return "";
  });
  for (const auto& f : failures) FAIL_CHECK(f);
  CHECK(failures.empty());
}

// Certificates emitted on the corpus convert to valid decompositions whose
// value meets the requested level.
TEST_CASE("certificate soundness on edge-ideal modules") {
  auto failures = overGraphs(2, 4, [&](const Graph& g) -> std::string {
    if (g.edgeCount() == 0) return "";
    const int p = analyze(g).bipartiteCount();
    auto I = edgeIdeal(g);
    for (long k = 1; k <= 2; ++k) {
      auto M = MultigradedModule::quotientRing(integralClosurePower(I, k));
      auto res = sdepthDecision(CharacteristicPoset(M), p);
      if (res.status != DecisionStatus::True) return "decision failed: " + describeGraph(g);
      auto verdict = verifyDecomposition(M, toDecomposition(*res.certificate, M.degreeBound()));
      if (!verdict.valid || verdict.value < p)
        return "unsound certificate: " + describeGraph(g) + "k=" + std::to_string(k);
    }
    return "";
  });
  for (const auto& f : failures) FAIL_CHECK(f);
  CHECK(failures.empty());
}
