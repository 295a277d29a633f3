// idealab: batch front-end for exact monomial-ideal computations and the
// theorem verification suites.
//
// Exit codes: 0 all pass / success, 1 any fail, 2 only undecided rows,
// 3 usage or input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "idealab/suites.hpp"

namespace {

using namespace idealab;

std::string readFile(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

NamedIdeal loadIdeal(const std::string& path) { return parseIdealString(readFile(path)); }

Graph loadGraph(const std::string& spec) {
  // builtin names (C6, P4, K5, K3,3) or a file in the graph text format
  if (!spec.empty() && (spec[0] == 'C' || spec[0] == 'P' || spec[0] == 'K') &&
      !std::filesystem::exists(spec)) {
    return builtinGraph(spec);
  }
  std::istringstream in(readFile(spec));
  return parseGraph(in);
}

ExponentVector parseMonomialArg(const std::string& text, const std::vector<std::string>& names) {
  // reuse the ideal parser on a one-generator ideal with the same variables
  std::string doc = "vars:";
  for (const auto& n : names) doc += " " + n;
  doc += "\n" + text + "\n";
  NamedIdeal parsed = parseIdealString(doc);
  if (parsed.ideal.isZero()) throw std::runtime_error("empty monomial");
  return parsed.ideal.generators().front();
}

ModuleKind parseKind(const std::string& s) {
  if (s == "quotient") return ModuleKind::QuotientRing;
  if (s == "ideal") return ModuleKind::Ideal;
  if (s == "pair") return ModuleKind::IdealQuotient;
  throw CLI::ValidationError("--module must be quotient, ideal or pair");
}

int emitReport(const SuiteReport& rep, const std::string& outDir, const std::string& format,
               bool timings) {
  std::filesystem::create_directories(outDir);
  const std::string base = outDir + "/" + rep.suite + "-" + rep.paramHash();
  if (format == "csv" || format == "both") {
    std::ofstream csv(base + ".csv");
    csv << rep.toCsv(timings);
  }
  if (format == "json" || format == "both") {
    std::ofstream json(base + ".json");
    json << rep.toJson(timings).dump(2) << "\n";
  }
  std::cout << rep.suite << ": " << rep.count(Verdict::Pass) << " pass, "
            << rep.count(Verdict::Fail) << " fail, " << rep.count(Verdict::Undecided)
            << " undecided (" << rep.rows.size() << " rows) -> " << base << ".{";
  std::cout << (format == "both" ? "csv,json" : format) << "}\n";
  for (const auto& row : rep.rows)
    if (row.verdict != Verdict::Pass)
      std::cout << "  " << verdictName(row.verdict) << " " << row.id << ": " << row.claim << " ["
                << row.computed << "]\n";
  return rep.exitCode();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"idealab: exact workbench for monomial-ideal invariants"};
  app.require_subcommand(1);

  std::string fieldSpec = "q";
  app.add_option("--field", fieldSpec, "coefficient field: q or fp:<p>")->capture_default_str();

  // ---- ideal subcommands ----------------------------------------------
  auto* ideal = app.add_subcommand("ideal", "operations on a single monomial ideal");
  ideal->require_subcommand(1);
  std::string idealPath;
  long kArg = 1;
  std::string byMonomial;
  std::string moduleKind = "quotient";
  std::string secondPath;
  long atLeast = -1;
  std::string certOut, certIn;
  unsigned long long budget = 50'000'000ull;
  std::string bettiOut;

  auto addIdealArg = [&](CLI::App* cmd) {
    cmd->add_option("ideal", idealPath, "ideal file (see README for the format), or - for stdin")
        ->required();
  };

  auto* closure = ideal->add_subcommand("closure", "minimal generators of closure(I^k)");
  addIdealArg(closure);
  closure->add_option("-k,--power", kArg, "power k")->capture_default_str();

  auto* powerCmd = ideal->add_subcommand("power", "minimal generators of I^k");
  addIdealArg(powerCmd);
  powerCmd->add_option("-k,--power", kArg, "power k")->capture_default_str();

  auto* colonCmd = ideal->add_subcommand("colon", "(I : m) for a monomial m");
  addIdealArg(colonCmd);
  colonCmd->add_option("--by", byMonomial, "monomial, e.g. x1^2*x3")->required();

  auto* assCmd = ideal->add_subcommand("ass", "associated primes of S/I");
  addIdealArg(assCmd);

  auto* depthCmd = ideal->add_subcommand("depth", "depth and projective dimension");
  addIdealArg(depthCmd);
  depthCmd->add_option("--module", moduleKind, "quotient (S/I), ideal (I) or pair (I/J)")
      ->capture_default_str();
  depthCmd->add_option("--second", secondPath, "second ideal J for --module pair");
  depthCmd->add_option("--betti", bettiOut, "write the Betti table CSV here");

  auto* sdepthCmd = ideal->add_subcommand("sdepth", "Stanley depth via interval partitions");
  addIdealArg(sdepthCmd);
  sdepthCmd->add_option("--module", moduleKind, "quotient (S/I), ideal (I) or pair (I/J)")
      ->capture_default_str();
  sdepthCmd->add_option("--second", secondPath, "second ideal J for --module pair");
  sdepthCmd->add_option("--atleast", atLeast, "decision mode: is sdepth >= this value?");
  sdepthCmd->add_option("--budget", budget, "search node budget")->capture_default_str();
  sdepthCmd->add_option("--cert", certOut, "write the certificate JSON here");
  sdepthCmd->add_option("--verify", certIn, "verify an interval-partition certificate JSON");

  // ---- graph subcommands ----------------------------------------------
  auto* graph = app.add_subcommand("graph", "graph analysis and edge ideals");
  graph->require_subcommand(1);
  std::string graphSpec;
  auto* analyzeCmd = graph->add_subcommand("analyze", "components, bipartiteness, girth, spread");
  analyzeCmd->add_option("graph", graphSpec, "graph file or builtin name (C6, P4, K5, K3,3)")
      ->required();
  auto* edgeIdealCmd = graph->add_subcommand("edgeideal", "edge ideal in the ideal text format");
  edgeIdealCmd->add_option("graph", graphSpec, "graph file or builtin name")->required();

  // ---- suite / hunt -----------------------------------------------------
  auto* suite = app.add_subcommand("suite", "theorem verification suites");
  auto* suiteRun = suite->add_subcommand("run", "run a named suite");
  std::string suiteName;
  SuiteParams sp;
  std::string outDir = "reports";
  std::string format = "both";
  bool timings = false;
  suiteRun
      ->add_option("name", suiteName,
                   "girth-theorem | closure-sdepth | closure-depth-limit | dnormal | "
                   "ass-containment | normality-bipartite")
      ->required();
  suiteRun->add_option("--corpus,--nmax", sp.nmax, "corpus bound (max vertices/variables)");
  suiteRun->add_option("--kmax", sp.kmax, "power range bound");
  suiteRun->add_option("--mmax", sp.mmax, "multiplier range bound");
  suiteRun->add_option("--seed", sp.seed, "random seed")->capture_default_str();
  suiteRun->add_option("--budget", sp.budget, "sdepth search node budget")->capture_default_str();
  suiteRun->add_option("--samples", sp.samples, "random corpus size")->capture_default_str();
  suiteRun->add_option("--jobs", sp.jobs, "worker threads (0 = all cores)")->capture_default_str();
  suiteRun->add_option("--ideal", sp.idealFile, "single-ideal mode (closure-depth-limit)");
  suiteRun->add_option("--ell", sp.userEll, "analytic spread of --ideal, if not equigenerated");
  suiteRun->add_option("--out", outDir, "report directory")->capture_default_str();
  suiteRun->add_option("--format", format, "csv | json | both")->capture_default_str();
  suiteRun->add_flag("--timings", timings, "include wall-clock columns (breaks byte-for-byte determinism)");

  auto* huntCmd = app.add_subcommand("hunt", "search for counterexamples to sdepth(I(G)^k) >= 2");
  HuntParams hp;
  bool randomMode = false;
  huntCmd->add_flag("--exhaustive", hp.exhaustive, "exhaustive over small graphs (default)");
  huntCmd->add_flag("--random", randomMode, "seeded random sampling instead");
  huntCmd->add_option("--nmax", hp.nmax, "exhaustive: max vertices")->capture_default_str();
  huntCmd->add_option("-n,--vertices", hp.n, "random: vertex count")->capture_default_str();
  huntCmd->add_option("--samples", hp.samples, "random: number of graphs")->capture_default_str();
  huntCmd->add_option("--kmin", hp.kmin, "smallest power")->capture_default_str();
  huntCmd->add_option("--kmax", hp.kmax, "largest power")->capture_default_str();
  huntCmd->add_option("--seed", hp.seed, "random seed")->capture_default_str();
  huntCmd->add_option("--budget", hp.budget, "search node budget")->capture_default_str();
  huntCmd->add_option("--jobs", hp.jobs, "worker threads (0 = all cores)")->capture_default_str();
  huntCmd->add_option("--out", outDir, "report directory")->capture_default_str();
  huntCmd->add_option("--format", format, "csv | json | both")->capture_default_str();
  huntCmd->add_flag("--timings", timings, "include wall-clock columns");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 3;
  }

  try {
    Field field = Field::parse(fieldSpec);

    if (closure->parsed() || powerCmd->parsed()) {
      NamedIdeal in = loadIdeal(idealPath);
      if (kArg < 0) throw std::runtime_error("power must be nonnegative");
      MonomialIdeal out = closure->parsed() ? integralClosurePower(in.ideal, kArg)
                                            : power(in.ideal, kArg);
      std::cout << formatIdeal(out, in.varNames);
      return 0;
    }
    if (colonCmd->parsed()) {
      NamedIdeal in = loadIdeal(idealPath);
      ExponentVector m = parseMonomialArg(byMonomial, in.varNames);
      std::cout << formatIdeal(colon(in.ideal, m), in.varNames);
      return 0;
    }
    if (assCmd->parsed()) {
      NamedIdeal in = loadIdeal(idealPath);
      for (const auto& P : associatedPrimes(in.ideal)) {
        std::string line = "(";
        bool first = true;
        for (int v : P.members()) {
          if (!first) line += ", ";
          first = false;
          line += in.varNames[static_cast<std::size_t>(v)];
        }
        std::cout << line << ")\n";
      }
      return 0;
    }

    auto buildModule = [&](const NamedIdeal& in) {
      ModuleKind kind = parseKind(moduleKind);
      if (kind == ModuleKind::IdealQuotient) {
        if (secondPath.empty()) throw std::runtime_error("--module pair needs --second");
        return MultigradedModule::idealQuotient(in.ideal, loadIdeal(secondPath).ideal);
      }
      return kind == ModuleKind::QuotientRing ? MultigradedModule::quotientRing(in.ideal)
                                              : MultigradedModule::ideal(in.ideal);
    };

    if (depthCmd->parsed()) {
      NamedIdeal in = loadIdeal(idealPath);
      auto res = bettiDepth(buildModule(in), field);
      std::cout << "depth " << res.depth << "\npd " << res.pd << "\n";
      if (!bettiOut.empty()) {
        std::ofstream out(bettiOut);
        out << res.table.toCsv();
      }
      return 0;
    }
    if (sdepthCmd->parsed()) {
      NamedIdeal in = loadIdeal(idealPath);
      MultigradedModule M = buildModule(in);
      CharacteristicPoset P(M);
      if (!certIn.empty()) {
        nlohmann::json j = nlohmann::json::parse(readFile(certIn));
        auto part = certificateFromJson(j);
        auto verdict = verifyDecomposition(M, toDecomposition(part, M.degreeBound()));
        if (verdict.valid) {
          std::cout << "valid, value " << verdict.value << "\n";
          return 0;
        }
        std::cout << "invalid at degree "
                  << (verdict.witness ? verdict.witness->debugString() : "?") << "\n";
        return 1;
      }
      if (atLeast >= 0) {
        auto res = sdepthDecision(P, static_cast<int>(atLeast), SearchBudget{budget});
        if (res.status == DecisionStatus::Undecided) {
          std::cout << "undecided (budget exhausted after " << res.nodes << " nodes)\n";
          return 2;
        }
        std::cout << (res.status == DecisionStatus::True ? "true" : "false") << "\n";
        if (res.status == DecisionStatus::True && !certOut.empty()) {
          std::ofstream out(certOut);
          out << certificateToJson(*res.certificate).dump(2) << "\n";
        }
        return 0;
      }
      auto res = sdepthExact(P, SearchBudget{budget});
      if (res.infinite) {
        std::cout << "sdepth infinity (zero module)\n";
        return 0;
      }
      if (res.status == DecisionStatus::Undecided) {
        std::cout << "undecided: sdepth >= " << res.value << " proven, budget exhausted\n";
        return 2;
      }
      std::cout << "sdepth " << res.value << "\n";
      if (res.certificate && !certOut.empty()) {
        std::ofstream out(certOut);
        out << certificateToJson(*res.certificate).dump(2) << "\n";
      }
      return 0;
    }

    if (analyzeCmd->parsed()) {
      Graph g = loadGraph(graphSpec);
      auto info = analyze(g);
      std::cout << "vertices " << g.vertexCount() << "\nedges " << g.edgeCount() << "\ncomponents "
                << info.componentCount() << "\nbipartite components " << info.bipartiteCount()
                << "\n";
      for (std::size_t i = 0; i < info.components.size(); ++i) {
        const auto& c = info.components[i];
        std::cout << "component " << i + 1 << ": {";
        for (std::size_t j = 0; j < c.vertices.size(); ++j)
          std::cout << (j ? "," : "") << c.vertices[j] + 1;
        std::cout << "} " << (c.bipartite ? "bipartite" : "non-bipartite") << " girth "
                  << (c.girth ? std::to_string(*c.girth) : "infinity") << "\n";
      }
      if (g.edgeCount() > 0)
        std::cout << "analytic spread of I(G): " << analyticSpreadEdgeIdeal(g) << "\n";
      return 0;
    }
    if (edgeIdealCmd->parsed()) {
      Graph g = loadGraph(graphSpec);
      std::cout << formatIdeal(edgeIdeal(g));
      return 0;
    }

    if (suiteRun->parsed()) {
      sp.field = field;
      sp.timings = timings;
      if (!sp.idealFile.empty()) sp.idealText = readFile(sp.idealFile);
      SuiteReport rep = runSuite(suiteName, sp);
      return emitReport(rep, outDir, format, timings);
    }
    if (huntCmd->parsed()) {
      if (randomMode) hp.exhaustive = false;
      SuiteReport rep = hunt(hp);
      return emitReport(rep, outDir, format, timings);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
