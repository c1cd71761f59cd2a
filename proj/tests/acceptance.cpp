// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include "continuum/cli.hpp"
#include "continuum/context.hpp"
#include "continuum/corpus.hpp"
#include "continuum/fca.hpp"
#include "continuum/profile.hpp"
#include "continuum/registry.hpp"

#include "support/oracles.hpp"

#include <unistd.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace continuum;
using Names = std::vector<std::string>;

namespace {

// Failure messages collected while a criterion runs.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  bool passed() const { return failures_.empty(); }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

using Seconds = std::chrono::duration<double>;

struct Criterion {
  int number;
  std::string title;
  double time_limit_s;  // 0 = none
  std::function<std::string(Checker&)> body;  // returns a short detail note
};

const ProvenanceCorpus& corpus() {
  static const ProvenanceCorpus c = load_corpus();
  return c;
}

Names sorted(Names v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::string golden_lattices(Checker& check) {
  const std::vector<std::pair<Dimension, std::size_t>> expected{
      {Dimension::SemanticProperty, 30},
      {Dimension::SemanticAffordance, 25},
      {Dimension::PragmaticProperty, 10},
      {Dimension::PragmaticAffordance, 24}};
  std::string counts;
  for (auto [d, n] : expected) {
    const auto lattice = build_lattice(corpus().context(d));
    check.expect(lattice.size() == n, std::string(to_string(d)) + " has " +
                                          std::to_string(lattice.size()) + " concepts, expected " +
                                          std::to_string(n));
    counts += (counts.empty() ? "" : "/") + std::to_string(lattice.size());
  }
  const auto report = verify_corpus(corpus());
  for (const auto& e : report.errors) check.expect(false, e.code + ": " + e.message);
  return "concepts " + counts + ", " + std::to_string(report.errors.size()) + " mismatches";
}

std::string feature_counts(Checker& check) {
  std::vector<std::string> universal;
  std::size_t singletons = 0;
  const auto& combined = corpus().combined;
  for (std::size_t m = 0; m < combined.attribute_count(); ++m) {
    const auto n = combined.column(m).count();
    if (n == combined.object_count()) universal.push_back(combined.attributes()[m]);
    if (n == 1) ++singletons;
  }
  check.expect(universal == Names{qualify(Dimension::SemanticAffordance, "attribution"),
                                  qualify(Dimension::PragmaticAffordance, "SPARQL")},
               "universal features differ from {attribution, SPARQL}");
  check.expect(singletons == 10, "single-KG features: " + std::to_string(singletons));
  check.expect(combined.attribute_count() == 42, "combined attribute count");
  return std::to_string(universal.size()) + " universal, " + std::to_string(singletons) +
         " single-KG";
}

std::string spot_concepts(Checker& check) {
  const auto& prag = corpus().context(Dimension::PragmaticProperty);
  check.expect(derive_objects(prag, Names{"PROV-O"}) ==
                   Names{"EU ODP", "DBpedia", "LOV", "Nanopublications"},
               "PROV-O extent");
  const auto& sem_aff = corpus().context(Dimension::SemanticAffordance);
  check.expect(sorted(close_attributes(sem_aff, Names{"scholarly citation"})) ==
                   sorted({"attribution", "source tracking", "scholarly citation",
                           "knowledge curation"}),
               "closure of {scholarly citation}");
  const auto& prag_aff = corpus().context(Dimension::PragmaticAffordance);
  const auto la = build_lattice(prag_aff);
  check.expect(prag_aff.attribute_names(la.concept_at(la.top()).intent) == Names{"SPARQL"},
               "pragmatic-affordance top intent");
  const auto ls = build_lattice(sem_aff);
  check.expect(sem_aff.attribute_names(ls.concept_at(ls.top()).intent) == Names{"attribution"},
               "semantic-affordance top intent");
  return "4 spot checks";
}

std::string oracle_equivalence(Checker& check) {
  std::mt19937 rng(424242);
  const int rounds = 200;
  std::size_t concepts = 0;
  for (int i = 0; i < rounds; ++i) {
    const auto ctx = oracle::random_context(rng, 12, 12);
    const auto table = oracle::table_of(ctx);
    const auto expected = oracle::all_concepts(table, ctx.attribute_count());
    const auto lattice = build_lattice(ctx);
    std::set<oracle::Concept> actual;
    for (const auto& c : enumerate_concepts(ctx)) {
      actual.emplace(oracle::indices(c.extent), oracle::indices(c.intent));
    }
    check.expect(actual == expected && actual.size() == lattice.size(),
                 "concept set differs on random context " + std::to_string(i));
    std::set<std::pair<oracle::Subset, oracle::Subset>> covers;
    for (auto [lo, hi] : lattice.covers()) {
      covers.emplace(oracle::indices(lattice.concept_at(lo).extent),
                     oracle::indices(lattice.concept_at(hi).extent));
    }
    check.expect(covers == oracle::cover_pairs(expected),
                 "cover relation differs on random context " + std::to_string(i));
    concepts += expected.size();
  }
  return std::to_string(rounds) + " contexts, " + std::to_string(concepts) + " concepts";
}

IndexSet random_subset(std::mt19937& rng, std::size_t n) {
  std::bernoulli_distribution bit(0.4);
  IndexSet s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = bit(rng);
  return s;
}

std::string closure_laws(Checker& check) {
  std::mt19937 rng(1717);
  std::size_t cases = 0;
  for (int i = 0; i < 200; ++i) {
    const auto ctx = oracle::random_context(rng, 12, 12);
    for (int k = 0; k < 25; ++k, ++cases) {
      const auto a = random_subset(rng, ctx.object_count());
      const auto b = random_subset(rng, ctx.attribute_count());
      const auto b2 = b | random_subset(rng, ctx.attribute_count());
      const auto cb = close_attributes(ctx, b);
      check.expect(b.is_subset_of(cb), "extensivity");
      check.expect(cb.is_subset_of(close_attributes(ctx, b2)), "monotonicity");
      check.expect(close_attributes(ctx, cb) == cb, "idempotence");
      check.expect(a.is_subset_of(derive_objects(ctx, b)) ==
                       b.is_subset_of(derive_attributes(ctx, a)),
                   "adjunction");
    }
  }
  return std::to_string(cases) + " cases";
}

std::string implication_suite(Checker& check) {
  std::mt19937 rng(31337);
  std::size_t implications = 0;
  std::size_t candidates = 0;
  for (int i = 0; i < 200; ++i) {
    const auto ctx = oracle::random_context(rng, 10, 12);
    const auto basis = implication_basis(ctx);
    for (const auto& imp : basis) check.expect(implication_holds(ctx, imp), "basis unsound");
    const auto table = oracle::table_of(ctx);
    const auto n = ctx.attribute_count();
    for (const auto& [premise, closure] : oracle::valid_implications(table, n, 3)) {
      const auto derived = close_under(basis, oracle::to_index_set(premise, n));
      check.expect(oracle::indices(derived) == closure,
                   "basis incomplete on random context " + std::to_string(i));
      ++candidates;
    }
    implications += basis.size();
  }
  return std::to_string(implications) + " basis implications, " + std::to_string(candidates) +
         " premises checked";
}

std::string fitness_scenarios(Checker& check) {
  const auto registry = FeatureRegistry::from_contexts(corpus().contexts);
  const RequirementSet req{"c", "t",
                           {{Dimension::PragmaticAffordance, {"OWL DL reasoning", "SHACL"}}}};
  const auto eu = evaluate_fitness(profile_of(corpus().contexts, "EU ODP"), req, registry);
  check.expect(eu.fit, "EU ODP should fit");
  const auto wd = evaluate_fitness(profile_of(corpus().contexts, "Wikidata"), req, registry);
  check.expect(!wd.fit && wd.gap.at(Dimension::PragmaticAffordance) ==
                              FeatureSet{"OWL DL reasoning"},
               "Wikidata gap");
  const auto delta = transformation_delta(profile_of(corpus().contexts, "Europeana"),
                                          profile_of(corpus().contexts, "LOV"), registry);
  check.expect(delta.at(Dimension::PragmaticProperty) ==
                   DimensionDelta{{"PROV-O"}, {"OAI-ORE aggregation"}},
               "Europeana -> LOV pragmatic-property delta");
  return "3 scenarios";
}

std::string cli_determinism(Checker& check) {
  namespace fs = std::filesystem;
  const auto dir = fs::temp_directory_path() / ("continuum-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  auto write = [&](const std::string& name, const std::string& content) {
    std::ofstream(dir / name, std::ios::binary) << content;
    return (dir / name).string();
  };
  const auto req = write("req.json", R"({"community":"c","task":"t",
    "required":{"pragmatic-affordance":["OWL DL reasoning","SHACL"]}})");
  const auto cost = write("cost.json", R"({"add_weight":1,"remove_weight":0.5})");
  const auto cxt = write("prag.cxt", serialize_cxt(corpus().context(Dimension::PragmaticProperty)));

  std::vector<std::vector<std::string>> invocations{
      {"corpus", "verify"},
      {"fit", "--corpus", "builtin", "--kg", "Wikidata", "--require", req, "--cost", cost},
      {"delta", "--corpus", "builtin", "--kg", "Europeana", "--to", "LOV"},
      {"delta", "--corpus", "builtin", "--kg", "Europeana", "--require", req},
      {"validate", "--context", cxt, "--dimension", "pragmatic-property"},
  };
  for (auto d : {"semantic-property", "semantic-affordance", "pragmatic-property",
                 "pragmatic-affordance", "combined"}) {
    const std::vector<std::string> src{"--corpus", "builtin", "--dimension", d};
    for (std::vector<std::string> head :
         {std::vector<std::string>{"lattice"}, {"legend", "--format", "md"},
          {"legend", "--format", "csv"}, {"dot"}, {"dot", "--labels", "intent"},
          {"implications"}, {"implications", "--format", "text"}, {"validate"}}) {
      head.insert(head.end(), src.begin(), src.end());
      invocations.push_back(head);
    }
    for (auto format : {"cxt", "json"}) {
      invocations.push_back({"corpus", "export", "--dimension", d, "--format", format});
    }
  }

  for (const auto& args : invocations) {
    std::ostringstream out1, err1, out2, err2;
    const int c1 = cli::run(args, out1, err1);
    const int c2 = cli::run(args, out2, err2);
    std::string line;
    for (const auto& a : args) line += a + " ";
    check.expect(c1 == 0, "exit " + std::to_string(c1) + ": " + line + err1.str());
    check.expect(c1 == c2 && out1.str() == out2.str() && err1.str() == err2.str(),
                 "nondeterministic: " + line);
  }
  fs::remove_all(dir);
  return std::to_string(invocations.size()) + " invocations";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "golden lattice reproduction", 1.0, golden_lattices},
      {2, "universal and single-KG feature counts", 0, feature_counts},
      {3, "spot concepts", 0, spot_concepts},
      {4, "enumeration and covers match brute force", 60.0, oracle_equivalence},
      {5, "Galois and closure laws", 0, closure_laws},
      {6, "implication basis soundness and completeness", 0, implication_suite},
      {7, "fitness scenarios", 0, fitness_scenarios},
      {8, "CLI determinism", 0, cli_determinism},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Checker check;
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    try {
      detail = c.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double elapsed = Seconds(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && elapsed >= c.time_limit_s) {
      check.expect(false, "took " + std::to_string(elapsed) + " s, limit " +
                              std::to_string(c.time_limit_s) + " s");
    }
    const bool ok = check.passed();
    failed += ok ? 0 : 1;
    std::ostringstream timing;
    timing.precision(3);
    timing << std::fixed << elapsed;
    std::cout << (ok ? "PASS" : "FAIL") << "  [" << c.number << "] " << c.title << " (" << detail
              << "; " << timing.str() << " s)\n";
    for (std::size_t i = 0; i < check.failures().size() && i < 10; ++i) {
      std::cout << "        - " << check.failures()[i] << '\n';
    }
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << '\n';
  return failed == 0 ? 0 : 1;
}
