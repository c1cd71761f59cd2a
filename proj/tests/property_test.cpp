// Randomised law checks against the brute-force oracles.

#include "continuum/fca.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

#include <random>

using namespace continuum;

namespace {

IndexSet random_subset(std::mt19937& rng, std::size_t n) {
  std::bernoulli_distribution bit(0.4);
  IndexSet s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = bit(rng);
  return s;
}

}  // namespace

TEST_CASE("Galois connection and closure laws on random contexts") {
  std::mt19937 rng(20240611);
  for (int round = 0; round < 100; ++round) {
    const auto ctx = oracle::random_context(rng, 12, 12);
    for (int k = 0; k < 20; ++k) {
      const auto a = random_subset(rng, ctx.object_count());
      const auto b = random_subset(rng, ctx.attribute_count());
      // A ⊆ B' ⇔ B ⊆ A'
      CHECK(a.is_subset_of(derive_objects(ctx, b)) == b.is_subset_of(derive_attributes(ctx, a)));

      const auto b2 = b | random_subset(rng, ctx.attribute_count());
      const auto cb = close_attributes(ctx, b);
      CHECK(b.is_subset_of(cb));
      CHECK(close_attributes(ctx, cb) == cb);
      CHECK(cb.is_subset_of(close_attributes(ctx, b2)));

      const auto a2 = a | random_subset(rng, ctx.object_count());
      CHECK(derive_attributes(ctx, a2).is_subset_of(derive_attributes(ctx, a)));
      CHECK(derive_objects(ctx, b2).is_subset_of(derive_objects(ctx, b)));
    }
  }
}

TEST_CASE("enumeration and covers match brute force") {
  std::mt19937 rng(99);
  for (int round = 0; round < 60; ++round) {
    const auto ctx = oracle::random_context(rng, 12, 12);
    const auto table = oracle::table_of(ctx);
    const auto expected = oracle::all_concepts(table, ctx.attribute_count());
    const auto lattice = build_lattice(ctx);

    std::set<oracle::Concept> actual;
    for (const auto& c : lattice.concepts()) {
      actual.emplace(oracle::indices(c.extent), oracle::indices(c.intent));
    }
    REQUIRE(actual.size() == lattice.size());
    CHECK(actual == expected);

    std::set<std::pair<oracle::Subset, oracle::Subset>> covers;
    for (auto [lo, hi] : lattice.covers()) {
      covers.emplace(oracle::indices(lattice.concept_at(lo).extent),
                     oracle::indices(lattice.concept_at(hi).extent));
    }
    CHECK(covers == oracle::cover_pairs(expected));
    CHECK(lattice.concept_at(lattice.top()).extent.all());
    CHECK(lattice.concept_at(lattice.bottom()).intent.all());
  }
}

TEST_CASE("stem base premises are exactly the pseudo-intents") {
  std::mt19937 rng(5);
  for (int round = 0; round < 60; ++round) {
    const auto ctx = oracle::random_context(rng, 10, 10);
    const auto basis = implication_basis(ctx);
    std::set<oracle::Subset> premises;
    for (const auto& imp : basis) premises.insert(oracle::indices(imp.premise));
    CHECK(premises.size() == basis.size());
    CHECK(premises == oracle::pseudo_intents(oracle::table_of(ctx), ctx.attribute_count()));
  }
}
