#pragma once

#include "continuum/bitset.hpp"
#include "continuum/context.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace continuum {

// Derivation operators. The IndexSet overloads are the working core; the
// name overloads resolve names first and throw unknown-object /
// unknown-attribute.

IndexSet derive_attributes(const FormalContext& ctx, const IndexSet& objects);
IndexSet derive_objects(const FormalContext& ctx, const IndexSet& attributes);
IndexSet close_attributes(const FormalContext& ctx, const IndexSet& attributes);
IndexSet close_objects(const FormalContext& ctx, const IndexSet& objects);

std::vector<std::string> derive_attributes(const FormalContext& ctx,
                                           std::span<const std::string> objects);
std::vector<std::string> derive_objects(const FormalContext& ctx,
                                        std::span<const std::string> attributes);
std::vector<std::string> close_attributes(const FormalContext& ctx,
                                          std::span<const std::string> attributes);

/// Next closed attribute set after `current` in lectic order, where
/// attribute 0 is the most significant position. `nullopt` starts the walk
/// at close(∅); the return is `nullopt` once the full attribute set has been
/// passed. Throws Error{"not-closed"} if `current` is not closed.
std::optional<IndexSet> next_closure(const FormalContext& ctx,
                                     const std::optional<IndexSet>& current);

struct FormalConcept {
  IndexSet extent;
  IndexSet intent;

  friend bool operator==(const FormalConcept&, const FormalConcept&) = default;
};

/// True when `a` precedes `b` in canonical order: smaller extent first, ties
/// broken by comparing the lexicographically sorted extent name lists.
bool canonical_less(const FormalContext& ctx, const FormalConcept& a,
                    const FormalConcept& b);

/// All concepts, in canonical order.
std::vector<FormalConcept> enumerate_concepts(const FormalContext& ctx);

class ConceptLattice {
 public:
  const FormalContext& context() const noexcept { return context_; }
  const std::vector<FormalConcept>& concepts() const noexcept { return concepts_; }
  const FormalConcept& concept_at(std::size_t i) const { return concepts_.at(i); }
  std::size_t size() const noexcept { return concepts_.size(); }

  /// (lower, upper) index pairs of the cover relation, sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const noexcept {
    return covers_;
  }
  /// Indices of concepts covering / covered by `i`, ascending.
  const std::vector<std::size_t>& upper_covers(std::size_t i) const { return uppers_.at(i); }
  const std::vector<std::size_t>& lower_covers(std::size_t i) const { return lowers_.at(i); }

  std::size_t top() const noexcept { return top_; }
  std::size_t bottom() const noexcept { return bottom_; }

  /// Index of the concept with this extent, if it is one.
  std::optional<std::size_t> find_by_extent(const IndexSet& extent) const;
  /// Index of the concept generated by an arbitrary object set.
  std::size_t concept_of_objects(const IndexSet& objects) const;
  std::size_t concept_of_attributes(const IndexSet& attributes) const;

  bool leq(std::size_t i, std::size_t j) const;

  std::string id(std::size_t i) const { return "c" + std::to_string(i); }

 private:
  friend ConceptLattice build_lattice(const FormalContext& ctx);

  FormalContext context_;
  std::vector<FormalConcept> concepts_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
  std::vector<std::vector<std::size_t>> uppers_;
  std::vector<std::vector<std::size_t>> lowers_;
  std::map<IndexSet, std::size_t> by_extent_;
  std::size_t top_ = 0;
  std::size_t bottom_ = 0;
};

ConceptLattice build_lattice(const FormalContext& ctx);

/// Throw Error{"index-out-of-range"} for bad indices.
std::size_t meet(const ConceptLattice& lattice, std::size_t i, std::size_t j);
std::size_t join(const ConceptLattice& lattice, std::size_t i, std::size_t j);

/// Lattice JSON export with canonical ids "c0", "c1", ...
std::string lattice_to_json(const ConceptLattice& lattice, int indent = 2);

struct Implication {
  IndexSet premise;
  IndexSet conclusion;

  friend bool operator==(const Implication&, const Implication&) = default;
};

/// Name-based constructor; the premise is removed from the conclusion.
Implication make_implication(const FormalContext& ctx,
                             std::span<const std::string> premise,
                             std::span<const std::string> conclusion);

bool implication_holds(const FormalContext& ctx, const Implication& imp);

/// Duquenne-Guigues stem base, premises in lectic order.
std::vector<Implication> implication_basis(const FormalContext& ctx);

/// Smallest superset of `attributes` closed under every implication.
IndexSet close_under(std::span<const Implication> implications, IndexSet attributes);

/// Whether `imp` is a semantic consequence of `implications`.
bool follows_from(std::span<const Implication> implications, const Implication& imp);

std::string implications_to_json(const FormalContext& ctx,
                                 std::span<const Implication> implications, int indent = 2);
std::string implications_to_text(const FormalContext& ctx,
                                 std::span<const Implication> implications);

}  // namespace continuum
