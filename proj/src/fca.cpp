#include "continuum/fca.hpp"

#include "continuum/error.hpp"
#include "lectic.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <numeric>

namespace continuum {

IndexSet derive_attributes(const FormalContext& ctx, const IndexSet& objects) {
  IndexSet out = ctx.all_attributes();
  for (auto g : indices_of(objects)) out &= ctx.row(g);
  return out;
}

IndexSet derive_objects(const FormalContext& ctx, const IndexSet& attributes) {
  IndexSet out = ctx.all_objects();
  for (auto m : indices_of(attributes)) out &= ctx.column(m);
  return out;
}

IndexSet close_attributes(const FormalContext& ctx, const IndexSet& attributes) {
  return derive_attributes(ctx, derive_objects(ctx, attributes));
}

IndexSet close_objects(const FormalContext& ctx, const IndexSet& objects) {
  return derive_objects(ctx, derive_attributes(ctx, objects));
}

std::vector<std::string> derive_attributes(const FormalContext& ctx,
                                           std::span<const std::string> objects) {
  return ctx.attribute_names(derive_attributes(ctx, ctx.object_set(objects)));
}

std::vector<std::string> derive_objects(const FormalContext& ctx,
                                        std::span<const std::string> attributes) {
  return ctx.object_names(derive_objects(ctx, ctx.attribute_set(attributes)));
}

std::vector<std::string> close_attributes(const FormalContext& ctx,
                                          std::span<const std::string> attributes) {
  return ctx.attribute_names(close_attributes(ctx, ctx.attribute_set(attributes)));
}

std::optional<IndexSet> next_closure(const FormalContext& ctx,
                                     const std::optional<IndexSet>& current) {
  if (!current) return close_attributes(ctx, ctx.no_attributes());
  if (current->size() != ctx.attribute_count() || close_attributes(ctx, *current) != *current) {
    throw Error("not-closed", "next_closure needs a closed attribute set");
  }
  return detail::lectic_successor(*current,
                                  [&](const IndexSet& s) { return close_attributes(ctx, s); });
}

namespace {

std::vector<std::string> sorted_names(const FormalContext& ctx, const IndexSet& extent) {
  auto names = ctx.object_names(extent);
  std::sort(names.begin(), names.end());
  return names;
}

}  // namespace

bool canonical_less(const FormalContext& ctx, const FormalConcept& a, const FormalConcept& b) {
  const auto ca = a.extent.count();
  const auto cb = b.extent.count();
  if (ca != cb) return ca < cb;
  return sorted_names(ctx, a.extent) < sorted_names(ctx, b.extent);
}

std::vector<FormalConcept> enumerate_concepts(const FormalContext& ctx) {
  std::vector<FormalConcept> concepts;
  for (auto intent = next_closure(ctx, std::nullopt); intent;
       intent = next_closure(ctx, intent)) {
    concepts.push_back({derive_objects(ctx, *intent), *intent});
  }
  // Sort on precomputed keys; extents are pairwise distinct so the order is
  // total.
  using Key = std::pair<std::size_t, std::vector<std::string>>;
  std::vector<Key> keys;
  keys.reserve(concepts.size());
  for (const auto& c : concepts) keys.emplace_back(c.extent.count(), sorted_names(ctx, c.extent));
  std::vector<std::size_t> order(concepts.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  std::vector<FormalConcept> sorted;
  sorted.reserve(concepts.size());
  for (auto i : order) sorted.push_back(std::move(concepts[i]));
  return sorted;
}

ConceptLattice build_lattice(const FormalContext& ctx) {
  ConceptLattice lattice;
  lattice.context_ = ctx;
  lattice.concepts_ = enumerate_concepts(ctx);
  const auto n = lattice.concepts_.size();
  const auto& cs = lattice.concepts_;
  for (std::size_t i = 0; i < n; ++i) lattice.by_extent_.emplace(cs[i].extent, i);

  lattice.uppers_.assign(n, {});
  lattice.lowers_.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    // Canonical order puts every strict superset of extent i after i.
    std::vector<std::size_t> above;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (cs[i].extent.is_proper_subset_of(cs[j].extent)) above.push_back(j);
    }
    for (auto j : above) {
      const bool covered = std::none_of(above.begin(), above.end(), [&](std::size_t k) {
        return cs[k].extent.is_proper_subset_of(cs[j].extent);
      });
      if (covered) {
        lattice.covers_.emplace_back(i, j);
        lattice.uppers_[i].push_back(j);
        lattice.lowers_[j].push_back(i);
      }
    }
  }
  std::sort(lattice.covers_.begin(), lattice.covers_.end());
  for (auto& v : lattice.lowers_) std::sort(v.begin(), v.end());

  lattice.top_ = lattice.by_extent_.at(ctx.all_objects());
  lattice.bottom_ = lattice.by_extent_.at(derive_objects(ctx, ctx.all_attributes()));
  return lattice;
}

std::optional<std::size_t> ConceptLattice::find_by_extent(const IndexSet& extent) const {
  auto it = by_extent_.find(extent);
  if (it == by_extent_.end()) return std::nullopt;
  return it->second;
}

std::size_t ConceptLattice::concept_of_objects(const IndexSet& objects) const {
  return by_extent_.at(close_objects(context_, objects));
}

std::size_t ConceptLattice::concept_of_attributes(const IndexSet& attributes) const {
  return by_extent_.at(derive_objects(context_, attributes));
}

bool ConceptLattice::leq(std::size_t i, std::size_t j) const {
  return concept_at(i).extent.is_subset_of(concept_at(j).extent);
}

namespace {

void check_index(const ConceptLattice& lattice, std::size_t i) {
  if (i >= lattice.size()) {
    throw Error("index-out-of-range", "concept index " + std::to_string(i) + " out of range (" +
                                          std::to_string(lattice.size()) + " concepts)");
  }
}

}  // namespace

std::size_t meet(const ConceptLattice& lattice, std::size_t i, std::size_t j) {
  check_index(lattice, i);
  check_index(lattice, j);
  return *lattice.find_by_extent(lattice.concept_at(i).extent & lattice.concept_at(j).extent);
}

std::size_t join(const ConceptLattice& lattice, std::size_t i, std::size_t j) {
  check_index(lattice, i);
  check_index(lattice, j);
  return lattice.concept_of_attributes(lattice.concept_at(i).intent &
                                       lattice.concept_at(j).intent);
}

std::string lattice_to_json(const ConceptLattice& lattice, int indent) {
  using nlohmann::ordered_json;
  const auto& ctx = lattice.context();
  ordered_json doc;
  auto concepts = ordered_json::array();
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const auto& c = lattice.concept_at(i);
    concepts.push_back(ordered_json{{"id", lattice.id(i)},
                                    {"extent", ctx.object_names(c.extent)},
                                    {"intent", ctx.attribute_names(c.intent)}});
  }
  auto covers = ordered_json::array();
  for (auto [lower, upper] : lattice.covers()) {
    covers.push_back({lattice.id(lower), lattice.id(upper)});
  }
  doc["concepts"] = std::move(concepts);
  doc["covers"] = std::move(covers);
  doc["top"] = lattice.id(lattice.top());
  doc["bottom"] = lattice.id(lattice.bottom());
  return doc.dump(indent) + "\n";
}

}  // namespace continuum
