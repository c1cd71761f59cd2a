#include "continuum/error.hpp"
#include "continuum/fca.hpp"
#include "lectic.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace continuum {

Implication make_implication(const FormalContext& ctx, std::span<const std::string> premise,
                             std::span<const std::string> conclusion) {
  auto p = ctx.attribute_set(premise);
  auto c = ctx.attribute_set(conclusion);
  c -= p;
  return {std::move(p), std::move(c)};
}

bool implication_holds(const FormalContext& ctx, const Implication& imp) {
  return imp.conclusion.is_subset_of(close_attributes(ctx, imp.premise));
}

IndexSet close_under(std::span<const Implication> implications, IndexSet attributes) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& imp : implications) {
      if (imp.premise.is_subset_of(attributes) && !imp.conclusion.is_subset_of(attributes)) {
        attributes |= imp.conclusion;
        changed = true;
      }
    }
  }
  return attributes;
}

bool follows_from(std::span<const Implication> implications, const Implication& imp) {
  return imp.conclusion.is_subset_of(close_under(implications, imp.premise));
}

namespace {

// Fires only implications whose premise is a proper subset of the set being
// closed. The sets closed under this operator are exactly the intents and
// the pseudo-intents once the basis below them is known.
IndexSet pseudo_close(std::span<const Implication> implications, IndexSet attributes) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& imp : implications) {
      if (imp.premise.is_proper_subset_of(attributes) &&
          !imp.conclusion.is_subset_of(attributes)) {
        attributes |= imp.conclusion;
        changed = true;
      }
    }
  }
  return attributes;
}

}  // namespace

std::vector<Implication> implication_basis(const FormalContext& ctx) {
  std::vector<Implication> basis;
  std::optional<IndexSet> current = ctx.no_attributes();
  const auto full = ctx.all_attributes();
  while (current) {
    auto closed = close_attributes(ctx, *current);
    if (closed != *current) basis.push_back({*current, closed - *current});
    if (*current == full) break;
    current = detail::lectic_successor(
        *current, [&](const IndexSet& s) { return pseudo_close(basis, s); });
  }
  return basis;
}

std::string implications_to_json(const FormalContext& ctx,
                                 std::span<const Implication> implications, int indent) {
  using nlohmann::ordered_json;
  auto doc = ordered_json::array();
  for (const auto& imp : implications) {
    doc.push_back(ordered_json{{"premise", ctx.attribute_names(imp.premise)},
                               {"conclusion", ctx.attribute_names(imp.conclusion)}});
  }
  return doc.dump(indent) + "\n";
}

std::string implications_to_text(const FormalContext& ctx,
                                 std::span<const Implication> implications) {
  auto braces = [](const std::vector<std::string>& names) {
    std::string out = "{";
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (i > 0) out += ", ";
      out += names[i];
    }
    return out + "}";
  };
  std::ostringstream out;
  for (const auto& imp : implications) {
    out << braces(ctx.attribute_names(imp.premise)) << " -> "
        << braces(ctx.attribute_names(imp.conclusion)) << '\n';
  }
  return out.str();
}

}  // namespace continuum
