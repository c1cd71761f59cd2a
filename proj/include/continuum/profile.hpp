#pragma once

#include "continuum/context.hpp"
#include "continuum/dimension.hpp"
#include "continuum/fca.hpp"
#include "continuum/registry.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace continuum {

using FeatureSet = std::set<std::string>;
using FeaturesByDimension = std::map<Dimension, FeatureSet>;

/// One KG's exhibited features in each dimension it was analysed under.
struct KgProfile {
  std::string kg;
  FeaturesByDimension features;
};

/// The right-hand side of affords(KG, community, task): what a community
/// needs from a KG for one task.
struct RequirementSet {
  std::string community;
  std::string task;
  FeaturesByDimension required;
};

struct FitnessReport {
  std::string kg;
  std::string community;
  std::string task;
  FeaturesByDimension satisfied;
  FeaturesByDimension gap;
  FeaturesByDimension surplus;
  bool fit = false;
};

struct CostModel {
  double add_weight = 1.0;
  double remove_weight = 0.0;
  std::map<std::string, double> overrides;
};

struct DimensionDelta {
  FeatureSet add;
  FeatureSet remove;

  friend bool operator==(const DimensionDelta&, const DimensionDelta&) = default;
};

using TransformationDelta = std::map<Dimension, DimensionDelta>;

/// Throws Error{"unknown-object"} if some context lacks `kg`, and
/// Error{"invalid-dimension"} for a combined context.
KgProfile profile_of(std::span<const FormalContext> contexts, const std::string& kg);

/// Throws Error{"unknown-feature"} if a required feature is not registered
/// under the dimension it is required in.
FitnessReport evaluate_fitness(const KgProfile& profile, const RequirementSet& req,
                               const FeatureRegistry& registry);

double gap_cost(const FitnessReport& report, const CostModel& model);

/// Throws Error{"unknown-object"}.
std::size_t object_concept(const ConceptLattice& lattice, const std::string& kg);
std::size_t common_position(const ConceptLattice& lattice, std::span<const std::string> kgs);

/// Throws Error{"unknown-feature"} for unregistered features on either side.
TransformationDelta transformation_delta(const KgProfile& source,
                                         const RequirementSet& target,
                                         const FeatureRegistry& registry);
TransformationDelta transformation_delta(const KgProfile& source, const KgProfile& target,
                                         const FeatureRegistry& registry);

// JSON carriers.
RequirementSet parse_requirement_set(std::string_view text);
CostModel parse_cost_model(std::string_view text);
std::string fitness_report_to_json(const FitnessReport& report,
                                   std::optional<double> cost = std::nullopt,
                                   int indent = 2);
std::string delta_to_json(const TransformationDelta& delta, const std::string& source,
                          const std::string& target, int indent = 2);

}  // namespace continuum
