#include "continuum/profile.hpp"

#include "continuum/error.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <iterator>

namespace continuum {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

FeatureSet set_minus(const FeatureSet& a, const FeatureSet& b) {
  FeatureSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

FeatureSet set_intersection(const FeatureSet& a, const FeatureSet& b) {
  FeatureSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

const FeatureSet& features_in(const FeaturesByDimension& by, Dimension d) {
  static const FeatureSet kEmpty;
  auto it = by.find(d);
  return it == by.end() ? kEmpty : it->second;
}

std::set<Dimension> dimensions_of(const FeaturesByDimension& a, const FeaturesByDimension& b) {
  std::set<Dimension> out;
  for (const auto& [d, _] : a) out.insert(d);
  for (const auto& [d, _] : b) out.insert(d);
  return out;
}

void require_registered(const FeaturesByDimension& by, const FeatureRegistry& registry) {
  for (const auto& [d, features] : by) {
    for (const auto& f : features) {
      if (!registry.contains(f, d)) {
        throw Error("unknown-feature", "feature '" + f + "' is not registered as " +
                                           std::string(to_string(d)));
      }
    }
  }
}

ordered_json by_dimension_json(const FeaturesByDimension& by) {
  ordered_json out = ordered_json::object();
  for (const auto& [d, features] : by) {
    out[std::string(to_string(d))] = std::vector<std::string>(features.begin(), features.end());
  }
  return out;
}

Error violation(const std::string& msg) { return Error("schema-violation", msg); }

double weight_of(const json& v, const std::string& field) {
  if (!v.is_number()) throw violation("'" + field + "' must be a number");
  const auto w = v.get<double>();
  if (!(w >= 0.0)) throw Error("invalid-weight", "'" + field + "' must be non-negative");
  return w;
}

}  // namespace

KgProfile profile_of(std::span<const FormalContext> contexts, const std::string& kg) {
  KgProfile profile{normalize_name(kg), {}};
  for (const auto& ctx : contexts) {
    if (ctx.dimension() == Dimension::Combined) {
      throw Error("invalid-dimension", "profiles are built from per-dimension contexts");
    }
    if (profile.features.contains(ctx.dimension())) {
      throw Error("duplicate-dimension",
                  "two contexts for " + std::string(to_string(ctx.dimension())));
    }
    auto g = ctx.find_object(profile.kg);
    if (!g) {
      throw Error("unknown-object", "'" + kg + "' is not an object of the " +
                                        std::string(to_string(ctx.dimension())) + " context");
    }
    auto names = ctx.attribute_names(ctx.row(*g));
    profile.features[ctx.dimension()] = FeatureSet(names.begin(), names.end());
  }
  return profile;
}

FitnessReport evaluate_fitness(const KgProfile& profile, const RequirementSet& req,
                               const FeatureRegistry& registry) {
  require_registered(req.required, registry);
  FitnessReport report{profile.kg, req.community, req.task, {}, {}, {}, true};
  for (auto d : dimensions_of(profile.features, req.required)) {
    const auto& exhibited = features_in(profile.features, d);
    const auto& required = features_in(req.required, d);
    report.satisfied[d] = set_intersection(required, exhibited);
    report.gap[d] = set_minus(required, exhibited);
    report.surplus[d] = set_minus(exhibited, required);
    if (!report.gap[d].empty()) report.fit = false;
  }
  return report;
}

double gap_cost(const FitnessReport& report, const CostModel& model) {
  auto weight = [&](const std::string& f, double fallback) {
    auto it = model.overrides.find(f);
    return it == model.overrides.end() ? fallback : it->second;
  };
  double cost = 0.0;
  for (const auto& [_, features] : report.gap) {
    for (const auto& f : features) cost += weight(f, model.add_weight);
  }
  for (const auto& [_, features] : report.surplus) {
    for (const auto& f : features) cost += weight(f, model.remove_weight);
  }
  return cost;
}

std::size_t object_concept(const ConceptLattice& lattice, const std::string& kg) {
  const std::string names[] = {kg};
  return common_position(lattice, names);
}

std::size_t common_position(const ConceptLattice& lattice, std::span<const std::string> kgs) {
  return lattice.concept_of_objects(lattice.context().object_set(kgs));
}

TransformationDelta transformation_delta(const KgProfile& source, const RequirementSet& target,
                                         const FeatureRegistry& registry) {
  require_registered(source.features, registry);
  require_registered(target.required, registry);
  TransformationDelta delta;
  for (auto d : dimensions_of(source.features, target.required)) {
    delta[d] = {set_minus(features_in(target.required, d), features_in(source.features, d)), {}};
  }
  return delta;
}

TransformationDelta transformation_delta(const KgProfile& source, const KgProfile& target,
                                         const FeatureRegistry& registry) {
  require_registered(source.features, registry);
  require_registered(target.features, registry);
  TransformationDelta delta;
  for (auto d : dimensions_of(source.features, target.features)) {
    const auto& from = features_in(source.features, d);
    const auto& to = features_in(target.features, d);
    delta[d] = {set_minus(to, from), set_minus(from, to)};
  }
  return delta;
}

RequirementSet parse_requirement_set(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error("invalid-json", e.what());
  }
  if (!doc.is_object()) throw violation("requirement document must be a JSON object");
  RequirementSet req;
  for (const char* key : {"community", "task"}) {
    if (!doc.contains(key) || !doc[key].is_string()) {
      throw violation(std::string("'") + key + "' must be a string");
    }
  }
  req.community = doc["community"].get<std::string>();
  req.task = doc["task"].get<std::string>();
  if (!doc.contains("required") || !doc["required"].is_object()) {
    throw violation("'required' must be an object keyed by dimension");
  }
  for (const auto& [tag, features] : doc["required"].items()) {
    const auto d = require_dimension(tag);
    if (d == Dimension::Combined) {
      throw Error("invalid-dimension", "requirements name one of the four dimensions");
    }
    if (!features.is_array()) throw violation("required." + tag + " must be an array");
    auto& set = req.required[d];
    for (const auto& f : features) {
      if (!f.is_string()) throw violation("required." + tag + " must hold strings");
      set.insert(normalize_name(f.get<std::string>()));
    }
  }
  return req;
}

CostModel parse_cost_model(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error("invalid-json", e.what());
  }
  if (!doc.is_object()) throw violation("cost model must be a JSON object");
  CostModel model;
  for (const auto& [key, value] : doc.items()) {
    if (key == "add_weight") {
      model.add_weight = weight_of(value, key);
    } else if (key == "remove_weight") {
      model.remove_weight = weight_of(value, key);
    } else if (key == "overrides") {
      if (!value.is_object()) throw violation("'overrides' must be an object");
      for (const auto& [feature, w] : value.items()) {
        model.overrides[normalize_name(feature)] = weight_of(w, "overrides." + feature);
      }
    } else {
      throw violation("unknown cost model field '" + key + "'");
    }
  }
  return model;
}

std::string fitness_report_to_json(const FitnessReport& report, std::optional<double> cost,
                                   int indent) {
  ordered_json doc;
  doc["kg"] = report.kg;
  doc["community"] = report.community;
  doc["task"] = report.task;
  doc["fit"] = report.fit;
  doc["satisfied"] = by_dimension_json(report.satisfied);
  doc["gap"] = by_dimension_json(report.gap);
  doc["surplus"] = by_dimension_json(report.surplus);
  if (cost) doc["cost"] = *cost;
  return doc.dump(indent) + "\n";
}

std::string delta_to_json(const TransformationDelta& delta, const std::string& source,
                          const std::string& target, int indent) {
  ordered_json doc;
  doc["source"] = source;
  doc["target"] = target;
  ordered_json dims = ordered_json::object();
  for (const auto& [d, change] : delta) {
    dims[std::string(to_string(d))] = ordered_json{
        {"add", std::vector<std::string>(change.add.begin(), change.add.end())},
        {"remove", std::vector<std::string>(change.remove.begin(), change.remove.end())}};
  }
  doc["delta"] = std::move(dims);
  return doc.dump(indent) + "\n";
}

}  // namespace continuum
