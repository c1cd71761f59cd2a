#pragma once

#include "continuum/context.hpp"
#include "continuum/dimension.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace continuum {

struct GoldenConcept {
  std::string label;
  std::vector<std::string> objects;
  std::vector<std::string> attributes;
};

/// The embedded ten-KG provenance case study.
struct ProvenanceCorpus {
  /// Semantic property, semantic affordance, pragmatic property, pragmatic
  /// affordance, in that order.
  std::vector<FormalContext> contexts;
  FormalContext combined;
  std::map<Dimension, std::vector<GoldenConcept>> golden;

  const FormalContext& context(Dimension d) const;
};

/// Raw embedded documents, as shipped under data/.
std::string_view corpus_document();
std::string_view golden_document();

/// FNV-1a 64-bit digest used for the transcription checksums.
std::uint64_t fnv1a64(std::string_view bytes) noexcept;

/// Throws Error{"corpus-corrupt"} when the embedded data fails its recorded
/// checksums or does not parse.
ProvenanceCorpus load_corpus();

/// Builds a corpus from caller-supplied documents (no checksum check).
ProvenanceCorpus load_corpus(std::string_view corpus_json, std::string_view golden_json);

/// Recomputes each dimension's concepts and compares them to the golden
/// legend. Codes: missing-golden-concept (computed, absent from golden),
/// underived-golden-concept (golden, not computed), golden-count-mismatch.
ValidationReport verify_corpus(const ProvenanceCorpus& corpus);

}  // namespace continuum
