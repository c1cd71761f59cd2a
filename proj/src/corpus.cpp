#include "continuum/corpus.hpp"

#include "continuum/error.hpp"
#include "continuum/fca.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <array>
#include <set>

namespace continuum {

namespace detail {
extern const std::string_view kCorpusDocument;
extern const std::string_view kGoldenDocument;
}  // namespace detail

namespace {

using nlohmann::json;

// Transcription checksums of data/provenance_corpus.json and
// data/provenance_golden.json.
constexpr std::uint64_t kCorpusChecksum = 0xf377b8c1e31027f3ULL;
constexpr std::uint64_t kGoldenChecksum = 0xe67b56ce2c236a1bULL;

constexpr std::size_t kObjectCount = 10;
constexpr std::array<std::size_t, 4> kAttributeCounts = {14, 10, 7, 11};
constexpr std::size_t kCombinedAttributeCount = 42;

Error corrupt(const std::string& msg) { return Error("corpus-corrupt", msg); }

using ConceptKey = std::pair<std::vector<std::string>, std::vector<std::string>>;

ConceptKey key_of(std::vector<std::string> objects, std::vector<std::string> attributes) {
  std::sort(objects.begin(), objects.end());
  std::sort(attributes.begin(), attributes.end());
  return {std::move(objects), std::move(attributes)};
}

std::string describe(Dimension d, const ConceptKey& key) {
  auto braces = [](const std::vector<std::string>& v) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i];
    return out + "}";
  };
  return std::string(to_string(d)) + ": extent " + braces(key.first) + ", intent " +
         braces(key.second);
}

}  // namespace

const FormalContext& ProvenanceCorpus::context(Dimension d) const {
  for (const auto& ctx : contexts) {
    if (ctx.dimension() == d) return ctx;
  }
  if (d == Dimension::Combined) return combined;
  throw Error("unknown-dimension", "corpus has no context for " + std::string(to_string(d)));
}

std::string_view corpus_document() { return detail::kCorpusDocument; }
std::string_view golden_document() { return detail::kGoldenDocument; }

std::uint64_t fnv1a64(std::string_view bytes) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

ProvenanceCorpus load_corpus(std::string_view corpus_json, std::string_view golden_json) {
  ProvenanceCorpus corpus;
  try {
    const auto doc = json::parse(corpus_json);
    const auto objects = doc.at("objects").get<std::vector<std::string>>();
    for (const auto& tag : doc.at("dimensions")) {
      const auto d = require_dimension(tag.get<std::string>());
      std::vector<std::vector<std::string>> rows;
      for (const auto& g : objects) {
        rows.push_back(doc.at("rows").at(g).at(tag.get<std::string>()).get<std::vector<std::string>>());
      }
      corpus.contexts.push_back(FormalContext::from_rows(d, objects, rows));
    }
    corpus.combined = merge_contexts(corpus.contexts);

    const auto golden = json::parse(golden_json);
    for (const auto& [tag, rows] : golden.items()) {
      auto& out = corpus.golden[require_dimension(tag)];
      for (const auto& row : rows) {
        out.push_back({row.at("label").get<std::string>(),
                       row.at("objects").get<std::vector<std::string>>(),
                       row.at("attributes").get<std::vector<std::string>>()});
      }
    }
  } catch (const json::exception& e) {
    throw corrupt(e.what());
  } catch (const Error& e) {
    throw corrupt(e.what());
  }
  return corpus;
}

ProvenanceCorpus load_corpus() {
  if (fnv1a64(corpus_document()) != kCorpusChecksum) {
    throw corrupt("embedded corpus does not match its recorded checksum");
  }
  if (fnv1a64(golden_document()) != kGoldenChecksum) {
    throw corrupt("embedded golden legends do not match their recorded checksum");
  }
  auto corpus = load_corpus(corpus_document(), golden_document());
  if (corpus.contexts.size() != kAttributeCounts.size()) {
    throw corrupt("expected four per-dimension contexts");
  }
  for (std::size_t i = 0; i < kAttributeCounts.size(); ++i) {
    const auto& ctx = corpus.contexts[i];
    if (ctx.dimension() != kFeatureDimensions[i] || ctx.object_count() != kObjectCount ||
        ctx.attribute_count() != kAttributeCounts[i]) {
      throw corrupt("context for " + std::string(to_string(ctx.dimension())) +
                    " has the wrong shape");
    }
  }
  if (corpus.combined.attribute_count() != kCombinedAttributeCount) {
    throw corrupt("combined context does not have 42 attributes");
  }
  return corpus;
}

ValidationReport verify_corpus(const ProvenanceCorpus& corpus) {
  ValidationReport report;
  for (const auto& ctx : corpus.contexts) {
    const auto d = ctx.dimension();
    std::set<ConceptKey> computed;
    for (const auto& c : enumerate_concepts(ctx)) {
      computed.insert(key_of(ctx.object_names(c.extent), ctx.attribute_names(c.intent)));
    }
    std::set<ConceptKey> golden;
    if (auto it = corpus.golden.find(d); it != corpus.golden.end()) {
      for (const auto& row : it->second) golden.insert(key_of(row.objects, row.attributes));
      if (it->second.size() != computed.size()) {
        report.errors.push_back(
            {"golden-count-mismatch",
             std::string(to_string(d)) + ": " + std::to_string(computed.size()) +
                 " concepts computed, " + std::to_string(it->second.size()) + " golden rows",
             std::nullopt});
      }
    }
    for (const auto& key : computed) {
      if (!golden.contains(key)) {
        report.errors.push_back({"missing-golden-concept", describe(d, key), std::nullopt});
      }
    }
    for (const auto& key : golden) {
      if (!computed.contains(key)) {
        report.errors.push_back({"underived-golden-concept", describe(d, key), std::nullopt});
      }
    }
  }
  return report;
}

}  // namespace continuum
