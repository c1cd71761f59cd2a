#include "continuum/cli.hpp"

#include "continuum/context.hpp"
#include "continuum/corpus.hpp"
#include "continuum/error.hpp"
#include "continuum/fca.hpp"
#include "continuum/profile.hpp"
#include "continuum/registry.hpp"
#include "continuum/render.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace continuum::cli {

namespace {

constexpr const char* kBuiltin = "builtin";

struct Invocation {
  std::vector<std::string> contexts;
  std::string corpus;
  std::string dimension;
  std::string format;
  std::string labels = "id";
  std::string out;
  std::string kg;
  std::string to_kg;
  std::string require;
  std::string cost;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("unreadable-file", "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ContextFormat detect_format(const std::string& path, const std::string& text) {
  const auto ext = std::filesystem::path(path).extension().string();
  if (ext == ".json") return ContextFormat::Json;
  if (ext == ".cxt") return ContextFormat::Cxt;
  const auto first = text.find_first_not_of(" \t\r\n");
  return first != std::string::npos && text[first] == '{' ? ContextFormat::Json
                                                          : ContextFormat::Cxt;
}

Error usage(const std::string& msg) { return Error("usage", msg); }

/// Dimension flag rule: required for CXT and builtin corpus input,
/// rejected for JSON input which carries its own tag.
FormalContext load_context(const std::string& path, const std::string& dimension_flag) {
  const auto text = read_file(path);
  if (detect_format(path, text) == ContextFormat::Json) {
    if (!dimension_flag.empty()) {
      throw usage("--dimension is not accepted for JSON contexts; the document carries it");
    }
    return parse_json_context(text);
  }
  if (dimension_flag.empty()) throw usage("--dimension is required for CXT contexts");
  return parse_cxt(text, require_dimension(dimension_flag));
}

FormalContext single_context(const Invocation& inv) {
  if (!inv.corpus.empty()) {
    if (inv.corpus != kBuiltin) throw usage("--corpus only accepts 'builtin'");
    if (!inv.contexts.empty()) throw usage("--corpus and --context are mutually exclusive");
    if (inv.dimension.empty()) throw usage("--dimension is required with --corpus builtin");
    return load_corpus().context(require_dimension(inv.dimension));
  }
  if (inv.contexts.size() != 1) throw usage("exactly one --context is required");
  return load_context(inv.contexts.front(), inv.dimension);
}

std::vector<FormalContext> profile_contexts(const Invocation& inv) {
  if (!inv.corpus.empty()) {
    if (inv.corpus != kBuiltin) throw usage("--corpus only accepts 'builtin'");
    if (!inv.contexts.empty()) throw usage("--corpus and --context are mutually exclusive");
    return load_corpus().contexts;
  }
  if (inv.contexts.empty()) throw usage("--context or --corpus builtin is required");
  if (!inv.dimension.empty()) {
    throw usage("--dimension is not accepted here; pass JSON contexts that carry their tag");
  }
  std::vector<FormalContext> out;
  for (const auto& path : inv.contexts) {
    const auto text = read_file(path);
    if (detect_format(path, text) != ContextFormat::Json) {
      throw usage("'" + path + "': multi-context commands take JSON contexts only");
    }
    out.push_back(parse_json_context(text));
  }
  return out;
}

void emit(const Invocation& inv, const std::string& payload, std::ostream& out) {
  if (inv.out.empty()) {
    out << payload;
    return;
  }
  std::ofstream file(inv.out, std::ios::binary);
  if (!file) throw Error("unwritable-file", "cannot write '" + inv.out + "'");
  file << payload;
}

std::string report_to_json(const ValidationReport& report) {
  using nlohmann::ordered_json;
  auto list = [](const std::vector<Diagnostic>& ds) {
    auto arr = ordered_json::array();
    for (const auto& d : ds) {
      ordered_json item{{"code", d.code}, {"message", d.message}};
      if (d.line) item["line"] = *d.line;
      arr.push_back(std::move(item));
    }
    return arr;
  };
  ordered_json doc;
  doc["ok"] = report.ok();
  doc["errors"] = list(report.errors);
  doc["warnings"] = list(report.warnings);
  return doc.dump(2) + "\n";
}

bool styled(const std::ostream& err) {
  return &err == &std::cerr && std::getenv("CONTINUUM_NO_COLOR") == nullptr &&
         ::isatty(STDERR_FILENO) != 0;
}

void diagnose(std::ostream& err, const std::string& message) {
  if (styled(err)) {
    err << "\033[1;31merror:\033[0m " << message << '\n';
  } else {
    err << "error: " << message << '\n';
  }
}

void add_context_options(CLI::App& sub, Invocation& inv) {
  sub.add_option("--context", inv.contexts, "Context file (.cxt or .json)");
  sub.add_option("--corpus", inv.corpus, "Use the embedded corpus ('builtin')");
  sub.add_option("--dimension", inv.dimension, "Dimension tag for CXT or corpus input");
  sub.add_option("--out", inv.out, "Write output to a file instead of stdout");
}

int dispatch(const std::string& command, const std::string& corpus_action,
             const Invocation& inv, std::ostream& out, std::ostream& err) {
  if (command == "lattice") {
    if (!inv.format.empty() && inv.format != "json") throw usage("lattice only emits json");
    emit(inv, lattice_to_json(build_lattice(single_context(inv))), out);
  } else if (command == "legend") {
    const auto rows = legend(build_lattice(single_context(inv)));
    if (inv.format.empty() || inv.format == "md") {
      emit(inv, legend_markdown(rows), out);
    } else if (inv.format == "csv") {
      emit(inv, legend_csv(rows), out);
    } else {
      throw usage("legend --format must be md or csv");
    }
  } else if (command == "dot") {
    DotLabels labels;
    if (inv.labels == "id") {
      labels = DotLabels::IdOnly;
    } else if (inv.labels == "intent") {
      labels = DotLabels::IdAndIntent;
    } else {
      throw usage("dot --labels must be id or intent");
    }
    emit(inv, to_dot(build_lattice(single_context(inv)), labels), out);
  } else if (command == "implications") {
    const auto ctx = single_context(inv);
    const auto basis = implication_basis(ctx);
    if (inv.format.empty() || inv.format == "json") {
      emit(inv, implications_to_json(ctx, basis), out);
    } else if (inv.format == "text") {
      emit(inv, implications_to_text(ctx, basis), out);
    } else {
      throw usage("implications --format must be json or text");
    }
  } else if (command == "validate") {
    ValidationReport report;
    if (!inv.corpus.empty()) {
      report = validate_context(single_context(inv));
    } else {
      if (inv.contexts.size() != 1) throw usage("exactly one --context is required");
      const auto& path = inv.contexts.front();
      const auto text = read_file(path);
      const auto format = detect_format(path, text);
      if (format == ContextFormat::Json && !inv.dimension.empty()) {
        throw usage("--dimension is not accepted for JSON contexts; the document carries it");
      }
      if (format == ContextFormat::Cxt && inv.dimension.empty()) {
        throw usage("--dimension is required for CXT contexts");
      }
      report = validate_document(
          text, format,
          format == ContextFormat::Cxt ? require_dimension(inv.dimension) : Dimension::Combined);
    }
    emit(inv, report_to_json(report), out);
    if (!report.ok()) {
      for (const auto& e : report.errors) {
        diagnose(err, e.code + (e.line ? " (line " + std::to_string(*e.line) + ")" : "") +
                          ": " + e.message);
      }
      return kExitInputError;
    }
  } else if (command == "fit") {
    if (inv.kg.empty() || inv.require.empty()) throw usage("fit needs --kg and --require");
    const auto contexts = profile_contexts(inv);
    const auto registry = FeatureRegistry::from_contexts(contexts);
    const auto req = parse_requirement_set(read_file(inv.require));
    const auto report = evaluate_fitness(profile_of(contexts, inv.kg), req, registry);
    std::optional<double> cost;
    if (!inv.cost.empty()) cost = gap_cost(report, parse_cost_model(read_file(inv.cost)));
    emit(inv, fitness_report_to_json(report, cost), out);
  } else if (command == "delta") {
    if (inv.kg.empty()) throw usage("delta needs --kg");
    if (inv.to_kg.empty() == inv.require.empty()) {
      throw usage("delta needs exactly one of --to or --require");
    }
    const auto contexts = profile_contexts(inv);
    const auto registry = FeatureRegistry::from_contexts(contexts);
    const auto source = profile_of(contexts, inv.kg);
    if (!inv.to_kg.empty()) {
      const auto target = profile_of(contexts, inv.to_kg);
      emit(inv, delta_to_json(transformation_delta(source, target, registry), source.kg, target.kg),
           out);
    } else {
      const auto req = parse_requirement_set(read_file(inv.require));
      emit(inv,
           delta_to_json(transformation_delta(source, req, registry), source.kg,
                         req.community + " / " + req.task),
           out);
    }
  } else if (command == "corpus") {
    if (corpus_action == "export") {
      if (inv.dimension.empty()) throw usage("corpus export needs --dimension");
      const auto corpus = load_corpus();
      const auto& ctx = corpus.context(require_dimension(inv.dimension));
      if (inv.format.empty() || inv.format == "json") {
        emit(inv, serialize_json_context(ctx), out);
      } else if (inv.format == "cxt") {
        emit(inv, serialize_cxt(ctx), out);
      } else {
        throw usage("corpus export --format must be cxt or json");
      }
    } else if (corpus_action == "verify") {
      const auto report = verify_corpus(load_corpus());
      emit(inv, report_to_json(report), out);
      if (!report.ok()) {
        for (const auto& e : report.errors) diagnose(err, e.code + ": " + e.message);
        return kExitInternalError;
      }
    } else {
      throw usage("corpus needs a subcommand: export or verify");
    }
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Characterise knowledge graphs with formal concept analysis", "continuum"};
  app.require_subcommand(1, 1);
  Invocation inv;

  auto* lattice = app.add_subcommand("lattice", "Concept lattice of a context as JSON");
  add_context_options(*lattice, inv);
  lattice->add_option("--format", inv.format, "json");

  auto* legend_cmd = app.add_subcommand("legend", "Concept legend table");
  add_context_options(*legend_cmd, inv);
  legend_cmd->add_option("--format", inv.format, "md or csv");

  auto* dot = app.add_subcommand("dot", "Layered Hasse diagram in DOT");
  add_context_options(*dot, inv);
  dot->add_option("--labels", inv.labels, "id or intent");

  auto* implications = app.add_subcommand("implications", "Stem base of attribute implications");
  add_context_options(*implications, inv);
  implications->add_option("--format", inv.format, "json or text");

  auto* validate = app.add_subcommand("validate", "Check a context document");
  add_context_options(*validate, inv);

  auto* fit = app.add_subcommand("fit", "Fitness of a KG against a requirement set");
  add_context_options(*fit, inv);
  fit->add_option("--kg", inv.kg, "Knowledge graph (object) name");
  fit->add_option("--require", inv.require, "Requirement set JSON");
  fit->add_option("--cost", inv.cost, "Cost model JSON");

  auto* delta = app.add_subcommand("delta", "Feature delta from one KG to a target");
  add_context_options(*delta, inv);
  delta->add_option("--kg", inv.kg, "Source knowledge graph");
  delta->add_option("--to", inv.to_kg, "Target knowledge graph");
  delta->add_option("--require", inv.require, "Target requirement set JSON");

  auto* corpus = app.add_subcommand("corpus", "Embedded provenance corpus");
  corpus->require_subcommand(1, 1);
  auto* corpus_export = corpus->add_subcommand("export", "Write one corpus context");
  corpus_export->add_option("--dimension", inv.dimension, "Dimension tag");
  corpus_export->add_option("--format", inv.format, "cxt or json");
  corpus_export->add_option("--out", inv.out, "Output file");
  auto* corpus_verify = corpus->add_subcommand("verify", "Check lattices against the golden legends");
  corpus_verify->add_option("--out", inv.out, "Output file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    diagnose(err, e.what());
    return kExitInputError;
  }

  const auto* chosen = app.get_subcommands().front();
  std::string corpus_action;
  if (chosen == corpus) corpus_action = corpus->get_subcommands().front()->get_name();

  try {
    return dispatch(chosen->get_name(), corpus_action, inv, out, err);
  } catch (const Error& e) {
    diagnose(err, e.what());
    return e.code() == "corpus-corrupt" ? kExitInternalError : kExitInputError;
  } catch (const std::exception& e) {
    diagnose(err, std::string("internal: ") + e.what());
    return kExitInternalError;
  }
}

}  // namespace continuum::cli
