#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lesac/explanation.hpp"
#include "lesac/kb_frontend.hpp"

namespace lesac {

/// Everything computed from one KB under one preference setting.
struct Analysis {
  KnowledgeBase kb;  // grounded, synthesized, transposition-closed
  ValidationReport report;
  ArgumentSet args;
  std::vector<Attack> attacks;
  DefeatGraph graph;
  Link link = Link::Last;
  SetMode mode = SetMode::Elitist;

  std::vector<Extension> extensions(SemanticsKind s) const;  // conclusions attached
  Extension grounded() const;
  std::vector<Formula> conclusions(SemanticsKind s, Stance stance) const;
};

struct AnalysisOptions {
  Link link = Link::Last;
  SetMode mode = SetMode::Elitist;
  DefeatTarget defeat_target = DefeatTarget::Subargument;
  std::size_t cap = kDefaultArgumentCap;
  /// Stop after validation when the KB is not well-defined.
  bool stop_on_invalid = true;
};

/// prepare_kb, validate_kb, then argument construction, attacks and defeats.
/// Argument-level checks (Pref guard, obligation cancellation) are appended
/// to the report.
Analysis analyze(const KnowledgeBase& parsed, const AnalysisOptions& opt = {});

enum class Command { Validate, Conclusions, Explain, Graph, Check };
enum class OutputFormat { Text, Json, Dot };

struct RunConfig {
  std::string kb_path;
  Command command = Command::Conclusions;
  Link link = Link::Last;
  SetMode setcomp = SetMode::Elitist;
  Stance stance = Stance::Skeptical;
  SemanticsKind semantics = SemanticsKind::Grounded;
  std::optional<std::string> target;
  OutputFormat output = OutputFormat::Text;
  std::optional<std::size_t> extension_index;
  bool verbose = false;
  DefeatTarget defeat_target = DefeatTarget::Subargument;
};

struct RunResult {
  int exit_code = 0;  // 0 ok, 1 invalid KB, failed check or size cap, 2 query failure, 3 KB load or parse error
  std::string out;
  std::string err;
};

RunResult run(const RunConfig& cfg);

}  // namespace lesac
