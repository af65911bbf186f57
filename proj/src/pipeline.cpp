#include "lesac/pipeline.hpp"

#include "lesac/error.hpp"
#include "lesac/formula_parser.hpp"
#include "lesac/render.hpp"

namespace lesac {

std::vector<Extension> Analysis::extensions(SemanticsKind s) const {
  std::vector<Extension> out;
  if (s == SemanticsKind::Grounded)
    out.push_back(grounded_extension(graph));
  else
    out = complete_extensions(graph);
  for (auto& e : out) attach_conclusions(e, args);
  return out;
}

Extension Analysis::grounded() const {
  Extension e = grounded_extension(graph);
  attach_conclusions(e, args);
  return e;
}

std::vector<Formula> Analysis::conclusions(SemanticsKind s, Stance stance) const {
  return justified_conclusions(extensions(s), stance);
}

Analysis analyze(const KnowledgeBase& parsed, const AnalysisOptions& opt) {
  Analysis an;
  an.link = opt.link;
  an.mode = opt.mode;
  an.kb = prepare_kb(parsed);
  an.report = validate_kb(an.kb);
  if (!an.report.well_defined && opt.stop_on_invalid) return an;

  an.args = construct_arguments(an.kb, opt.cap);
  for (const auto& v : check_obligation_cancellable(an.args, an.kb))
    an.report.add({"OBLIGATION-NOT-CANCELLABLE",
                   "strict arguments " + an.args[v.a].name() + " (" + an.args[v.a].conclusion.str() + ") and " +
                       an.args[v.b].name() + " (" + an.args[v.b].conclusion.str() + ") clash",
                   {an.args[v.a].name(), an.args[v.b].name()}});
  for (const auto& v : check_pref_guard(an.args, opt.link, opt.mode, an.kb))
    an.report.add({"PREF-GUARD",
                   v.pref.str() + " is declared but " + an.args[v.preferred_arg].name() + " is weaker than " +
                       an.args[v.other_arg].name(),
                   {v.pref.str(), an.args[v.preferred_arg].name(), an.args[v.other_arg].name()}});

  an.attacks = compute_attacks(an.args, an.kb);
  an.graph = build_defeat_graph(an.args, an.attacks, opt.link, opt.mode, an.kb, opt.defeat_target);
  return an;
}

namespace {

RunResult query(const RunConfig& cfg, const Analysis& an) {
  RunResult res;
  const bool json = cfg.output == OutputFormat::Json;

  switch (cfg.command) {
    case Command::Validate:
      res.out = json ? render_validation_json(an.report) : render_validation_text(an.report);
      return res;

    case Command::Conclusions: {
      auto exts = an.extensions(cfg.semantics);
      if (cfg.extension_index) {
        if (*cfg.extension_index >= exts.size())
          return {2, "", "extension index " + std::to_string(*cfg.extension_index) + " out of range (" +
                             std::to_string(exts.size()) + " extensions)\n"};
        exts = {exts[*cfg.extension_index]};
      }
      res.out = json ? render_conclusions_json(an, exts, cfg.stance) : render_conclusions_text(an, exts, cfg.stance);
      return res;
    }

    case Command::Explain: {
      if (!cfg.target) return {2, "", "explain needs --target\n"};
      const Formula target = parse_formula(*cfg.target, an.kb.constants);
      Extension ext;
      if (cfg.extension_index) {
        auto exts = an.extensions(SemanticsKind::Complete);
        if (*cfg.extension_index >= exts.size())
          return {2, "", "extension index " + std::to_string(*cfg.extension_index) + " out of range (" +
                             std::to_string(exts.size()) + " complete extensions)\n"};
        ext = exts[*cfg.extension_index];
      } else {
        ext = an.grounded();
      }
      const Explanation ex = explain(target, ext, an.args, an.graph, an.kb, cfg.verbose);
      res.out = json ? render_explanation_json(an, ex) : render_explanation_text(an, ex);
      return res;
    }

    case Command::Graph:
      if (cfg.output == OutputFormat::Dot)
        res.out = to_dot(an.args, an.graph);
      else
        res.out = json ? render_graph_json(an) : render_graph_text(an);
      return res;

    case Command::Check: {
      CheckSummary c;
      for (const auto& e : an.extensions(SemanticsKind::Complete))
        c.postulates.push_back(check_postulates(e, an.args, an.kb));
      c.ordering = check_reasonable_ordering(an.args, an.link, an.mode, an.kb);
      res.out = json ? render_check_json(c) : render_check_text(c);
      if (!c.ok()) res.exit_code = 1;
      return res;
    }
  }
  return res;
}

}  // namespace

RunResult run(const RunConfig& cfg) {
  KnowledgeBase parsed;
  try {
    parsed = load_kb_file(cfg.kb_path);
  } catch (const Error& e) {
    return {3, "", std::string(to_string(e.code())) + ": " + e.what() + "\n"};
  }

  try {
    AnalysisOptions opt;
    opt.link = cfg.link;
    opt.mode = cfg.setcomp;
    opt.defeat_target = cfg.defeat_target;
    opt.cap = argument_cap_from_env();
    const Analysis an = analyze(parsed, opt);
    if (!an.report.well_defined) {
      RunResult res{1, "", render_validation_text(an.report)};
      if (cfg.command == Command::Validate && cfg.output == OutputFormat::Json)
        res.out = render_validation_json(an.report);
      return res;
    }
    return query(cfg, an);
  } catch (const SyntaxError& e) {
    return {2, "", std::string("SyntaxError: ") + e.what() + "\n"};
  } catch (const Error& e) {
    int code = 2;
    if (e.code() == ErrorCode::ExplosionGuard) code = 1;
    if (e.code() == ErrorCode::UnboundVariable || e.code() == ErrorCode::NoConstants) code = 3;  // grounding
    return {code, "", std::string(to_string(e.code())) + ": " + e.what() + "\n"};
  }
}

}  // namespace lesac
